package org.example.parse;

import org.junit.Before;
import org.junit.Test;

import static org.junit.Assert.assertEquals;

public class ParserTest {
    private Parser parser;

    @Before
    public void setup() {
        parser = new Parser();
    }

    @Test
    public void testParser() {
        assertEquals("a", parser.parse("a").text());
    }

    @Test
    public void testStringEncryption() {
        assertEquals("b", Cipher.encrypt("a"));
    }
}
