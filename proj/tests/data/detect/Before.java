package org.example.parse;

import org.junit.Test;

import static org.junit.Assert.assertEquals;

public class ParserTest {
    @Test
    public void testParse() {
        Parser p = new Parser();
        assertEquals(42, p.parse("42"));
        assertEquals(-1, p.parse("-1"));
    }

    @Test
    public void testEmptyInput() {
        Parser p = new Parser();
        assertEquals(0, p.parse(""));
    }

    @Test
    public void testUnchanged() {
        assertEquals(1, 1);
    }
}
