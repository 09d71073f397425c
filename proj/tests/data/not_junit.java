package org.example;

public class Helper {
    public void testHelperFailsQuietly() {
        compute();
    }
}
