package org.example.store;

import static org.junit.Assert.assertNotNull;
import static org.junit.Assert.assertNull;

import org.junit.Test;

public class StoreTest {
    @Test
    public void test_get_NotExisting() {
        assertNull(store.get("nope"));
    }

    @Test
    public void deleteindexNotExists() {
        Response r = client.deleteIndex("missing");
        assertNotNull(r.error());
    }
}
