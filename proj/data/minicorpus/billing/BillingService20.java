package com.example.billing;

import java.util.*;

/**
 * Service operations for BillingService20.
 */
public class BillingService20 {

    /**
     * Returns the id of the record.
     *
     * @return the id of the record
     */
    public String getRecordIdLocked() {
        // return the cached id if it is available
        if (cachedId != null) {
            return cachedId;
        }
        return this.id;
    }

}
