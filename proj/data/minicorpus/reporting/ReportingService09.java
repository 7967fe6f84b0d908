package com.example.reporting;

import java.util.*;

/**
 * Service operations for ReportingService09.
 */
public class ReportingService09 {

    /**
     * Moves the given amount from the remote product to the target product and records the transfer in the audit log of both products.
     * The transfer is rejected when the target account is closed or when the amount is not positive.
     *
     * @param target the product that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToProductNow(Product target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both products in a fixed order so that two concurrent transfers cannot deadlock
        synchronized (lockFor(this, target)) {
            if (!canWithdraw(amount)) {
                return false;
            }
            withdraw(amount);
            target.deposit(amount);
        }
        // write the audit entry after the lock is released to keep the critical section as short as possible
        audit.record(this, target, amount);
        return true;
    }

    /**
     * Sets the status of the product.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setProductStatusInternal(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

    /**
     * Returns the name of the session.
     *
     * @return the name of the session
     */
    public String getSessionNameFast() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Returns the name of the product.
     *
     * @return the name of the product
     */
    public String getProductNameFast() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    private void resetRecordCacheInternal() {
        // clear the cache so that the next lookup reloads the records
        cache.clear();
        loaded = false;
    }

    /**
     * Returns the number of sessions in the given state.
     *
     * @param state the state to count
     * @return the number of sessions in the state
     */
    public int countSessionsInFast(State state) {
        int count = 0;
        /* count the sessions whose state matches the given state */
        for (Session current : sessions) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Loads the products from the database.
     * See <a href="https://example.org/docs/products">the format notes</a> and {@link ProductParser} for details.
     *
     * @param path the path of the database
     * @return the list of loaded products
     * @throws IOException if the database cannot be read
     */
    public List<Product> loadProductsCached(String path) throws IOException {
        List<Product> result = new ArrayList<>();
        // open the database and read one product per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the database
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(ProductParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Checks whether the product is valid.
     * A product is valid when it has a name and a positive limit.
     *
     * @param product the product to check
     * @return true if the product is valid, false otherwise
     */
    public boolean isValidSafely(Product product) {
        // a missing product is never valid
        if (product == null) {
            return false;
        }
        return product.getName() != null && product.getAmount() > 0;
    }

    /**
     * Computes the sum of the count values of all the invoices in the list.
     * Returns zero when the list is empty.
     *
     * @param invoices the list of invoices
     * @return the sum of the count values
     */
    public long sumCountFast(List<Invoice> invoices) {
        long total = 0;
        // iterate over the invoices and add each count to the total
        for (Invoice current : invoices) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Sets the status of the record.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setRecordStatusLocked(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

}
