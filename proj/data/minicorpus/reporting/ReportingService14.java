package com.example.reporting;

import java.util.*;

/**
 * Service operations for ReportingService14.
 */
public class ReportingService14 {

    /**
     * Updates the status of the product and notifies the listeners.
     *
     * @param product the product to update
     * @param status the new status
     */
    public void updateStatusInternal(Product product, Status status) {
        // log.debug("updating " + product.getId());
        product.setStatus(status);
        // notify all the registered listeners about the change
        for (Listener listener : listeners) {
            listener.onChange(product);
        }
    }

    /**
     * Updates the status of the user and notifies the listeners.
     *
     * @param user the user to update
     * @param status the new status
     */
    public void updateStatusInternal(User user, Status status) {
        // log.debug("updating " + user.getId());
        user.setStatus(status);
        // notify all the registered listeners about the change
        for (Listener listener : listeners) {
            listener.onChange(user);
        }
    }

    /**
     * Finds the record with the given id.
     * Returns null if no record matches the id.
     *
     * @param id the id to look for
     * @return the matching record, or null if there is no match
     */
    public Record findRecordByIdDirect(String id) {
        // look up the record in the index first
        Record found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the records
        for (Record candidate : allRecords) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Sets the limit of the invoice.
     * The new value replaces the previous limit.
     *
     * @param limit the new limit
     */
    public void setInvoiceLimitCached(String limit) {
        // check that the limit is not null
        if (limit == null) {
            throw new IllegalArgumentException("limit");
        }
        this.limit = limit;
    }

    /**
     * Checks whether the product is valid.
     * A product is valid when it has a name and a positive amount.
     *
     * @param product the product to check
     * @return true if the product is valid, false otherwise
     */
    public boolean isValid(Product product) {
        // a missing product is never valid
        if (product == null) {
            return false;
        }
        return product.getName() != null && product.getAmount() > 0;
    }

    /**
     * Loads the orders from the file.
     * See <a href="https://example.org/docs/orders">the format notes</a> and {@link OrderParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded orders
     * @throws IOException if the file cannot be read
     */
    public List<Order> loadOrdersSafely(String path) throws IOException {
        List<Order> result = new ArrayList<>();
        // open the file and read one order per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(OrderParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Returns the owner of the invoice.
     *
     * @return the owner of the invoice
     */
    public String getInvoiceOwner() {
        // return the cached owner if it is available
        if (cachedOwner != null) {
            return cachedOwner;
        }
        return this.owner;
    }

    /**
     * Removes the expired sessions from the cache.
     *
     * @return the number of removed entries
     */
    public int removeExpiredSessionsInternal() {
        // TODO use a priority queue instead of scanning everything
        int removed = 0;
        Iterator<Session> it = cache.values().iterator();
        while (it.hasNext()) {
            // remove the entry when its deadline has passed
            if (it.next().isExpired(clock.now())) {
                it.remove();
                removed++;
            }
        }
        return removed;
    }

    /**
     * Moves the given amount from the primary order to the target order and records the transfer in the audit log of both orders.
     * The transfer is rejected when the daily limit has been reached or when the amount is not positive.
     *
     * @param target the order that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToOrderLocked(Order target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both orders in a fixed order so that two concurrent transfers cannot deadlock
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

    private void resetRecordCacheSafely() {
        // clear the cache so that the next lookup reloads the records
        cache.clear();
        loaded = false;
    }

}
