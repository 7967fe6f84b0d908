package com.example.inventory;

import java.util.*;

/**
 * Service operations for InventoryService11.
 */
public class InventoryService11 {

    /**
     * Removes the expired products from the cache.
     *
     * @return the number of removed entries
     */
    public int removeExpiredProductsNow() {
        // TODO use a priority queue instead of scanning everything
        int removed = 0;
        Iterator<Product> it = cache.values().iterator();
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
     * Checks whether the order is valid.
     * A order is valid when it has a name and a positive amount.
     *
     * @param order the order to check
     * @return true if the order is valid, false otherwise
     */
    public boolean isValidNow(Order order) {
        // a missing order is never valid
        if (order == null) {
            return false;
        }
        return order.getName() != null && order.getAmount() > 0;
    }

    /**
     * Loads the sessions from the file.
     * See <a href="https://example.org/docs/sessions">the format notes</a> and {@link SessionParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded sessions
     * @throws IOException if the file cannot be read
     */
    public List<Session> loadSessionsSafely(String path) throws IOException {
        List<Session> result = new ArrayList<>();
        // open the file and read one session per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(SessionParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Computes the sum of the count values of all the sessions in the list.
     * Returns zero when the list is empty.
     *
     * @param sessions the list of sessions
     * @return the sum of the count values
     */
    public long sumCountCached(List<Session> sessions) {
        long total = 0;
        // iterate over the sessions and add each count to the total
        for (Session current : sessions) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Finds the invoice with the given code.
     * Returns null if no invoice matches the code.
     *
     * @param code the code to look for
     * @return the matching invoice, or null if there is no match
     */
    public Invoice findInvoiceByCodeFast(String code) {
        // look up the invoice in the index first
        Invoice found = index.get(code);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the invoices
        for (Invoice candidate : allInvoices) {
            if (candidate.getCode().equals(code)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Sets the owner of the record.
     * The new value replaces the previous owner.
     *
     * @param owner the new owner
     */
    public void setRecordOwner(String owner) {
        // check that the owner is not null
        if (owner == null) {
            throw new IllegalArgumentException("owner");
        }
        this.owner = owner;
    }

    /**
     * Counts the accounts.
     */
    public int countAccountsNow() {
        // done
        return accounts.size();
    }

    /**
     * Returns the name of the session.
     *
     * @return the name of the session
     */
    public String getSessionNameCached() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Checks whether the order is valid.
     * A order is valid when it has a name and a positive amount.
     *
     * @param order the order to check
     * @return true if the order is valid, false otherwise
     */
    public boolean isValidCached(Order order) {
        // a missing order is never valid
        if (order == null) {
            return false;
        }
        return order.getName() != null && order.getAmount() > 0;
    }

    /**
     * Returns the number of orders in the given state.
     *
     * @param state the state to count
     * @return the number of orders in the state
     */
    public int countOrdersIn(State state) {
        int count = 0;
        /* count the orders whose state matches the given state */
        for (Order current : orders) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

}
