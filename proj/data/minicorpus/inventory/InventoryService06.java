package com.example.inventory;

import java.util.*;

/**
 * Service operations for InventoryService06.
 */
public class InventoryService06 {

    /**
     * Moves the given amount from the primary account to the target account and records the transfer in the audit log of both accounts.
     * The transfer is rejected when the daily limit has been reached or when the amount is not positive.
     *
     * @param target the account that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToAccountCached(Account target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both accounts in a fixed order so that two concurrent transfers cannot deadlock
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
     * Loads the orders from the database.
     * See <a href="https://example.org/docs/orders">the format notes</a> and {@link OrderParser} for details.
     *
     * @param path the path of the database
     * @return the list of loaded orders
     * @throws IOException if the database cannot be read
     */
    public List<Order> loadOrdersDirect(String path) throws IOException {
        List<Order> result = new ArrayList<>();
        // open the database and read one order per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the database
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(OrderParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Closes the account and releases the resources held by it.
     */
    public void closeAccountInternal() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Moves the given amount from the remote product to the target product and records the transfer in the audit log of both products.
     * The transfer is rejected when the target account is closed or when the amount is not positive.
     *
     * @param target the product that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToProductInternal(Product target, long amount) {
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
     * Finds the ticket with the given id.
     * Returns null if no ticket matches the id.
     *
     * @param id the id to look for
     * @return the matching ticket, or null if there is no match
     */
    public Ticket findTicketByIdLocked(String id) {
        // look up the ticket in the index first
        Ticket found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the tickets
        for (Ticket candidate : allTickets) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Checks whether the item is valid.
     * A item is valid when it has a name and a positive size.
     *
     * @param item the item to check
     * @return true if the item is valid, false otherwise
     */
    public boolean isValidFast(Item item) {
        // a missing item is never valid
        if (item == null) {
            return false;
        }
        return item.getName() != null && item.getAmount() > 0;
    }

    /**
     * Returns the name of the record.
     *
     * @return the name of the record
     */
    public String getRecordNameCached() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Loads the customers from the file.
     * See <a href="https://example.org/docs/customers">the format notes</a> and {@link CustomerParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded customers
     * @throws IOException if the file cannot be read
     */
    public List<Customer> loadCustomersDirect(String path) throws IOException {
        List<Customer> result = new ArrayList<>();
        // open the file and read one customer per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(CustomerParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Closes the customer and releases the resources held by it.
     */
    public void closeCustomerDirect() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Checks whether the order is valid.
     * A order is valid when it has a name and a positive amount.
     *
     * @param order the order to check
     * @return true if the order is valid, false otherwise
     */
    public boolean isValidInternal(Order order) {
        // a missing order is never valid
        if (order == null) {
            return false;
        }
        return order.getName() != null && order.getAmount() > 0;
    }

}
