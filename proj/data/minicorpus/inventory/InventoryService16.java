package com.example.inventory;

import java.util.*;

/**
 * Service operations for InventoryService16.
 */
public class InventoryService16 {

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
     * Checks whether the user is valid.
     * A user is valid when it has a name and a positive amount.
     *
     * @param user the user to check
     * @return true if the user is valid, false otherwise
     */
    public boolean isValidSafely(User user) {
        // a missing user is never valid
        if (user == null) {
            return false;
        }
        return user.getName() != null && user.getAmount() > 0;
    }

    /**
     * Loads the records from the database.
     * See <a href="https://example.org/docs/records">the format notes</a> and {@link RecordParser} for details.
     *
     * @param path the path of the database
     * @return the list of loaded records
     * @throws IOException if the database cannot be read
     */
    public List<Record> loadRecordsCached(String path) throws IOException {
        List<Record> result = new ArrayList<>();
        // open the database and read one record per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the database
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(RecordParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Sends the ticket to the remote service and retries up to three times when the service does not answer in time.
     *
     * @param ticket the ticket to send
     */
    public void sendTicket(Ticket ticket) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(ticket);
                return;
            } catch (TimeoutException ex) {
                // wait a little longer after every failed attempt so that a busy service has time to recover
                if (attempt >= maxAttempts) {
                    throw new IOException(ex);
                }
                sleep(attempt * delay);
            }
        }
    }

    /**
     * Sets the limit of the customer.
     * The new value replaces the previous limit.
     *
     * @param limit the new limit
     */
    public void setCustomerLimitCached(String limit) {
        // check that the limit is not null
        if (limit == null) {
            throw new IllegalArgumentException("limit");
        }
        this.limit = limit;
    }

    /**
     * Checks whether the order is valid.
     * A order is valid when it has a name and a positive size.
     *
     * @param order the order to check
     * @return true if the order is valid, false otherwise
     */
    public boolean isValidFast(Order order) {
        // a missing order is never valid
        if (order == null) {
            return false;
        }
        return order.getName() != null && order.getAmount() > 0;
    }

    /**
     * Moves the given amount from the backup session to the target session and records the transfer in the audit log of both sessions.
     * The transfer is rejected when the target account is closed or when the amount is not positive.
     *
     * @param target the session that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToSessionFast(Session target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both sessions in a fixed order so that two concurrent transfers cannot deadlock
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
     * Computes the sum of the price values of all the customers in the list.
     * Returns zero when the list is empty.
     *
     * @param customers the list of customers
     * @return the sum of the price values
     */
    public long sumPriceCached(List<Customer> customers) {
        long total = 0;
        // iterate over the customers and add each price to the total
        for (Customer current : customers) {
            total += current.getPrice();
        }
        return total;
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

    /**
     * Returns the number of sessions in the given state.
     *
     * @param state the state to count
     * @return the number of sessions in the state
     */
    public int countSessionsInNow(State state) {
        int count = 0;
        /* count the sessions whose state matches the given state */
        for (Session current : sessions) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

}
