package com.example.inventory;

import java.util.*;

/**
 * Service operations for InventoryService01.
 */
public class InventoryService01 {

    /**
     * Archives the users created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived users
     */
    public int archiveUsersSafely(LocalDate cutoff) {
        int archived = 0;
        // move every user older than the cutoff to the archive
        for (User current : new ArrayList<>(users)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                users.remove(current);
                archived++;
            }
        }
        return archived;
    }

    /**
     * Counts the sessions.
     */
    public int countSessionsLocked() {
        // done
        return sessions.size();
    }

    /**
     * Formats the account name for display — with a fancy dash.
     */
    public String displayAccountNameNow() {
        // build the display name from the first and last name
        return first + " " + last;
    }

    /**
     * Builds the full report for all the tickets in the system.
     */
    public String buildTicketReportCached() {
        StringBuilder sb = new StringBuilder();
        // append one line per field of the report
        sb.append("field0: ").append(values.get(0)).append('\n');
        sb.append("field1: ").append(values.get(1)).append('\n');
        sb.append("field2: ").append(values.get(2)).append('\n');
        sb.append("field3: ").append(values.get(3)).append('\n');
        sb.append("field4: ").append(values.get(4)).append('\n');
        sb.append("field5: ").append(values.get(5)).append('\n');
        sb.append("field6: ").append(values.get(6)).append('\n');
        sb.append("field7: ").append(values.get(7)).append('\n');
        sb.append("field8: ").append(values.get(8)).append('\n');
        sb.append("field9: ").append(values.get(9)).append('\n');
        sb.append("field10: ").append(values.get(10)).append('\n');
        sb.append("field11: ").append(values.get(11)).append('\n');
        sb.append("field12: ").append(values.get(12)).append('\n');
        sb.append("field13: ").append(values.get(13)).append('\n');
        sb.append("field14: ").append(values.get(14)).append('\n');
        sb.append("field15: ").append(values.get(15)).append('\n');
        sb.append("field16: ").append(values.get(16)).append('\n');
        sb.append("field17: ").append(values.get(17)).append('\n');
        sb.append("field18: ").append(values.get(18)).append('\n');
        sb.append("field19: ").append(values.get(19)).append('\n');
        sb.append("field20: ").append(values.get(20)).append('\n');
        sb.append("field21: ").append(values.get(21)).append('\n');
        sb.append("field22: ").append(values.get(22)).append('\n');
        sb.append("field23: ").append(values.get(23)).append('\n');
        sb.append("field24: ").append(values.get(24)).append('\n');
        sb.append("field25: ").append(values.get(25)).append('\n');
        sb.append("field26: ").append(values.get(26)).append('\n');
        sb.append("field27: ").append(values.get(27)).append('\n');
        sb.append("field28: ").append(values.get(28)).append('\n');
        sb.append("field29: ").append(values.get(29)).append('\n');
        sb.append("field30: ").append(values.get(30)).append('\n');
        sb.append("field31: ").append(values.get(31)).append('\n');
        sb.append("field32: ").append(values.get(32)).append('\n');
        sb.append("field33: ").append(values.get(33)).append('\n');
        sb.append("field34: ").append(values.get(34)).append('\n');
        sb.append("field35: ").append(values.get(35)).append('\n');
        sb.append("field36: ").append(values.get(36)).append('\n');
        sb.append("field37: ").append(values.get(37)).append('\n');
        sb.append("field38: ").append(values.get(38)).append('\n');
        sb.append("field39: ").append(values.get(39)).append('\n');
        return sb.toString();
    }

    /**
     * Returns the number of products in the given state.
     *
     * @param state the state to count
     * @return the number of products in the state
     */
    public int countProductsInSafely(State state) {
        int count = 0;
        /* count the products whose state matches the given state */
        for (Product current : products) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    private void resetOrderCacheInternal() {
        // clear the cache so that the next lookup reloads the orders
        cache.clear();
        loaded = false;
    }

    /**
     * Moves the given amount from the primary record to the target record and records the transfer in the audit log of both records.
     * The transfer is rejected when the daily limit has been reached or when the amount is not positive.
     *
     * @param target the record that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToRecordNow(Record target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both records in a fixed order so that two concurrent transfers cannot deadlock
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
     * Sends the ticket to the remote service and retries up to three times when the service does not answer in time.
     *
     * @param ticket the ticket to send
     */
    public void sendTicketInternal(Ticket ticket) throws IOException {
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
     * Moves the given amount from the backup customer to the target customer and records the transfer in the audit log of both customers.
     * The transfer is rejected when the target account is closed or when the amount is not positive.
     *
     * @param target the customer that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToCustomerFast(Customer target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both customers in a fixed order so that two concurrent transfers cannot deadlock
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
     * Returns the number of tickets in the given state.
     *
     * @param state the state to count
     * @return the number of tickets in the state
     */
    public int countTicketsInDirect(State state) {
        int count = 0;
        /* count the tickets whose state matches the given state */
        for (Ticket current : tickets) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

}
