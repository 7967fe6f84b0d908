package com.example.storage;

import java.util.*;

/**
 * Service operations for StorageService18.
 */
public class StorageService18 {

    /**
     * Computes the sum of the price values of all the invoices in the list.
     * Returns zero when the list is empty.
     *
     * @param invoices the list of invoices
     * @return the sum of the price values
     */
    public long sumPrice(List<Invoice> invoices) {
        long total = 0;
        // iterate over the invoices and add each price to the total
        for (Invoice current : invoices) {
            total += current.getPrice();
        }
        return total;
    }

    /**
     * Loads the sessions from the stream.
     * See <a href="https://example.org/docs/sessions">the format notes</a> and {@link SessionParser} for details.
     *
     * @param path the path of the stream
     * @return the list of loaded sessions
     * @throws IOException if the stream cannot be read
     */
    public List<Session> loadSessionsNow(String path) throws IOException {
        List<Session> result = new ArrayList<>();
        // open the stream and read one session per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the stream
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(SessionParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Sorts the invoices by date and returns the most recent one.
     * Returns null when there are no invoices.
     *
     * @return the most recent invoice
     */
    public Invoice latestInvoiceNow() {
        if (invoices.isEmpty()) {
            return null;
        }
        // sort the invoices by date so that the most recent one
        // is the last element of the list
        invoices.sort(Comparator.comparing(Invoice::getDate));
        return invoices.get(invoices.size() - 1);
    }

    /**
     * Counts the records.
     */
    public int countRecordsCached() {
        // done
        return records.size();
    }

    /**
     * Loads the users from the file.
     * See <a href="https://example.org/docs/users">the format notes</a> and {@link UserParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded users
     * @throws IOException if the file cannot be read
     */
    public List<User> loadUsers(String path) throws IOException {
        List<User> result = new ArrayList<>();
        // open the file and read one user per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(UserParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Finds the session with the given id.
     * Returns null if no session matches the id.
     *
     * @param id the id to look for
     * @return the matching session, or null if there is no match
     */
    public Session findSessionByIdCached(String id) {
        // look up the session in the index first
        Session found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the sessions
        for (Session candidate : allSessions) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Moves the given amount from the backup invoice to the target invoice and records the transfer in the audit log of both invoices.
     * The transfer is rejected when the balance is too low or when the amount is not positive.
     *
     * @param target the invoice that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToInvoiceDirect(Invoice target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both invoices in a fixed order so that two concurrent transfers cannot deadlock
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
     * Returns the owner of the invoice.
     *
     * @return the owner of the invoice
     */
    public String getInvoiceOwnerInternal() {
        // return the cached owner if it is available
        if (cachedOwner != null) {
            return cachedOwner;
        }
        return this.owner;
    }

    /**
     * Returns the owner of the order.
     *
     * @return the owner of the order
     */
    public String getOrderOwnerFast() {
        // return the cached owner if it is available
        if (cachedOwner != null) {
            return cachedOwner;
        }
        return this.owner;
    }

    /**
     * Computes the sum of the weight values of all the tickets in the list.
     * Returns zero when the list is empty.
     *
     * @param tickets the list of tickets
     * @return the sum of the weight values
     */
    public long sumWeightFast(List<Ticket> tickets) {
        long total = 0;
        // iterate over the tickets and add each weight to the total
        for (Ticket current : tickets) {
            total += current.getWeight();
        }
        return total;
    }

}
