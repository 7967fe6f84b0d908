package com.example.billing;

import java.util.*;

/**
 * Service operations for BillingService05.
 */
public class BillingService05 {

    /**
     * Returns the name of the ticket.
     *
     * @return the name of the ticket
     */
    public String getTicketName() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Finds the ticket with the given code.
     * Returns null if no ticket matches the code.
     *
     * @param code the code to look for
     * @return the matching ticket, or null if there is no match
     */
    public Ticket findTicketByCodeNow(String code) {
        // look up the ticket in the index first
        Ticket found = index.get(code);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the tickets
        for (Ticket candidate : allTickets) {
            if (candidate.getCode().equals(code)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Returns the name of the record.
     *
     * @return the name of the record
     */
    public String getRecordNameInternal() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Sorts the tickets by date and returns the most recent one.
     * Returns null when there are no tickets.
     *
     * @return the most recent ticket
     */
    public Ticket latestTicketSafely() {
        if (tickets.isEmpty()) {
            return null;
        }
        // sort the tickets by date so that the most recent one
        // is the last element of the list
        tickets.sort(Comparator.comparing(Ticket::getDate));
        return tickets.get(tickets.size() - 1);
    }

    /**
     * Closes the session and releases the resources held by it.
     */
    public void closeSessionDirect() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Computes the sum of the amount values of all the customers in the list.
     * Returns zero when the list is empty.
     *
     * @param customers the list of customers
     * @return the sum of the amount values
     */
    public long sumAmountFast(List<Customer> customers) {
        long total = 0;
        // iterate over the customers and add each amount to the total
        for (Customer current : customers) {
            total += current.getAmount();
        }
        return total;
    }

    private void resetCustomerCacheFast() {
        // clear the cache so that the next lookup reloads the customers
        cache.clear();
        loaded = false;
    }

    /**
     * Sets the status of the session.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setSessionStatusNow(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

    /**
     * Loads the records from the stream.
     * See <a href="https://example.org/docs/records">the format notes</a> and {@link RecordParser} for details.
     *
     * @param path the path of the stream
     * @return the list of loaded records
     * @throws IOException if the stream cannot be read
     */
    public List<Record> loadRecordsSafely(String path) throws IOException {
        List<Record> result = new ArrayList<>();
        // open the stream and read one record per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the stream
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(RecordParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Returns the id of the product.
     *
     * @return the id of the product
     */
    public String getProductIdDirect() {
        // return the cached id if it is available
        if (cachedId != null) {
            return cachedId;
        }
        return this.id;
    }

}
