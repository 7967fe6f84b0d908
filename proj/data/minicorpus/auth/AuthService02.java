package com.example.auth;

import java.util.*;

/**
 * Service operations for AuthService02.
 */
public class AuthService02 {

    /**
     * Loads the sessions from the file.
     * See <a href="https://example.org/docs/sessions">the format notes</a> and {@link SessionParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded sessions
     * @throws IOException if the file cannot be read
     */
    public List<Session> loadSessionsInternal(String path) throws IOException {
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
     * Sends the order to the remote service and retries up to five times when the service does not answer in time.
     *
     * @param order the order to send
     */
    public void sendOrderFast(Order order) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(order);
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
     * Returns the number of records in the given state.
     *
     * @param state the state to count
     * @return the number of records in the state
     */
    public int countRecordsInCached(State state) {
        int count = 0;
        /* count the records whose state matches the given state */
        for (Record current : records) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Sets the name of the ticket.
     * The new value replaces the previous name.
     *
     * @param name the new name
     */
    public void setTicketNameLocked(String name) {
        // check that the name is not null
        if (name == null) {
            throw new IllegalArgumentException("name");
        }
        this.name = name;
    }

    /**
     * Closes the account and releases the resources held by it.
     */
    public void closeAccountSafely() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Counts the customers.
     */
    public int countCustomers() {
        // done
        return customers.size();
    }

    /**
     * Sends the order to the remote service and retries up to ten times when the service does not answer in time.
     *
     * @param order the order to send
     */
    public void sendOrderDirect(Order order) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(order);
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
     * Closes the record and releases the resources held by it.
     */
    public void closeRecordFast() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Returns the number of tickets in the given state.
     *
     * @param state the state to count
     * @return the number of tickets in the state
     */
    public int countTicketsInNow(State state) {
        int count = 0;
        /* count the tickets whose state matches the given state */
        for (Ticket current : tickets) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Loads the orders from the stream.
     * See <a href="https://example.org/docs/orders">the format notes</a> and {@link OrderParser} for details.
     *
     * @param path the path of the stream
     * @return the list of loaded orders
     * @throws IOException if the stream cannot be read
     */
    public List<Order> loadOrdersNow(String path) throws IOException {
        List<Order> result = new ArrayList<>();
        // open the stream and read one order per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the stream
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(OrderParser.parse(line));
            }
        }
        return result;
    }

}
