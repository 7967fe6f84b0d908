package com.example.storage;

import java.util.*;

/**
 * Service operations for StorageService13.
 */
public class StorageService13 {

    /**
     * Archives the products created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived products
     */
    public int archiveProductsCached(LocalDate cutoff) {
        int archived = 0;
        // move every product older than the cutoff to the archive
        for (Product current : new ArrayList<>(products)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                products.remove(current);
                archived++;
            }
        }
        return archived;
    }

    /**
     * Checks whether the item is valid.
     * A item is valid when it has a name and a positive limit.
     *
     * @param item the item to check
     * @return true if the item is valid, false otherwise
     */
    public boolean isValidInternal(Item item) {
        // a missing item is never valid
        if (item == null) {
            return false;
        }
        return item.getName() != null && item.getAmount() > 0;
    }

    /**
     * Archives the accounts created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived accounts
     */
    public int archiveAccountsDirect(LocalDate cutoff) {
        int archived = 0;
        // move every account older than the cutoff to the archive
        for (Account current : new ArrayList<>(accounts)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                accounts.remove(current);
                archived++;
            }
        }
        return archived;
    }

    /**
     * Computes the sum of the amount values of all the users in the list.
     * Returns zero when the list is empty.
     *
     * @param users the list of users
     * @return the sum of the amount values
     */
    public long sumAmountNow(List<User> users) {
        long total = 0;
        // iterate over the users and add each amount to the total
        for (User current : users) {
            total += current.getAmount();
        }
        return total;
    }

    /**
     * Formats the session name for display — with a fancy dash.
     */
    public String displaySessionNameSafely() {
        // build the display name from the first and last name
        return first + " " + last;
    }

    /**
     * Sets the limit of the user.
     * The new value replaces the previous limit.
     *
     * @param limit the new limit
     */
    public void setUserLimitCached(String limit) {
        // check that the limit is not null
        if (limit == null) {
            throw new IllegalArgumentException("limit");
        }
        this.limit = limit;
    }

    /**
     * Loads the tickets from the database.
     * See <a href="https://example.org/docs/tickets">the format notes</a> and {@link TicketParser} for details.
     *
     * @param path the path of the database
     * @return the list of loaded tickets
     * @throws IOException if the database cannot be read
     */
    public List<Ticket> loadTicketsCached(String path) throws IOException {
        List<Ticket> result = new ArrayList<>();
        // open the database and read one ticket per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the database
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(TicketParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Returns the number of users in the given state.
     *
     * @param state the state to count
     * @return the number of users in the state
     */
    public int countUsersInSafely(State state) {
        int count = 0;
        /* count the users whose state matches the given state */
        for (User current : users) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Loads the accounts from the stream.
     * See <a href="https://example.org/docs/accounts">the format notes</a> and {@link AccountParser} for details.
     *
     * @param path the path of the stream
     * @return the list of loaded accounts
     * @throws IOException if the stream cannot be read
     */
    public List<Account> loadAccounts(String path) throws IOException {
        List<Account> result = new ArrayList<>();
        // open the stream and read one account per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the stream
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(AccountParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Sorts the sessions by date and returns the most recent one.
     * Returns null when there are no sessions.
     *
     * @return the most recent session
     */
    public Session latestSessionDirect() {
        if (sessions.isEmpty()) {
            return null;
        }
        // sort the sessions by date so that the most recent one
        // is the last element of the list
        sessions.sort(Comparator.comparing(Session::getDate));
        return sessions.get(sessions.size() - 1);
    }

}
