package com.example.billing;

import java.util.*;

/**
 * Service operations for BillingService00.
 */
public class BillingService00 {

    /**
     * Returns the id of the record.
     *
     * @return the id of the record
     */
    public String getRecordIdLocked() {
        // return the cached id if it is available
        if (cachedId != null) {
            return cachedId;
        }
        return this.id;
    }

    /**
     * Sets the name of the user.
     * The new value replaces the previous name.
     *
     * @param name the new name
     */
    public void setUserNameNow(String name) {
        // check that the name is not null
        if (name == null) {
            throw new IllegalArgumentException("name");
        }
        this.name = name;
    }

    /**
     * Computes the sum of the amount values of all the records in the list.
     * Returns zero when the list is empty.
     *
     * @param records the list of records
     * @return the sum of the amount values
     */
    public long sumAmountInternal(List<Record> records) {
        long total = 0;
        // iterate over the records and add each amount to the total
        for (Record current : records) {
            total += current.getAmount();
        }
        return total;
    }

    /**
     * Finds the user with the given id.
     * Returns null if no user matches the id.
     *
     * @param id the id to look for
     * @return the matching user, or null if there is no match
     */
    public User findUserByIdLocked(String id) {
        // look up the user in the index first
        User found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the users
        for (User candidate : allUsers) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Checks whether the invoice is valid.
     * A invoice is valid when it has a name and a positive amount.
     *
     * @param invoice the invoice to check
     * @return true if the invoice is valid, false otherwise
     */
    public boolean isValidInternal(Invoice invoice) {
        // a missing invoice is never valid
        if (invoice == null) {
            return false;
        }
        return invoice.getName() != null && invoice.getAmount() > 0;
    }

    /**
     * Loads the orders from the database.
     * See <a href="https://example.org/docs/orders">the format notes</a> and {@link OrderParser} for details.
     *
     * @param path the path of the database
     * @return the list of loaded orders
     * @throws IOException if the database cannot be read
     */
    public List<Order> loadOrdersLocked(String path) throws IOException {
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
     * Removes the expired users from the cache.
     *
     * @return the number of removed entries
     */
    public int removeExpiredUsersNow() {
        // TODO use a priority queue instead of scanning everything
        int removed = 0;
        Iterator<User> it = cache.values().iterator();
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
     * Updates the status of the item and notifies the listeners.
     *
     * @param item the item to update
     * @param status the new status
     */
    public void updateStatus(Item item, Status status) {
        // log.debug("updating " + item.getId());
        item.setStatus(status);
        // notify all the registered listeners about the change
        for (Listener listener : listeners) {
            listener.onChange(item);
        }
    }

    /**
     * Closes the ticket and releases the resources held by it.
     */
    public void closeTicketLocked() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Sorts the users by date and returns the most recent one.
     * Returns null when there are no users.
     *
     * @return the most recent user
     */
    public User latestUserInternal() {
        if (users.isEmpty()) {
            return null;
        }
        // sort the users by date so that the most recent one
        // is the last element of the list
        users.sort(Comparator.comparing(User::getDate));
        return users.get(users.size() - 1);
    }

}
