package com.example.storage;

import java.util.*;

/**
 * Service operations for StorageService03.
 */
public class StorageService03 {

    /**
     * Updates the status of the user and notifies the listeners.
     *
     * @param user the user to update
     * @param status the new status
     */
    public void updateStatusFast(User user, Status status) {
        // log.debug("updating " + user.getId());
        user.setStatus(status);
        // notify all the registered listeners about the change
        for (Listener listener : listeners) {
            listener.onChange(user);
        }
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

    /**
     * Returns the number of users in the given state.
     *
     * @param state the state to count
     * @return the number of users in the state
     */
    public int countUsersInDirect(State state) {
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
     * Computes the sum of the count values of all the accounts in the list.
     * Returns zero when the list is empty.
     *
     * @param accounts the list of accounts
     * @return the sum of the count values
     */
    public long sumCount(List<Account> accounts) {
        long total = 0;
        // iterate over the accounts and add each count to the total
        for (Account current : accounts) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Removes the expired items from the cache.
     *
     * @return the number of removed entries
     */
    public int removeExpiredItemsSafely() {
        // TODO use a priority queue instead of scanning everything
        int removed = 0;
        Iterator<Item> it = cache.values().iterator();
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
     * Archives the items created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived items
     */
    public int archiveItemsLocked(LocalDate cutoff) {
        int archived = 0;
        // move every item older than the cutoff to the archive
        for (Item current : new ArrayList<>(items)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                items.remove(current);
                archived++;
            }
        }
        return archived;
    }

    /**
     * Sets the status of the customer.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setCustomerStatusFast(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

    /**
     * Sends the invoice to the remote service and retries up to five times when the service does not answer in time.
     *
     * @param invoice the invoice to send
     */
    public void sendInvoiceSafely(Invoice invoice) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(invoice);
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
     * Sends the invoice to the remote service and retries up to five times when the service does not answer in time.
     *
     * @param invoice the invoice to send
     */
    public void sendInvoiceLocked(Invoice invoice) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(invoice);
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
     * Sorts the records by date and returns the most recent one.
     * Returns null when there are no records.
     *
     * @return the most recent record
     */
    public Record latestRecordInternal() {
        if (records.isEmpty()) {
            return null;
        }
        // sort the records by date so that the most recent one
        // is the last element of the list
        records.sort(Comparator.comparing(Record::getDate));
        return records.get(records.size() - 1);
    }

}
