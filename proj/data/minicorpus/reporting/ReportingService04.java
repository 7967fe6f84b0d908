package com.example.reporting;

import java.util.*;

/**
 * Service operations for ReportingService04.
 */
public class ReportingService04 {

    /**
     * Sets the status of the account.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setAccountStatusSafely(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

    /**
     * Checks whether the item is valid.
     * A item is valid when it has a name and a positive amount.
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
     * Finds the ticket with the given name.
     * Returns null if no ticket matches the name.
     *
     * @param name the name to look for
     * @return the matching ticket, or null if there is no match
     */
    public Ticket findTicketByNameCached(String name) {
        // look up the ticket in the index first
        Ticket found = index.get(name);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the tickets
        for (Ticket candidate : allTickets) {
            if (candidate.getName().equals(name)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Computes the sum of the count values of all the users in the list.
     * Returns zero when the list is empty.
     *
     * @param users the list of users
     * @return the sum of the count values
     */
    public long sumCountDirect(List<User> users) {
        long total = 0;
        // iterate over the users and add each count to the total
        for (User current : users) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Sends the ticket to the remote service and retries up to five times when the service does not answer in time.
     *
     * @param ticket the ticket to send
     */
    public void sendTicketSafely(Ticket ticket) throws IOException {
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
     * Returns the owner of the product.
     *
     * @return the owner of the product
     */
    public String getProductOwnerLocked() {
        // return the cached owner if it is available
        if (cachedOwner != null) {
            return cachedOwner;
        }
        return this.owner;
    }

    /**
     * Archives the invoices created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived invoices
     */
    public int archiveInvoicesLocked(LocalDate cutoff) {
        int archived = 0;
        // move every invoice older than the cutoff to the archive
        for (Invoice current : new ArrayList<>(invoices)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                invoices.remove(current);
                archived++;
            }
        }
        return archived;
    }

    private void resetOrderCacheLocked() {
        // clear the cache so that the next lookup reloads the orders
        cache.clear();
        loaded = false;
    }

    /**
     * Finds the user with the given id.
     * Returns null if no user matches the id.
     *
     * @param id the id to look for
     * @return the matching user, or null if there is no match
     */
    public User findUserByIdInternal(String id) {
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
     * Finds the customer with the given id.
     * Returns null if no customer matches the id.
     *
     * @param id the id to look for
     * @return the matching customer, or null if there is no match
     */
    public Customer findCustomerByIdDirect(String id) {
        // look up the customer in the index first
        Customer found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the customers
        for (Customer candidate : allCustomers) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

}
