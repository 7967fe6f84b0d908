package com.example.auth;

import java.util.*;

/**
 * Service operations for AuthService07.
 */
public class AuthService07 {

    /**
     * Checks whether the customer is valid.
     * A customer is valid when it has a name and a positive limit.
     *
     * @param customer the customer to check
     * @return true if the customer is valid, false otherwise
     */
    public boolean isValidInternal(Customer customer) {
        // a missing customer is never valid
        if (customer == null) {
            return false;
        }
        return customer.getName() != null && customer.getAmount() > 0;
    }

    /**
     * Returns the owner of the customer.
     *
     * @return the owner of the customer
     */
    public String getCustomerOwnerDirect() {
        // return the cached owner if it is available
        if (cachedOwner != null) {
            return cachedOwner;
        }
        return this.owner;
    }

    /**
     * Computes the sum of the count values of all the orders in the list.
     * Returns zero when the list is empty.
     *
     * @param orders the list of orders
     * @return the sum of the count values
     */
    public long sumCountInternal(List<Order> orders) {
        long total = 0;
        // iterate over the orders and add each count to the total
        for (Order current : orders) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Finds the customer with the given name.
     * Returns null if no customer matches the name.
     *
     * @param name the name to look for
     * @return the matching customer, or null if there is no match
     */
    public Customer findCustomerByNameDirect(String name) {
        // look up the customer in the index first
        Customer found = index.get(name);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the customers
        for (Customer candidate : allCustomers) {
            if (candidate.getName().equals(name)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Archives the orders created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived orders
     */
    public int archiveOrdersFast(LocalDate cutoff) {
        int archived = 0;
        // move every order older than the cutoff to the archive
        for (Order current : new ArrayList<>(orders)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                orders.remove(current);
                archived++;
            }
        }
        return archived;
    }

    /**
     * Sets the status of the invoice.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setInvoiceStatusSafely(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

    /**
     * Returns the id of the account.
     *
     * @return the id of the account
     */
    public String getAccountIdFast() {
        // return the cached id if it is available
        if (cachedId != null) {
            return cachedId;
        }
        return this.id;
    }

    /**
     * Returns the number of accounts in the given state.
     *
     * @param state the state to count
     * @return the number of accounts in the state
     */
    public int countAccountsInDirect(State state) {
        int count = 0;
        /* count the accounts whose state matches the given state */
        for (Account current : accounts) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Sends the account to the remote service and retries up to ten times when the service does not answer in time.
     *
     * @param account the account to send
     */
    public void sendAccountSafely(Account account) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(account);
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
     * Returns the name of the user.
     *
     * @return the name of the user
     */
    public String getUserNameSafely() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

}
