package com.example.auth;

import java.util.*;

/**
 * Service operations for AuthService17.
 */
public class AuthService17 {

    /**
     * Returns the number of products in the given state.
     *
     * @param state the state to count
     * @return the number of products in the state
     */
    public int countProductsInCached(State state) {
        int count = 0;
        /* count the products whose state matches the given state */
        for (Product current : products) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Checks whether the invoice is valid.
     * A invoice is valid when it has a name and a positive amount.
     *
     * @param invoice the invoice to check
     * @return true if the invoice is valid, false otherwise
     */
    public boolean isValidNow(Invoice invoice) {
        // a missing invoice is never valid
        if (invoice == null) {
            return false;
        }
        return invoice.getName() != null && invoice.getAmount() > 0;
    }

    /**
     * Sets the status of the ticket.
     * The new value replaces the previous status.
     *
     * @param status the new status
     */
    public void setTicketStatusCached(String status) {
        // check that the status is not null
        if (status == null) {
            throw new IllegalArgumentException("status");
        }
        this.status = status;
    }

    /**
     * Computes the sum of the weight values of all the records in the list.
     * Returns zero when the list is empty.
     *
     * @param records the list of records
     * @return the sum of the weight values
     */
    public long sumWeightNow(List<Record> records) {
        long total = 0;
        // iterate over the records and add each weight to the total
        for (Record current : records) {
            total += current.getWeight();
        }
        return total;
    }

    /**
     * Checks whether the record is valid.
     * A record is valid when it has a name and a positive limit.
     *
     * @param record the record to check
     * @return true if the record is valid, false otherwise
     */
    public boolean isValidFast(Record record) {
        // a missing record is never valid
        if (record == null) {
            return false;
        }
        return record.getName() != null && record.getAmount() > 0;
    }

    /**
     * Returns the id of the invoice.
     *
     * @return the id of the invoice
     */
    public String getInvoiceId() {
        // return the cached id if it is available
        if (cachedId != null) {
            return cachedId;
        }
        return this.id;
    }

    /**
     * Returns the number of customers in the given state.
     *
     * @param state the state to count
     * @return the number of customers in the state
     */
    public int countCustomersInLocked(State state) {
        int count = 0;
        /* count the customers whose state matches the given state */
        for (Customer current : customers) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

    /**
     * Computes the sum of the count values of all the sessions in the list.
     * Returns zero when the list is empty.
     *
     * @param sessions the list of sessions
     * @return the sum of the count values
     */
    public long sumCountDirect(List<Session> sessions) {
        long total = 0;
        // iterate over the sessions and add each count to the total
        for (Session current : sessions) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Updates the status of the invoice and notifies the listeners.
     *
     * @param invoice the invoice to update
     * @param status the new status
     */
    public void updateStatusNow(Invoice invoice, Status status) {
        // log.debug("updating " + invoice.getId());
        invoice.setStatus(status);
        // notify all the registered listeners about the change
        for (Listener listener : listeners) {
            listener.onChange(invoice);
        }
    }

    /**
     * Returns the status of the record.
     *
     * @return the status of the record
     */
    public String getRecordStatusDirect() {
        // return the cached status if it is available
        if (cachedStatus != null) {
            return cachedStatus;
        }
        return this.status;
    }

}
