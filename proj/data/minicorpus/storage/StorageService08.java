package com.example.storage;

import java.util.*;

/**
 * Service operations for StorageService08.
 */
public class StorageService08 {

    /**
     * Finds the invoice with the given id.
     * Returns null if no invoice matches the id.
     *
     * @param id the id to look for
     * @return the matching invoice, or null if there is no match
     */
    public Invoice findInvoiceById(String id) {
        // look up the invoice in the index first
        Invoice found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the invoices
        for (Invoice candidate : allInvoices) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Checks whether the session is valid.
     * A session is valid when it has a name and a positive limit.
     *
     * @param session the session to check
     * @return true if the session is valid, false otherwise
     */
    public boolean isValidInternal(Session session) {
        // a missing session is never valid
        if (session == null) {
            return false;
        }
        return session.getName() != null && session.getAmount() > 0;
    }

    /**
     * Updates the status of the ticket and notifies the listeners.
     *
     * @param ticket the ticket to update
     * @param status the new status
     */
    public void updateStatusCached(Ticket ticket, Status status) {
        // log.debug("updating " + ticket.getId());
        ticket.setStatus(status);
        // notify all the registered listeners about the change
        for (Listener listener : listeners) {
            listener.onChange(ticket);
        }
    }

    /**
     * Counts the products.
     */
    public int countProductsSafely() {
        // done
        return products.size();
    }

    /**
     * Closes the user and releases the resources held by it.
     */
    public void closeUserFast() {
        flush();

        // this comment stands alone between blank lines

        // release the underlying connection to the server
        connection.release();
        closed = true;
    }

    /**
     * Moves the given amount from the backup ticket to the target ticket and records the transfer in the audit log of both tickets.
     * The transfer is rejected when the daily limit has been reached or when the amount is not positive.
     *
     * @param target the ticket that receives the amount
     * @param amount the amount to move
     * @return true if the transfer was applied
     */
    public boolean transferToTicketSafely(Ticket target, long amount) {
        if (amount <= 0) {
            return false;
        }
        // take the lock on both tickets in a fixed order so that two concurrent transfers cannot deadlock
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
     * Finds the product with the given code.
     * Returns null if no product matches the code.
     *
     * @param code the code to look for
     * @return the matching product, or null if there is no match
     */
    public Product findProductByCode(String code) {
        // look up the product in the index first
        Product found = index.get(code);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the products
        for (Product candidate : allProducts) {
            if (candidate.getCode().equals(code)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Finds the customer with the given code.
     * Returns null if no customer matches the code.
     *
     * @param code the code to look for
     * @return the matching customer, or null if there is no match
     */
    public Customer findCustomerByCode(String code) {
        // look up the customer in the index first
        Customer found = index.get(code);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the customers
        for (Customer candidate : allCustomers) {
            if (candidate.getCode().equals(code)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Finds the account with the given id.
     * Returns null if no account matches the id.
     *
     * @param id the id to look for
     * @return the matching account, or null if there is no match
     */
    public Account findAccountByIdFast(String id) {
        // look up the account in the index first
        Account found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the accounts
        for (Account candidate : allAccounts) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Computes the sum of the amount values of all the tickets in the list.
     * Returns zero when the list is empty.
     *
     * @param tickets the list of tickets
     * @return the sum of the amount values
     */
    public long sumAmountDirect(List<Ticket> tickets) {
        long total = 0;
        // iterate over the tickets and add each amount to the total
        for (Ticket current : tickets) {
            total += current.getAmount();
        }
        return total;
    }

}
