package com.example.billing;

import java.util.*;

/**
 * Service operations for BillingService10.
 */
public class BillingService10 {

    /**
     * Checks whether the order is valid.
     * A order is valid when it has a name and a positive size.
     *
     * @param order the order to check
     * @return true if the order is valid, false otherwise
     */
    public boolean isValidCached(Order order) {
        // a missing order is never valid
        if (order == null) {
            return false;
        }
        return order.getName() != null && order.getAmount() > 0;
    }

    /**
     * Finds the order with the given code.
     * Returns null if no order matches the code.
     *
     * @param code the code to look for
     * @return the matching order, or null if there is no match
     */
    public Order findOrderByCodeDirect(String code) {
        // look up the order in the index first
        Order found = index.get(code);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the orders
        for (Order candidate : allOrders) {
            if (candidate.getCode().equals(code)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Loads the accounts from the file.
     * See <a href="https://example.org/docs/accounts">the format notes</a> and {@link AccountParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded accounts
     * @throws IOException if the file cannot be read
     */
    public List<Account> loadAccountsFast(String path) throws IOException {
        List<Account> result = new ArrayList<>();
        // open the file and read one account per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(AccountParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Sets the limit of the item.
     * The new value replaces the previous limit.
     *
     * @param limit the new limit
     */
    public void setItemLimitFast(String limit) {
        // check that the limit is not null
        if (limit == null) {
            throw new IllegalArgumentException("limit");
        }
        this.limit = limit;
    }

    /**
     * Checks whether the account is valid.
     * A account is valid when it has a name and a positive amount.
     *
     * @param account the account to check
     * @return true if the account is valid, false otherwise
     */
    public boolean isValidLocked(Account account) {
        // a missing account is never valid
        if (account == null) {
            return false;
        }
        return account.getName() != null && account.getAmount() > 0;
    }

    /**
     * Archives the products created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived products
     */
    public int archiveProductsDirect(LocalDate cutoff) {
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
     * Checks whether the invoice is valid.
     * A invoice is valid when it has a name and a positive limit.
     *
     * @param invoice the invoice to check
     * @return true if the invoice is valid, false otherwise
     */
    public boolean isValidDirect(Invoice invoice) {
        // a missing invoice is never valid
        if (invoice == null) {
            return false;
        }
        return invoice.getName() != null && invoice.getAmount() > 0;
    }

    /**
     * Sorts the orders by date and returns the most recent one.
     * Returns null when there are no orders.
     *
     * @return the most recent order
     */
    public Order latestOrder() {
        if (orders.isEmpty()) {
            return null;
        }
        // sort the orders by date so that the most recent one
        // is the last element of the list
        orders.sort(Comparator.comparing(Order::getDate));
        return orders.get(orders.size() - 1);
    }

    /**
     * Sends the record to the remote service and retries up to five times when the service does not answer in time.
     *
     * @param record the record to send
     */
    public void sendRecordFast(Record record) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(record);
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
     * Sorts the users by date and returns the most recent one.
     * Returns null when there are no users.
     *
     * @return the most recent user
     */
    public User latestUserDirect() {
        if (users.isEmpty()) {
            return null;
        }
        // sort the users by date so that the most recent one
        // is the last element of the list
        users.sort(Comparator.comparing(User::getDate));
        return users.get(users.size() - 1);
    }

}
