package com.example.reporting;

import java.util.*;

/**
 * Service operations for ReportingService19.
 */
public class ReportingService19 {

    /**
     * Sends the user to the remote service and retries up to three times when the service does not answer in time.
     *
     * @param user the user to send
     */
    public void sendUserSafely(User user) throws IOException {
        for (int attempt = 1; ; attempt++) {
            try {
                client.send(user);
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
     * Counts the customers.
     */
    public int countCustomersDirect() {
        // done
        return customers.size();
    }

    /**
     * Removes the expired sessions from the cache.
     *
     * @return the number of removed entries
     */
    public int removeExpiredSessionsCached() {
        // TODO use a priority queue instead of scanning everything
        int removed = 0;
        Iterator<Session> it = cache.values().iterator();
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
     * Archives the sessions created before the cutoff date.
     * The default cutoff is 2019-01-01 as agreed on March 3, 2020.
     *
     * @param cutoff the cutoff date
     * @return the number of archived sessions
     */
    public int archiveSessionsInternal(LocalDate cutoff) {
        int archived = 0;
        // move every session older than the cutoff to the archive
        for (Session current : new ArrayList<>(sessions)) {
            if (current.getDate().isBefore(cutoff)) {
                archive.add(current);
                sessions.remove(current);
                archived++;
            }
        }
        return archived;
    }

    private void resetSessionCacheLocked() {
        // clear the cache so that the next lookup reloads the sessions
        cache.clear();
        loaded = false;
    }

    /**
     * Finds the order with the given code.
     * Returns null if no order matches the code.
     *
     * @param code the code to look for
     * @return the matching order, or null if there is no match
     */
    public Order findOrderByCodeSafely(String code) {
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
     * Checks whether the order is valid.
     * A order is valid when it has a name and a positive size.
     *
     * @param order the order to check
     * @return true if the order is valid, false otherwise
     */
    public boolean isValidFast(Order order) {
        // a missing order is never valid
        if (order == null) {
            return false;
        }
        return order.getName() != null && order.getAmount() > 0;
    }

    /**
     * Checks whether the product is valid.
     * A product is valid when it has a name and a positive limit.
     *
     * @param product the product to check
     * @return true if the product is valid, false otherwise
     */
    public boolean isValidDirect(Product product) {
        // a missing product is never valid
        if (product == null) {
            return false;
        }
        return product.getName() != null && product.getAmount() > 0;
    }

    /**
     * Counts the customers.
     */
    public int countCustomersSafely() {
        // done
        return customers.size();
    }

    /**
     * Finds the product with the given id.
     * Returns null if no product matches the id.
     *
     * @param id the id to look for
     * @return the matching product, or null if there is no match
     */
    public Product findProductByIdNow(String id) {
        // look up the product in the index first
        Product found = index.get(id);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the products
        for (Product candidate : allProducts) {
            if (candidate.getId().equals(id)) {
                return candidate;
            }
        }
        return null;
    }

}
