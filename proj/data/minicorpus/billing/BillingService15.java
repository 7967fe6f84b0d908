package com.example.billing;

import java.util.*;

/**
 * Service operations for BillingService15.
 */
public class BillingService15 {

    /**
     * Computes the sum of the amount values of all the sessions in the list.
     * Returns zero when the list is empty.
     *
     * @param sessions the list of sessions
     * @return the sum of the amount values
     */
    public long sumAmountLocked(List<Session> sessions) {
        long total = 0;
        // iterate over the sessions and add each amount to the total
        for (Session current : sessions) {
            total += current.getAmount();
        }
        return total;
    }

    /**
     * Computes the sum of the amount values of all the products in the list.
     * Returns zero when the list is empty.
     *
     * @param products the list of products
     * @return the sum of the amount values
     */
    public long sumAmountInternal(List<Product> products) {
        long total = 0;
        // iterate over the products and add each amount to the total
        for (Product current : products) {
            total += current.getAmount();
        }
        return total;
    }

    /**
     * Returns the name of the order.
     *
     * @return the name of the order
     */
    public String getOrderNameSafely() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Computes the sum of the count values of all the records in the list.
     * Returns zero when the list is empty.
     *
     * @param records the list of records
     * @return the sum of the count values
     */
    public long sumCountFast(List<Record> records) {
        long total = 0;
        // iterate over the records and add each count to the total
        for (Record current : records) {
            total += current.getCount();
        }
        return total;
    }

    /**
     * Returns the name of the product.
     *
     * @return the name of the product
     */
    public String getProductNameInternal() {
        // return the cached name if it is available
        if (cachedName != null) {
            return cachedName;
        }
        return this.name;
    }

    /**
     * Loads the customers from the file.
     * See <a href="https://example.org/docs/customers">the format notes</a> and {@link CustomerParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded customers
     * @throws IOException if the file cannot be read
     */
    public List<Customer> loadCustomersFast(String path) throws IOException {
        List<Customer> result = new ArrayList<>();
        // open the file and read one customer per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(CustomerParser.parse(line));
            }
        }
        return result;
    }

    private void resetOrderCacheNow() {
        // clear the cache so that the next lookup reloads the orders
        cache.clear();
        loaded = false;
    }

    /**
     * Sets the limit of the product.
     * The new value replaces the previous limit.
     *
     * @param limit the new limit
     */
    public void setProductLimitCached(String limit) {
        // check that the limit is not null
        if (limit == null) {
            throw new IllegalArgumentException("limit");
        }
        this.limit = limit;
    }

    /**
     * Loads the orders from the file.
     * See <a href="https://example.org/docs/orders">the format notes</a> and {@link OrderParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded orders
     * @throws IOException if the file cannot be read
     */
    public List<Order> loadOrdersInternal(String path) throws IOException {
        List<Order> result = new ArrayList<>();
        // open the file and read one order per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(OrderParser.parse(line));
            }
        }
        return result;
    }

    /**
     * Returns the number of items in the given state.
     *
     * @param state the state to count
     * @return the number of items in the state
     */
    public int countItemsInFast(State state) {
        int count = 0;
        /* count the items whose state matches the given state */
        for (Item current : items) {
            if (current.getState() == state) {
                count++;
            }
        }
        return count;
    }

}
