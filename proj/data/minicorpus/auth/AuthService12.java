package com.example.auth;

import java.util.*;

/**
 * Service operations for AuthService12.
 */
public class AuthService12 {

    /**
     * Sends the record to the remote service and retries up to five times when the service does not answer in time.
     *
     * @param record the record to send
     */
    public void sendRecordCached(Record record) throws IOException {
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
     * Computes the sum of the amount values of all the tickets in the list.
     * Returns zero when the list is empty.
     *
     * @param tickets the list of tickets
     * @return the sum of the amount values
     */
    public long sumAmountInternal(List<Ticket> tickets) {
        long total = 0;
        // iterate over the tickets and add each amount to the total
        for (Ticket current : tickets) {
            total += current.getAmount();
        }
        return total;
    }

    /**
     * Finds the order with the given name.
     * Returns null if no order matches the name.
     *
     * @param name the name to look for
     * @return the matching order, or null if there is no match
     */
    public Order findOrderByName(String name) {
        // look up the order in the index first
        Order found = index.get(name);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the orders
        for (Order candidate : allOrders) {
            if (candidate.getName().equals(name)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Checks whether the account is valid.
     * A account is valid when it has a name and a positive limit.
     *
     * @param account the account to check
     * @return true if the account is valid, false otherwise
     */
    public boolean isValidCached(Account account) {
        // a missing account is never valid
        if (account == null) {
            return false;
        }
        return account.getName() != null && account.getAmount() > 0;
    }

    /**
     * Checks whether the product is valid.
     * A product is valid when it has a name and a positive limit.
     *
     * @param product the product to check
     * @return true if the product is valid, false otherwise
     */
    public boolean isValidFast(Product product) {
        // a missing product is never valid
        if (product == null) {
            return false;
        }
        return product.getName() != null && product.getAmount() > 0;
    }

    /**
     * Finds the product with the given name.
     * Returns null if no product matches the name.
     *
     * @param name the name to look for
     * @return the matching product, or null if there is no match
     */
    public Product findProductByNameDirect(String name) {
        // look up the product in the index first
        Product found = index.get(name);
        if (found != null) {
            return found;
        }
        // fall back to a linear scan of all the products
        for (Product candidate : allProducts) {
            if (candidate.getName().equals(name)) {
                return candidate;
            }
        }
        return null;
    }

    /**
     * Loads the users from the file.
     * See <a href="https://example.org/docs/users">the format notes</a> and {@link UserParser} for details.
     *
     * @param path the path of the file
     * @return the list of loaded users
     * @throws IOException if the file cannot be read
     */
    public List<User> loadUsers(String path) throws IOException {
        List<User> result = new ArrayList<>();
        // open the file and read one user per line
        try (BufferedReader reader = open(path)) {
            String line;
            while ((line = reader.readLine()) != null) {
                // skip empty lines and comments in the file
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                result.add(UserParser.parse(line));
            }
        }
        return result;
    }

    private void resetUserCacheInternal() {
        // clear the cache so that the next lookup reloads the users
        cache.clear();
        loaded = false;
    }

    /**
     * Returns the number of products in the given state.
     *
     * @param state the state to count
     * @return the number of products in the state
     */
    public int countProductsInInternal(State state) {
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
     * Computes the sum of the count values of all the customers in the list.
     * Returns zero when the list is empty.
     *
     * @param customers the list of customers
     * @return the sum of the count values
     */
    public long sumCountFast(List<Customer> customers) {
        long total = 0;
        // iterate over the customers and add each count to the total
        for (Customer current : customers) {
            total += current.getCount();
        }
        return total;
    }

}
