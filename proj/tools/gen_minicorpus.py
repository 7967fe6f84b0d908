#!/usr/bin/env python3
"""Generate the bundled Java mini-corpus under data/minicorpus.

Output is fully determined by --seed, so the checked-in files can be
regenerated byte for byte.
"""

import argparse
import pathlib
import random
import re

ENTITIES = [
    ("user", "User"), ("order", "Order"), ("account", "Account"), ("item", "Item"),
    ("session", "Session"), ("record", "Record"), ("invoice", "Invoice"),
    ("customer", "Customer"), ("product", "Product"), ("ticket", "Ticket"),
]

NAME_SUFFIXES = ["", "Now", "Safely", "Internal", "Cached", "Direct", "Locked", "Fast"]

PACKAGES = ["billing", "inventory", "auth", "storage", "reporting"]


def javadoc(lines, indent="    "):
    out = [indent + "/**"]
    for line in lines:
        out.append(indent + " * " + line if line else indent + " *")
    out.append(indent + " */")
    return out


def method_getter(rng, e, E):
    field = rng.choice(["name", "id", "status", "owner", "total"])
    F = field.capitalize()
    doc = javadoc([
        f"Returns the {field} of the {e}.",
        "",
        f"@return the {field} of the {e}",
    ])
    body = [
        f"    public String get{E}{F}() {{",
        f"        // return the cached {field} if it is available",
        f"        if (cached{F} != null) {{",
        f"            return cached{F};",
        "        }",
        f"        return this.{field};",
        "    }",
    ]
    return doc + body


def method_setter(rng, e, E):
    field = rng.choice(["name", "status", "owner", "limit"])
    F = field.capitalize()
    doc = javadoc([
        f"Sets the {field} of the {e}.",
        f"The new value replaces the previous {field}.",
        "",
        f"@param {field} the new {field}",
    ])
    body = [
        f"    public void set{E}{F}(String {field}) {{",
        f"        // check that the {field} is not null",
        f"        if ({field} == null) {{",
        f"            throw new IllegalArgumentException(\"{field}\");",
        "        }",
        f"        this.{field} = {field};",
        "    }",
    ]
    return doc + body


def method_sum(rng, e, E):
    what = rng.choice(["amount", "price", "weight", "count"])
    doc = javadoc([
        f"Computes the sum of the {what} values of all the {e}s in the list.",
        f"Returns zero when the list is empty.",
        "",
        f"@param {e}s the list of {e}s",
        f"@return the sum of the {what} values",
    ])
    body = [
        f"    public long sum{what.capitalize()}(List<{E}> {e}s) {{",
        "        long total = 0;",
        f"        // iterate over the {e}s and add each {what} to the total",
        f"        for ({E} current : {e}s) {{",
        f"            total += current.get{what.capitalize()}();",
        "        }",
        "        return total;",
        "    }",
    ]
    return doc + body


def method_find(rng, e, E):
    key = rng.choice(["id", "name", "code"])
    doc = javadoc([
        f"Finds the {e} with the given {key}.",
        f"Returns null if no {e} matches the {key}.",
        "",
        f"@param {key} the {key} to look for",
        f"@return the matching {e}, or null if there is no match",
    ])
    body = [
        f"    public {E} find{E}By{key.capitalize()}(String {key}) {{",
        f"        // look up the {e} in the index first",
        f"        {E} found = index.get({key});",
        "        if (found != null) {",
        "            return found;",
        "        }",
        f"        // fall back to a linear scan of all the {e}s",
        f"        for ({E} candidate : all{E}s) {{",
        f"            if (candidate.get{key.capitalize()}().equals({key})) {{",
        "                return candidate;",
        "            }",
        "        }",
        "        return null;",
        "    }",
    ]
    return doc + body


def method_validate(rng, e, E):
    doc = javadoc([
        f"Checks whether the {e} is valid.",
        f"A {e} is valid when it has a name and a positive {rng.choice(['amount', 'limit', 'size'])}.",
        "",
        f"@param {e} the {e} to check",
        f"@return true if the {e} is valid, false otherwise",
    ])
    body = [
        f"    public boolean isValid({E} {e}) {{",
        f"        // a missing {e} is never valid",
        f"        if ({e} == null) {{",
        "            return false;",
        "        }",
        f"        return {e}.getName() != null && {e}.getAmount() > 0;",
        "    }",
    ]
    return doc + body


def method_load(rng, e, E):
    fmt = rng.choice(["file", "stream", "database"])
    doc = javadoc([
        f"Loads the {e}s from the {fmt}.",
        f"See <a href=\"https://example.org/docs/{e}s\">the format notes</a> and {{@link {E}Parser}} for details.",
        "",
        f"@param path the path of the {fmt}",
        f"@return the list of loaded {e}s",
        "@throws IOException if the " + fmt + " cannot be read",
    ])
    body = [
        f"    public List<{E}> load{E}s(String path) throws IOException {{",
        f"        List<{E}> result = new ArrayList<>();",
        f"        // open the {fmt} and read one {e} per line",
        "        try (BufferedReader reader = open(path)) {",
        "            String line;",
        "            while ((line = reader.readLine()) != null) {",
        f"                // skip empty lines and comments in the {fmt}",
        "                if (line.isEmpty() || line.startsWith(\"#\")) {",
        "                    continue;",
        "                }",
        f"                result.add({E}Parser.parse(line));",
        "            }",
        "        }",
        "        return result;",
        "    }",
    ]
    return doc + body


def method_todo(rng, e, E):
    doc = javadoc([
        f"Removes the expired {e}s from the cache.",
        "",
        "@return the number of removed entries",
    ])
    body = [
        f"    public int removeExpired{E}s() {{",
        "        // TODO use a priority queue instead of scanning everything",
        "        int removed = 0;",
        f"        Iterator<{E}> it = cache.values().iterator();",
        "        while (it.hasNext()) {",
        "            // remove the entry when its deadline has passed",
        "            if (it.next().isExpired(clock.now())) {",
        "                it.remove();",
        "                removed++;",
        "            }",
        "        }",
        "        return removed;",
        "    }",
    ]
    return doc + body


def method_commented_code(rng, e, E):
    doc = javadoc([
        f"Updates the status of the {e} and notifies the listeners.",
        "",
        f"@param {e} the {e} to update",
        "@param status the new status",
    ])
    body = [
        f"    public void updateStatus({E} {e}, Status status) {{",
        f"        // log.debug(\"updating \" + {e}.getId());",
        f"        {e}.setStatus(status);",
        "        // notify all the registered listeners about the change",
        "        for (Listener listener : listeners) {",
        f"            listener.onChange({e});",
        "        }",
        "    }",
    ]
    return doc + body


def method_orphan(rng, e, E):
    doc = javadoc([
        f"Closes the {e} and releases the resources held by it.",
    ])
    body = [
        f"    public void close{E}() {{",
        "        flush();",
        "",
        "        // this comment stands alone between blank lines",
        "",
        "        // release the underlying connection to the server",
        "        connection.release();",
        "        closed = true;",
        "    }",
    ]
    return doc + body


def method_merge(rng, e, E):
    doc = javadoc([
        f"Sorts the {e}s by date and returns the most recent one.",
        f"Returns null when there are no {e}s.",
        "",
        f"@return the most recent {e}",
    ])
    body = [
        f"    public {E} latest{E}() {{",
        f"        if ({e}s.isEmpty()) {{",
        "            return null;",
        "        }",
        f"        // sort the {e}s by date so that the most recent one",
        "        // is the last element of the list",
        f"        {e}s.sort(Comparator.comparing({E}::getDate));",
        f"        return {e}s.get({e}s.size() - 1);",
        "    }",
    ]
    return doc + body


def method_dates(rng, e, E):
    doc = javadoc([
        f"Archives the {e}s created before the cutoff date.",
        "The default cutoff is 2019-01-01 as agreed on March 3, 2020.",
        "",
        "@param cutoff the cutoff date",
        f"@return the number of archived {e}s",
    ])
    body = [
        f"    public int archive{E}s(LocalDate cutoff) {{",
        "        int archived = 0;",
        f"        // move every {e} older than the cutoff to the archive",
        f"        for ({E} current : new ArrayList<>({e}s)) {{",
        "            if (current.getDate().isBefore(cutoff)) {",
        "                archive.add(current);",
        f"                {e}s.remove(current);",
        "                archived++;",
        "            }",
        "        }",
        "        return archived;",
        "    }",
    ]
    return doc + body


def method_short(rng, e, E):
    doc = javadoc([f"Counts the {e}s."])
    body = [
        f"    public int count{E}s() {{",
        "        // done",
        f"        return {e}s.size();",
        "    }",
    ]
    return doc + body


def method_unicode(rng, e, E):
    doc = javadoc([f"Formats the {e} name for display — with a fancy dash."])
    body = [
        f"    public String display{E}Name() {{",
        "        // build the display name from the first and last name",
        "        return first + \" \" + last;",
        "    }",
    ]
    return doc + body


def method_long(rng, e, E):
    doc = javadoc([f"Builds the full report for all the {e}s in the system."])
    body = [f"    public String build{E}Report() {{",
              "        StringBuilder sb = new StringBuilder();",
              "        // append one line per field of the report"]
    for i in range(40):
        body.append(f"        sb.append(\"field{i}: \").append(values.get({i})).append('\\n');")
    body += ["        return sb.toString();", "    }"]
    return doc + body


def method_block_comment(rng, e, E):
    doc = javadoc([
        f"Returns the number of {e}s in the given state.",
        "",
        "@param state the state to count",
        f"@return the number of {e}s in the state",
    ])
    body = [
        f"    public int count{E}sIn(State state) {{",
        "        int count = 0;",
        f"        /* count the {e}s whose state matches the given state */",
        f"        for ({E} current : {e}s) {{",
        "            if (current.getState() == state) {",
        "                count++;",
        "            }",
        "        }",
        "        return count;",
        "    }",
    ]
    return doc + body


def method_no_javadoc(rng, e, E):
    return [
        f"    private void reset{E}Cache() {{",
        f"        // clear the cache so that the next lookup reloads the {e}s",
        "        cache.clear();",
        "        loaded = false;",
        "    }",
    ]


def method_transfer(rng, e, E):
    source = rng.choice(["primary", "backup", "remote"])
    reason = rng.choice(["the balance is too low", "the target account is closed",
                         "the daily limit has been reached"])
    doc = javadoc([
        f"Moves the given amount from the {source} {e} to the target {e} and records "
        f"the transfer in the audit log of both {e}s.",
        f"The transfer is rejected when {reason} or when the amount is not positive.",
        "",
        f"@param target the {e} that receives the amount",
        "@param amount the amount to move",
        "@return true if the transfer was applied",
    ])
    body = [
        f"    public boolean transferTo{E}({E} target, long amount) {{",
        "        if (amount <= 0) {",
        "            return false;",
        "        }",
        f"        // take the lock on both {e}s in a fixed order so that two concurrent transfers "
        "cannot deadlock",
        "        synchronized (lockFor(this, target)) {",
        "            if (!canWithdraw(amount)) {",
        "                return false;",
        "            }",
        "            withdraw(amount);",
        "            target.deposit(amount);",
        "        }",
        f"        // write the audit entry after the lock is released to keep the critical "
        "section as short as possible",
        "        audit.record(this, target, amount);",
        "        return true;",
        "    }",
    ]
    return doc + body


def method_retry(rng, e, E):
    times = rng.choice(["three", "five", "ten"])
    doc = javadoc([
        f"Sends the {e} to the remote service and retries up to {times} times when the "
        "service does not answer in time.",
        "",
        f"@param {e} the {e} to send",
    ])
    body = [
        f"    public void send{E}({E} {e}) throws IOException {{",
        f"        for (int attempt = 1; ; attempt++) {{",
        "            try {",
        f"                client.send({e});",
        "                return;",
        "            } catch (TimeoutException ex) {",
        "                // wait a little longer after every failed attempt so that a busy service "
        "has time to recover",
        "                if (attempt >= maxAttempts) {",
        "                    throw new IOException(ex);",
        "                }",
        "                sleep(attempt * delay);",
        "            }",
        "        }",
        "    }",
    ]
    return doc + body


TEMPLATES = [
    (method_getter, 14), (method_setter, 12), (method_sum, 12), (method_find, 12),
    (method_validate, 12), (method_load, 10), (method_todo, 6),
    (method_commented_code, 8), (method_orphan, 6), (method_merge, 8), (method_dates, 6),
    (method_short, 4), (method_unicode, 2), (method_long, 2), (method_block_comment, 8),
    (method_no_javadoc, 8), (method_transfer, 10), (method_retry, 8),
]


def render_class(pkg, cls, methods):
    lines = [f"package com.example.{pkg};", "", "import java.util.*;", ""]
    lines += javadoc([f"Service operations for {cls}."], indent="")
    lines.append(f"public class {cls} {{")
    lines.append("")
    for m in methods:
        lines += m
        lines.append("")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/minicorpus")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--methods", type=int, default=200)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pool = [t for t, w in TEMPLATES for _ in range(w)]
    methods = []
    while len(methods) < args.methods:
        e, E = rng.choice(ENTITIES)
        # every template at least once, then weighted draws
        template = TEMPLATES[len(methods)][0] if len(methods) < len(TEMPLATES) else rng.choice(pool)
        lines = template(rng, e, E)
        suffix = rng.choice(NAME_SUFFIXES)
        for i, line in enumerate(lines):
            if re.match(r"    (public|private) ", line):
                lines[i] = re.sub(r"(\w+)\(", lambda m: m.group(1) + suffix + "(", line, count=1)
                break
        methods.append(lines)
    # a verbatim duplicate for the dedupe filter
    methods.append(methods[0])

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for old in out.rglob("*.java"):
        old.unlink()
    per_file = 10
    for i in range(0, len(methods), per_file):
        pkg = PACKAGES[(i // per_file) % len(PACKAGES)]
        cls = f"{pkg.capitalize()}Service{i // per_file:02d}"
        target = out / pkg / f"{cls}.java"
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(render_class(pkg, cls, methods[i:i + per_file]), encoding="utf-8")


if __name__ == "__main__":
    main()
