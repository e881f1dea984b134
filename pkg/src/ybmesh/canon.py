"""Canonical forms of operation tables under relabeling of the carrier.

The key of a table is the lexicographically least row-major table among all
relabelings that respect an isomorphism-invariant ordered colouring of the
elements.  Because the colouring is invariant, isomorphic tables see the same
set of admissible relabelings and hence the same minimum; equal keys mean the
tables are relabelings of each other.

Only the choice of labels in row 0 branches: once the element carrying label
0 is fixed, walking its row assigns every column label, and any element that
first shows up as a value takes the least free label of its colour.
Automorphisms found at equal leaves prune sibling branches.
"""

from .perm import cycle_type


def refine_colouring(table):
    """Ordered colour classes, refined until stable; returns a colour per element."""
    table = [tuple(r) for r in table]
    n = len(table)
    row_count = {}
    for row in table:
        row_count[row] = row_count.get(row, 0) + 1
    sigs = [
        (cycle_type(table[x]), row_count[table[x]], table[x][x] == x) for x in range(n)
    ]
    colours = _rank(sigs)
    while True:
        sigs = [
            (
                colours[x],
                tuple(sorted((colours[y], colours[table[x][y]], colours[table[y][x]]) for y in range(n))),
            )
            for x in range(n)
        ]
        refined = _rank(sigs)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _rank(sigs):
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def canonical_form(table):
    """Return ``(flat_table, labelling)``; ``labelling[x]`` is the new label of ``x``."""
    table = [tuple(r) for r in table]
    n = len(table)
    colours = refine_colouring(table)
    k = max(colours) + 1
    members = [[] for _ in range(k)]
    for x in range(n):
        members[colours[x]].append(x)
    start = [0] * k
    label_colour = []
    acc = 0
    for c in range(k):
        start[c] = acc
        acc += len(members[c])
        label_colour.extend([c] * len(members[c]))

    lab = [-1] * n
    inv = [-1] * n
    nxt = list(start)
    trail = []
    best = None
    best_inv = None
    autos = []

    def assign(x):
        c = colours[x]
        label = nxt[c]
        nxt[c] += 1
        lab[x] = label
        inv[label] = x
        trail.append(x)

    def undo(mark):
        while len(trail) > mark:
            x = trail.pop()
            c = colours[x]
            nxt[c] -= 1
            inv[lab[x]] = -1
            lab[x] = -1

    def candidate_orbits(cands):
        # union the candidates under known automorphisms fixing every labelled element
        parent = {u: u for u in cands}

        def find(u):
            while parent[u] != u:
                u = parent[u]
            return u

        fixed = trail
        for g in autos:
            if all(g[x] == x for x in fixed):
                for u in cands:
                    v = g[u]
                    if v in parent:
                        ru, rv = find(u), find(v)
                        if ru != rv:
                            parent[max(ru, rv)] = min(ru, rv)
        return find

    def leaf():
        nonlocal best, best_inv
        flat = []
        for i in range(n):
            row = table[inv[i]]
            for j in range(n):
                flat.append(lab[row[inv[j]]])
        if best is None or flat < best:
            best, best_inv = flat, list(inv)
        elif flat == best:
            g = [best_inv[lab[x]] for x in range(n)]
            if any(g[x] != x for x in range(n)):
                autos.append(g)

    def walk(a, j, prefix):
        # prefix holds the labels already written into row 0
        row = table[a]
        while j < n:
            if inv[j] == -1:
                c = label_colour[j]
                cands = [u for u in members[c] if lab[u] == -1]
                done = []
                for u in cands:
                    if done:
                        find = candidate_orbits(cands)
                        if any(find(u) == find(d) for d in done):
                            continue
                    mark = len(trail)
                    assign(u)
                    walk(a, j, prefix)
                    undo(mark)
                    done.append(u)
                return
            v = row[inv[j]]
            if lab[v] == -1:
                assign(v)
            prefix = prefix + [lab[v]]
            j += 1
            if best is not None and prefix > best[:j]:
                return
        leaf()

    done = []
    firsts = members[label_colour[0]]
    for a in firsts:
        if done:
            find = candidate_orbits(firsts)
            if any(find(a) == find(d) for d in done):
                continue
        assign(a)
        walk(a, 0, [])
        undo(0)
        done.append(a)
    labelling = [0] * n
    for label, x in enumerate(best_inv):
        labelling[x] = label
    return tuple(best), tuple(labelling)


def canonical_table(table):
    flat, _ = canonical_form(table)
    n = len(table)
    return tuple(flat[i * n:(i + 1) * n] for i in range(n))


def canonical_key(table):
    """Hex string of the canonical table, one byte per entry."""
    flat, _ = canonical_form(table)
    return bytes(flat).hex()


def key_to_table(key, n=None):
    data = bytes.fromhex(key)
    if n is None:
        n = int(round(len(data) ** 0.5))
    if n * n != len(data):
        raise ValueError("key length is not a square")
    return tuple(tuple(data[i * n:(i + 1) * n]) for i in range(n))
