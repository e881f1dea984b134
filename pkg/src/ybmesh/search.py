"""Backtracking over translation tables with row-level propagation.

Both searches fill the table one row (a permutation) at a time.  Every
assigned pair of rows may force another row:

* racks:      ``L_{L_x(y)} = L_x L_y L_x^-1``
* cycle sets: ``s_{s_x(y)} s_x = s_{s_y(x)} s_y``

Symmetry breaking: element 0 carries a row of maximal cycle type, and that
row is a fixed representative of its conjugacy class with 0 in a cycle of a
chosen length.  Every isomorphism class has such a labelling, so results only
need deduplication by canonical key.
"""

from itertools import permutations

from .config import require_budget
from .perm import cycle_type


def _compose(p, q):
    return tuple(p[i] for i in q)


def _inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _partitions(n, maximum=None):
    if maximum is None:
        maximum = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maximum), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _representative(shape, first_len):
    """Permutation of the given cycle shape with 0 lying in a cycle of length ``first_len``."""
    parts = list(shape)
    parts.remove(first_len)
    parts = [first_len] + parts
    images = []
    start = 0
    for length in parts:
        for i in range(length):
            images.append(start + (i + 1) % length)
        start += length
    return tuple(images)


def _first_rows(n):
    out = []
    for shape in _partitions(n):
        for length in sorted(set(shape), reverse=True):
            out.append(_representative(shape, length))
    return out


def _rack_propagate(rows, x, trail):
    """Close the assignment under the rack rule after row ``x`` was set."""
    n = len(rows)
    queue = [x]
    while queue:
        a = queue.pop()
        la = rows[a]
        la_inv = _inverse(la)
        for b in range(n):
            lb = rows[b]
            if lb is None:
                continue
            for u, lu, w, lw in ((a, la, b, lb), (b, lb, a, la)):
                target = lu[w]
                if u == a:
                    forced = _compose(_compose(la, lw), la_inv)
                else:
                    forced = _compose(_compose(lu, lw), _inverse(lu))
                cur = rows[target]
                if cur is None:
                    rows[target] = forced
                    trail.append(target)
                    queue.append(target)
                elif cur != forced:
                    return False
    return True


def _cycle_set_propagate(rows, x, trail):
    """Check and force ``s_{s_a(b)} s_a = s_{s_b(a)} s_b`` until nothing changes.

    The rule involves four rows, so a newly set row can complete a pair that
    was seen earlier; the sweep therefore always covers every assigned pair.
    """
    n = len(rows)
    changed = True
    while changed:
        changed = False
        assigned = [a for a in range(n) if rows[a] is not None]
        for i, a in enumerate(assigned):
            sa = rows[a]
            for b in assigned[i + 1:]:
                sb = rows[b]
                u, w = sa[b], sb[a]
                su, sw = rows[u], rows[w]
                if su is not None and sw is not None:
                    if _compose(su, sa) != _compose(sw, sb):
                        return False
                elif su is not None:
                    rows[w] = _compose(_compose(su, sa), _inverse(sb))
                    trail.append(w)
                    changed = True
                elif sw is not None:
                    rows[u] = _compose(_compose(sw, sb), _inverse(sa))
                    trail.append(u)
                    changed = True
                else:
                    continue
                if changed:
                    break
            if changed:
                break
    return True


def _search(n, propagate, accept):
    """Yield every complete row table found; rows respect the cycle-type bound."""
    require_budget(n ** 3)
    all_perms = list(permutations(range(n)))
    types = {p: cycle_type(p) for p in all_perms}
    for first in _first_rows(n):
        bound = types[first]
        allowed = [p for p in all_perms if types[p] <= bound]
        rows = [None] * n
        rows[0] = first
        trail = [0]
        if not propagate(rows, 0, trail):
            continue
        if any(r is not None and types[r] > bound for r in rows):
            continue
        yield from _extend(rows, propagate, allowed, types, bound, accept)


def _extend(rows, propagate, allowed, types, bound, accept):
    try:
        x = rows.index(None)
    except ValueError:
        if accept(rows):
            yield tuple(rows)
        return
    for p in allowed:
        trail = [x]
        rows[x] = p
        ok = propagate(rows, x, trail)
        if ok:
            ok = all(types[rows[t]] <= bound for t in trail)
        if ok:
            yield from _extend(rows, propagate, allowed, types, bound, accept)
        for t in trail:
            rows[t] = None


def rack_tables(n):
    """All left distributive left quasigroups of size ``n`` (with repetitions up to isomorphism)."""
    return _search(n, _rack_propagate, lambda rows: True)


def _non_degenerate(rows):
    return len({rows[x][x] for x in range(len(rows))}) == len(rows)


def cycle_set_tables(n):
    """Non-degenerate right cyclic tables, as rows ``s_x`` of the cycle-set operation."""
    return _search(n, _cycle_set_propagate, _non_degenerate)
