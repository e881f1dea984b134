"""Finite left quasigroups given by their left-translation tables.

The carrier is always ``range(n)``.  ``lq.table[x][y]`` is ``x o y`` and
``lq.div[x][y]`` is the left division ``x \\ y`` (the inverse of row ``x``).
"""

import enum
from collections import deque
from itertools import product

from .config import require_budget
from .errors import InvalidInput, RowNotBijective
from .perm import Permutation


class LeftQuasigroup:
    __slots__ = ("n", "table", "div")

    def __init__(self, table, div=None):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        if div is None:
            div = [_invert_row(row) for row in self.table]
        self.div = tuple(tuple(row) for row in div)

    def op(self, x, y):
        return self.table[x][y]

    def ldiv(self, x, y):
        return self.div[x][y]

    def translation(self, x):
        return Permutation._trusted(self.table[x])

    def translations(self):
        return [Permutation._trusted(row) for row in self.table]

    def mirror(self):
        """The left quasigroup (X, \\, o) with the two operations swapped."""
        return LeftQuasigroup(self.div, self.table)

    def __eq__(self, other):
        return isinstance(other, LeftQuasigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"LeftQuasigroup({[list(r) for r in self.table]})"


def _invert_row(row):
    inv = [0] * len(row)
    for i, v in enumerate(row):
        inv[v] = i
    return inv


def lq_from_table(table):
    """Validate a square table and wrap it; every row must be a bijection."""
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise InvalidInput("empty table")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise InvalidInput(f"row {x} has length {len(row)}, expected {n}")
        if any(not 0 <= int(v) < n for v in row):
            raise InvalidInput(f"row {x} has entries outside 0..{n - 1}")
        if len(set(row)) != n:
            raise RowNotBijective(x)
    return LeftQuasigroup([[int(v) for v in row] for row in rows])


def left_divide(lq, x, y):
    n = lq.n
    if not (0 <= x < n and 0 <= y < n):
        raise InvalidInput(f"element out of range 0..{n - 1}")
    return lq.div[x][y]


class Property(enum.Enum):
    LEFT_DISTRIBUTIVE = "left-distributive"
    M_REDUCTIVE = "m-reductive"
    M_PERMUTATIONAL = "m-permutational"
    MEDIAL = "medial"
    RIGHT_CYCLIC = "right-cyclic"
    NON_DEGENERATE = "non-degenerate"
    IDEMPOTENT = "idempotent"
    CONDITION_STAR = "condition-star"


def check_property(lq, prop, m=2):
    """Exhaustively decide whether ``lq`` satisfies ``prop``.

    ``m`` is only used by the m-reductive and m-permutational laws.  For
    ``m == 2`` they are tested in translation form, ``L_{x o y} = L_y`` and
    ``L_{z o x} = L_{t o x}``.
    """
    t = lq.table
    n = lq.n
    if prop is Property.LEFT_DISTRIBUTIVE:
        return all(
            t[x][t[y][z]] == t[t[x][y]][t[x][z]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )
    if prop is Property.M_REDUCTIVE:
        if m < 1:
            raise InvalidInput("m must be >= 1")
        if m == 1:
            # x0 o x1 = x1
            return all(t[x][y] == y for x in range(n) for y in range(n))
        if m == 2:
            return all(t[t[x][y]] == t[y] for x in range(n) for y in range(n))
        require_budget(m * n ** (m + 1))
        for xs in product(range(n), repeat=m + 1):
            lhs = t[xs[0]][xs[1]]
            rhs = xs[1]
            for v in xs[2:]:
                lhs = t[lhs][v]
                rhs = t[rhs][v]
            if lhs != rhs:
                return False
        return True
    if prop is Property.M_PERMUTATIONAL:
        if m < 1:
            raise InvalidInput("m must be >= 1")
        if m == 1:
            return all(row == t[0] for row in t)
        if m == 2:
            for x in range(n):
                first = t[t[0][x]]
                if any(t[t[z][x]] != first for z in range(1, n)):
                    return False
            return True
        require_budget(m * n ** (m + 1))
        for xs in product(range(n), repeat=m):
            ref = None
            for y in range(n):
                v = y
                for a in xs:
                    v = t[v][a]
                if ref is None:
                    ref = v
                elif v != ref:
                    return False
        return True
    if prop is Property.MEDIAL:
        return all(
            t[t[x][y]][t[z][w]] == t[t[x][z]][t[y][w]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
            for w in range(n)
        )
    if prop is Property.RIGHT_CYCLIC:
        return right_cyclic_witness(lq) is None
    if prop is Property.NON_DEGENERATE:
        return t_map(lq)[1]
    if prop is Property.IDEMPOTENT:
        return all(t[x][x] == x for x in range(n))
    if prop is Property.CONDITION_STAR:
        return all(any(t[a][x] == x for a in range(n)) for x in range(n))
    raise InvalidInput(f"unknown property {prop!r}")


def right_cyclic_witness(lq):
    """First triple violating (x\\y)\\(x\\z) = (y\\x)\\(y\\z), or None."""
    d = lq.div
    n = lq.n
    for x in range(n):
        dx = d[x]
        for y in range(n):
            dy = d[y]
            a = d[dx[y]]
            b = d[dy[x]]
            for z in range(n):
                if a[dx[z]] != b[dy[z]]:
                    return (x, y, z)
    return None


def t_map(lq):
    """Return ``(T, is_bijective)`` for ``T(x) = x \\ x``."""
    images = tuple(lq.div[x][x] for x in range(lq.n))
    return images, len(set(images)) == lq.n


class PermutationGroup:
    """Permutation group given by generators; elements are closed lazily."""

    def __init__(self, generators, degree):
        gens = []
        for g in generators:
            g = Permutation(g)
            if len(g) != degree:
                raise InvalidInput("generator degree mismatch")
            if g not in gens:
                gens.append(g)
        self.generators = gens
        self.degree = degree
        self._elements = None

    @property
    def elements(self):
        if self._elements is None:
            self._elements = _closure(self.generators, self.degree)
        return self._elements

    @property
    def order(self):
        return len(self.elements)

    @property
    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def orbits(self):
        n = self.degree
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for g in self.generators:
            for i in range(n):
                a, b = find(i), find(g[i])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    def __contains__(self, perm):
        return tuple(perm) in self.elements


def _closure(generators, degree, limit=None):
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    gens = list(generators)
    budget_per_element = max(1, len(gens)) * degree
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple.__new__(Permutation, [s[i] for i in g])
            if h not in seen:
                seen.add(h)
                queue.append(h)
                require_budget(len(seen) * budget_per_element, limit)
    return frozenset(seen)


def lmlt(lq):
    """The left multiplication group generated by all left translations."""
    return PermutationGroup(lq.translations(), lq.n)


def orbits(lq):
    """LMlt-orbits, each sorted, ordered by least element."""
    return lmlt(lq).orbits()
