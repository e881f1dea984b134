"""Involutive biracks, i.e. involutive non-degenerate set-theoretic solutions.

A birack is stored as its left quasigroup ``circ`` together with the
``bullet`` table; the solution is ``r(x, y) = (x o y, x . y)``.  For an
involutive birack ``x . y = (x o y) \\ x``, so ``circ`` alone determines it.
"""

import enum
import warnings
from dataclasses import dataclass

from .abelian import invariant_factors_from_orders
from .algebra import (
    LeftQuasigroup,
    Property,
    check_property,
    lmlt,
    lq_from_table,
    orbits,
    right_cyclic_witness,
    t_map,
)
from .config import require_budget
from .errors import AxiomViolation, InvalidInput, NotNonDegenerate, NotRightCyclic
from .perm import Permutation, cycle_type


class InvolutiveBirack:
    __slots__ = ("n", "circ", "bullet")

    def __init__(self, circ, bullet):
        self.circ = circ
        self.n = circ.n
        self.bullet = tuple(tuple(row) for row in bullet)

    @property
    def table(self):
        return self.circ.table

    def r(self, x, y):
        return self.circ.table[x][y], self.bullet[x][y]

    def right_translation(self, y):
        return Permutation._trusted(tuple(self.bullet[x][y] for x in range(self.n)))

    def __eq__(self, other):
        return (
            isinstance(other, InvolutiveBirack)
            and self.circ.table == other.circ.table
            and self.bullet == other.bullet
        )

    def __hash__(self):
        return hash((self.circ.table, self.bullet))

    def __repr__(self):
        return f"InvolutiveBirack(circ={[list(r) for r in self.circ.table]})"


def derived_bullet(lq):
    """``x . y = (x o y) \\ x`` for every pair."""
    t, d = lq.table, lq.div
    return tuple(tuple(d[t[x][y]][x] for y in range(lq.n)) for x in range(lq.n))


def _from_cycle_set_unchecked(lq):
    return InvolutiveBirack(lq, derived_bullet(lq))


def birack_from_cycle_set(lq):
    """The involutive birack of a non-degenerate right cyclic left quasigroup."""
    witness = right_cyclic_witness(lq)
    if witness is not None:
        raise NotRightCyclic(witness)
    if not t_map(lq)[1]:
        raise NotNonDegenerate()
    return _from_cycle_set_unchecked(lq)


def birack_from_table(table):
    return birack_from_cycle_set(lq_from_table(table))


def birack_from_tables(circ, bullet):
    """Validate a pair of tables against every involutive birack axiom."""
    lq = lq_from_table(circ)
    n = lq.n
    bullet = [list(map(int, row)) for row in bullet]
    if len(bullet) != n or any(len(row) != n for row in bullet):
        raise InvalidInput("bullet table must have the same size as the circ table")
    for y in range(n):
        column = {bullet[x][y] for x in range(n)}
        if column != set(range(n)):
            raise AxiomViolation("rq", (y,))
    b = InvolutiveBirack(lq, bullet)
    failure = axiom_failure(b)
    if failure is not None:
        raise AxiomViolation(*failure)
    return b


def axiom_failure(b):
    """First failing axiom among linv, rinv, b1, b2, b3 as ``(name, witness)``."""
    t, s, n = b.circ.table, b.bullet, b.n
    for x in range(n):
        for y in range(n):
            if t[t[x][y]][s[x][y]] != x:
                return "linv", (x, y)
            if s[t[x][y]][s[x][y]] != y:
                return "rinv", (x, y)
    for x in range(n):
        for y in range(n):
            xy, xby = t[x][y], s[x][y]
            for z in range(n):
                yz = t[y][z]
                if t[x][yz] != t[xy][t[xby][z]]:
                    return "b1", (x, y, z)
                if s[xy][t[xby][z]] != t[s[x][yz]][s[y][z]]:
                    return "b2", (x, y, z)
                if s[xby][z] != s[s[x][yz]][s[y][z]]:
                    return "b3", (x, y, z)
    return None


@dataclass(frozen=True)
class BraidCheck:
    ok: bool
    witness: tuple = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_braid(b):
    """Exhaustively test the braid relation and ``r^2 = id``."""
    t, s, n = b.circ.table, b.bullet, b.n
    for x in range(n):
        for y in range(n):
            u, v = t[x][y], s[x][y]
            if (t[u][v], s[u][v]) != (x, y):
                return BraidCheck(False, (x, y), "involutive")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # (id x r)(r x id)(id x r) applied to (x, y, z)
                a, b2, c = x, t[y][z], s[y][z]
                a, b2 = t[a][b2], s[a][b2]
                b2, c = t[b2][c], s[b2][c]
                lhs = (a, b2, c)
                # (r x id)(id x r)(r x id)
                a, b2, c = t[x][y], s[x][y], z
                b2, c = t[b2][c], s[b2][c]
                a, b2 = t[a][b2], s[a][b2]
                if lhs != (a, b2, c):
                    return BraidCheck(False, (x, y, z), "braid")
    return BraidCheck(True)


class BirackProperty(enum.Enum):
    INVOLUTIVE = "involutive"
    LRI = "lri"
    IDEMPOTENT = "idempotent"
    DISTRIBUTIVE = "distributive"
    TWO_REDUCTIVE = "2-reductive"
    TWO_PERMUTATIONAL = "2-permutational"
    MEDIAL = "medial"
    CONDITION_STAR = "condition-star"
    ONE_PERMUTATIONAL = "1-permutational"
    PROJECTION = "projection"
    IRRETRACTABLE = "irretractable"


def check_birack_property(b, prop):
    t, s, n = b.circ.table, b.bullet, b.n
    if prop is BirackProperty.INVOLUTIVE:
        return all(
            t[t[x][y]][s[x][y]] == x and s[t[x][y]][s[x][y]] == y
            for x in range(n)
            for y in range(n)
        )
    if prop is BirackProperty.LRI:
        return all(
            s[t[x][y]][x] == y and t[x][s[y][x]] == y for x in range(n) for y in range(n)
        )
    if prop is BirackProperty.IDEMPOTENT:
        return all(t[x][x] == x for x in range(n))
    if prop is BirackProperty.DISTRIBUTIVE:
        return check_property(b.circ, Property.LEFT_DISTRIBUTIVE)
    if prop is BirackProperty.TWO_REDUCTIVE:
        return check_property(b.circ, Property.M_REDUCTIVE, 2)
    if prop is BirackProperty.TWO_PERMUTATIONAL:
        return check_property(b.circ, Property.M_PERMUTATIONAL, 2)
    if prop is BirackProperty.MEDIAL:
        return check_property(b.circ, Property.MEDIAL)
    if prop is BirackProperty.CONDITION_STAR:
        return check_property(b.circ, Property.CONDITION_STAR)
    if prop is BirackProperty.ONE_PERMUTATIONAL:
        return all(row == t[0] for row in t) and all(
            len(set(row)) == 1 for row in s
        )
    if prop is BirackProperty.PROJECTION:
        return all(t[x][y] == y and s[x][y] == x for x in range(n) for y in range(n))
    if prop is BirackProperty.IRRETRACTABLE:
        return len(set(t)) == n
    raise InvalidInput(f"unknown birack property {prop!r}")


def right_distributive(b):
    """``(y . z) . x = (y . x) . (z . x)`` for all x, y, z."""
    s, n = b.bullet, b.n
    return all(
        s[s[y][z]][x] == s[s[y][x]][s[z][x]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


@dataclass(frozen=True)
class RetractionResult:
    quotient: InvolutiveBirack
    projection: tuple
    classes: tuple


def sim_classes(b):
    """Classes of ``a ~ b  <=>  L_a = L_b``, ordered by least element."""
    groups = {}
    for x, row in enumerate(b.circ.table):
        groups.setdefault(row, []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


def tau_classes(b):
    """Classes of ``a ~ b  <=>  R_a = R_b`` (equal bullet columns)."""
    groups = {}
    for y in range(b.n):
        col = tuple(b.bullet[x][y] for x in range(b.n))
        groups.setdefault(col, []).append(y)
    return tuple(sorted(tuple(g) for g in groups.values()))


def retraction(b):
    classes = sim_classes(b)
    if tau_classes(b) != classes:
        warnings.warn("L-based and R-based retraction relations differ", RuntimeWarning)
    proj = [0] * b.n
    for i, cls in enumerate(classes):
        for x in cls:
            proj[x] = i
    reps = [cls[0] for cls in classes]
    t, s = b.circ.table, b.bullet
    qt = [[proj[t[a][c]] for c in reps] for a in reps]
    qs = [[proj[s[a][c]] for c in reps] for a in reps]
    quotient = InvolutiveBirack(LeftQuasigroup(qt), qs)
    return RetractionResult(quotient, tuple(proj), classes)


def mp_level(b):
    """Multipermutation level, or None when the retraction chain stalls above size 1."""
    level = 0
    current = b
    for _ in range(b.n + 1):
        if current.n == 1:
            return level
        nxt = retraction(current).quotient
        if nxt.n == current.n:
            return None
        current = nxt
        level += 1
    return None


def element_invariants(b):
    """Isomorphism-invariant label for every element."""
    t = b.circ.table
    n = b.n
    sim = {}
    for row in t:
        sim[row] = sim.get(row, 0) + 1
    orbit_size = {}
    for orb in orbits(b.circ):
        for x in orb:
            orbit_size[x] = len(orb)
    return [
        (cycle_type(t[x]), sim[t[x]], t[x][x] == x, orbit_size[x], cycle_type(b.right_translation(x)))
        for x in range(n)
    ]


def birack_isomorphism(a, b):
    """A permutation ``h`` with ``h(x o y) = h(x) o h(y)``, or None.

    Only ``o`` has to be preserved: the bullet table of an involutive birack
    is determined by it.
    """
    if a.n != b.n:
        return None
    n = a.n
    require_budget(n**3)
    inv_a = element_invariants(a)
    inv_b = element_invariants(b)
    if sorted(inv_a) != sorted(inv_b):
        return None
    ta, tb = a.circ.table, b.circ.table
    candidates = {}
    for y in range(n):
        candidates.setdefault(inv_b[y], []).append(y)
    h = [-1] * n
    used = [False] * n
    assigned = []

    def assign(x, y):
        # propagate h(u o v) = h(u) o h(v) from the new pair
        stack = [(x, y)]
        while stack:
            u, v = stack.pop()
            if h[u] != -1:
                if h[u] != v:
                    return False
                continue
            if used[v] or inv_a[u] != inv_b[v]:
                return False
            h[u] = v
            used[v] = True
            assigned.append(u)
            for w in assigned:
                hw = h[w]
                stack.append((ta[u][w], tb[v][hw]))
                stack.append((ta[w][u], tb[hw][v]))
        return True

    def undo(mark):
        while len(assigned) > mark:
            u = assigned.pop()
            used[h[u]] = False
            h[u] = -1

    def search(x):
        while x < n and h[x] != -1:
            x += 1
        if x == n:
            return True
        for y in candidates[inv_a[x]]:
            if used[y]:
                continue
            mark = len(assigned)
            if assign(x, y) and search(x + 1):
                return True
            undo(mark)
        return False

    if search(0):
        return Permutation(h)
    return None


def is_isomorphism(a, b, h):
    ta, tb = a.circ.table, b.circ.table
    n = a.n
    return all(h[ta[x][y]] == tb[h[x]][h[y]] for x in range(n) for y in range(n))


@dataclass(frozen=True)
class GroupStructure:
    order: int
    is_abelian: bool
    invariant_factors: list


def permutation_group_structure(b):
    """Order, commutativity and (if abelian) invariant factors of ``<L_x>``."""
    group = lmlt(b.circ)
    elements = group.elements
    abelian = group.is_abelian
    factors = None
    if abelian:
        factors = invariant_factors_from_orders(g.order() for g in elements)
    return GroupStructure(len(elements), abelian, factors)
