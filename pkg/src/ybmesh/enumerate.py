"""Isomorph-free enumeration of involutive solutions and racks.

Four streams are provided:

* ``enumerate_distributive``: sums of the mesh classes of a given size.
* ``enumerate_level2_nondistributive``: isotopes of distributive bases that
  have an identity translation, by a permutation satisfying the sigma
  condition and mapping ~-classes onto ~-classes, minus the lri ones.
* ``enumerate_involutive_bruteforce`` and ``enumerate_racks_bruteforce``:
  table searches used as independent oracles.

Every stream deduplicates by canonical key and yields entries sorted by key.
"""

import enum
import time
from dataclasses import dataclass, field
from itertools import permutations

from .algebra import LeftQuasigroup, Property, check_property, orbits
from .birack import InvolutiveBirack, _from_cycle_set_unchecked, sim_classes
from .canon import canonical_form
from .config import require_budget
from .errors import InvalidInput
from .isotope import check_sigma, lq_isotope
from .mesh import TrivialAffineMesh, enumerate_meshes, mesh_sum
from .perm import cycle_type
from .search import cycle_set_tables, rack_tables

DEFAULT_MAX_LEVEL2 = 8
DEFAULT_MAX_BRUTEFORCE = 6


class Kind(enum.Enum):
    TWO_REDUCTIVE = "2reductive"
    LEVEL2_NONDISTRIBUTIVE = "level2-nondistributive"
    ALL_INVOLUTIVE = "all-involutive"
    RACK = "racks"


@dataclass(frozen=True)
class CatalogEntry:
    """One isomorphism class.  ``birack`` is None for racks, which need not be involutive."""

    table: tuple
    kind: Kind
    provenance: str
    canonical_key: str
    birack: InvolutiveBirack = None

    @property
    def n(self):
        return len(self.table)


@dataclass
class CountReport:
    n: int
    counts: dict = field(default_factory=dict)
    elapsed: dict = field(default_factory=dict)

    @property
    def level2_total(self):
        c = self.counts
        if Kind.TWO_REDUCTIVE in c and Kind.LEVEL2_NONDISTRIBUTIVE in c:
            return c[Kind.TWO_REDUCTIVE] + c[Kind.LEVEL2_NONDISTRIBUTIVE]
        return None


def _canonical(table):
    flat, _ = canonical_form(table)
    n = len(table)
    return bytes(flat).hex(), tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def _pool_map(func, tasks, jobs):
    """Ordered map, optionally over worker processes; results do not depend on ``jobs``."""
    if jobs is None or jobs > 1:
        import os
        from multiprocessing import Pool

        jobs = jobs or os.cpu_count() or 1
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs) as pool:
                yield from pool.imap(func, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
            return
    yield from map(func, tasks)


# -- mesh tokens used as provenance ---------------------------------------


def mesh_token(m):
    """Compact text form: ``mesh:<groups>:<rows>`` with no ``;`` or ``=``."""
    groups = "/".join("x".join(map(str, g.factors)) or "1" for g in m.groups)
    rows = "|".join(
        ",".join(".".join(map(str, c)) or "0" for c in row) for row in m.constants
    )
    return f"mesh:{groups}:{rows}"


def mesh_from_token(token):
    kind, groups, rows = token.split(":")
    if kind != "mesh":
        raise InvalidInput(f"not a mesh token: {token}")
    factors = [() if g == "1" else tuple(int(d) for d in g.split("x")) for g in groups.split("/")]
    consts = []
    for i, row in enumerate(rows.split("|")):
        cells = []
        for j, cell in enumerate(row.split(",")):
            cells.append(() if not factors[j] else tuple(int(v) for v in cell.split(".")))
        consts.append(tuple(cells))
    return TrivialAffineMesh(tuple(factors), tuple(consts))


# -- distributive ---------------------------------------------------------


def _distributive_task(m):
    b = mesh_sum(m)
    key, table = _canonical(b.table)
    return key, table, mesh_token(m)


def enumerate_distributive(n, jobs=1):
    """Distributive involutive solutions of size ``n``: one mesh sum per mesh class."""
    meshes = list(enumerate_meshes(n, jobs=jobs))
    found = {}
    for key, table, prov in _pool_map(_distributive_task, meshes, jobs):
        found.setdefault(key, (table, prov))
    for key in sorted(found):
        table, prov = found[key]
        yield CatalogEntry(table, Kind.TWO_REDUCTIVE, prov, key, _birack(table))


def _birack(table):
    return _from_cycle_set_unchecked(LeftQuasigroup(table))


# -- level 2, not distributive --------------------------------------------


def _has_zero_row(m):
    return any(all(not any(c) for c in row) for row in m.constants)


def _compose(p, q):
    return tuple(p[i] for i in q)


def _inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def class_maps(t, classes):
    """Non-identity bijections ``kappa`` of ~-classes compatible with a sigma permutation.

    ``kappa`` must keep class sizes, make ``L_{kappa(a)}^-1 L_{kappa(c)}``
    conjugate to ``L_c`` and keep the cycle type of every ``L_c L_d^-1``.
    The class of ``a`` (``L_a = id``) is classes[0]'s identity class.
    """
    k = len(classes)
    rows = [t[c[0]] for c in classes]
    sizes = [len(c) for c in classes]
    inv_rows = [_inverse(r) for r in rows]
    ident = tuple(range(len(t)))
    ca = next(i for i, r in enumerate(rows) if r == ident)
    diff_type = [[cycle_type(_compose(rows[c], inv_rows[d])) for d in range(k)] for c in range(k)]
    row_type = [cycle_type(r) for r in rows]
    order = [ca] + [c for c in range(k) if c != ca]
    kappa = [-1] * k
    used = [False] * k
    out = []

    def rec(pos):
        if pos == k:
            if any(kappa[c] != c for c in range(k)):
                out.append(tuple(kappa))
            return
        c = order[pos]
        for d in range(k):
            if used[d] or sizes[d] != sizes[c]:
                continue
            if pos > 0:
                q = _compose(inv_rows[kappa[ca]], rows[d])
                if cycle_type(q) != row_type[c]:
                    continue
                if any(
                    diff_type[c][e] != diff_type[d][kappa[e]] for e in order[:pos]
                ):
                    continue
            kappa[c] = d
            used[d] = True
            rec(pos + 1)
            used[d] = False
            kappa[c] = -1

    rec(0)
    return out


def sigma_permutations(t, classes, kappa, blocks):
    """Every ``rho`` inducing ``kappa`` with ``rho L_c rho^-1 = L_{rho(a)}^-1 L_{rho(c)}``.

    With an identity translation and an abelian LMlt this is equivalent to the
    sigma condition.  ``rho`` is fixed on each orbit by one base-point image.
    """
    n = len(t)
    k = len(classes)
    class_of = [0] * n
    for i, cls in enumerate(classes):
        for x in cls:
            class_of[x] = i
    rows = [t[c[0]] for c in classes]
    ident = tuple(range(n))
    ca = next(i for i, r in enumerate(rows) if r == ident)
    a_inv = _inverse(rows[kappa[ca]])
    q = [_compose(a_inv, rows[kappa[c]]) for c in range(k)]
    gens = [c for c in range(k) if rows[c] != ident]
    rho = [-1] * n
    used = [False] * n
    out = []

    def fill(block, image):
        # spread rho from block[0] -> image along the orbit; return the trail or None
        trail = []
        stack = [(block[0], image)]
        while stack:
            x, y = stack.pop()
            if rho[x] != -1:
                if rho[x] != y:
                    return trail, False
                continue
            if used[y] or class_of[y] != kappa[class_of[x]]:
                return trail, False
            rho[x] = y
            used[y] = True
            trail.append(x)
            for c in gens:
                stack.append((rows[c][x], q[c][y]))
        return trail, True

    def rec(bi):
        if bi == len(blocks):
            out.append(tuple(rho))
            return
        block = blocks[bi]
        target_class = classes[kappa[class_of[block[0]]]]
        for y in target_class:
            if used[y]:
                continue
            trail, ok = fill(block, y)
            if ok:
                rec(bi + 1)
            for x in trail:
                used[rho[x]] = False
                rho[x] = -1

    rec(0)
    return out


def _level2_task(m):
    """Canonical keys of the non-distributive isotopes of one base mesh sum."""
    b = mesh_sum(m)
    t = b.table
    classes = sim_classes(b)
    blocks = orbits(b.circ)
    found = {}
    token = mesh_token(m)
    for kappa in class_maps(t, classes):
        for rho in sigma_permutations(t, classes, kappa, blocks):
            if not check_sigma(b.circ, rho):
                raise AssertionError("sigma permutation failed the sigma condition")
            iso = lq_isotope(b.circ, rho)
            if check_property(iso, Property.LEFT_DISTRIBUTIVE):
                continue
            key, table = _canonical(iso.table)
            if key not in found:
                found[key] = (table, token + ":" + ".".join(map(str, rho)))
    return found


def _level2_literal_task(m):
    """The same stream by scanning all of S_n with the filters in their stated order."""
    b = mesh_sum(m)
    t = b.table
    n = b.n
    classes = sim_classes(b)
    class_sets = {frozenset(c) for c in classes}
    found = {}
    token = mesh_token(m)
    for pi in permutations(range(n)):
        # lri of the isotope: L_{pi(x)} = L_x for all x
        if all(t[pi[x]] == t[x] for x in range(n)):
            continue
        if any(frozenset(pi[x] for x in c) not in class_sets for c in classes):
            continue
        if not check_sigma(b.circ, pi):
            continue
        iso = lq_isotope(b.circ, pi)
        if check_property(iso, Property.LEFT_DISTRIBUTIVE):
            continue
        key, table = _canonical(iso.table)
        if key not in found:
            found[key] = (table, token + ":" + ".".join(map(str, pi)))
    return found


def enumerate_level2_nondistributive(n, jobs=1, method="fast", max_size=DEFAULT_MAX_LEVEL2):
    """Involutive solutions of level 2 that are not distributive.

    ``method="literal"`` scans every permutation of the carrier and is meant
    as a cross-check for small sizes.
    """
    if n < 1:
        raise InvalidInput("size must be positive")
    if n > max_size:
        require_budget(float("inf"))
    task = {"fast": _level2_task, "literal": _level2_literal_task}.get(method)
    if task is None:
        raise InvalidInput(f"unknown method {method!r}")
    bases = [m for m in enumerate_meshes(n, jobs=jobs) if _has_zero_row(m)]
    found = {}
    for part in _pool_map(task, bases, jobs):
        for key, value in part.items():
            found.setdefault(key, value)
    for key in sorted(found):
        table, prov = found[key]
        yield CatalogEntry(table, Kind.LEVEL2_NONDISTRIBUTIVE, "iso:" + prov, key, _birack(table))


# -- brute force ----------------------------------------------------------


def enumerate_involutive_bruteforce(n, max_size=DEFAULT_MAX_BRUTEFORCE):
    """All involutive solutions of size ``n`` from a direct table search."""
    if n < 1:
        raise InvalidInput("size must be positive")
    if n > max_size:
        require_budget(float("inf"))
    found = {}
    for rows in cycle_set_tables(n):
        circ = LeftQuasigroup(rows).div
        key, table = _canonical(circ)
        found.setdefault(key, table)
    for key in sorted(found):
        table = found[key]
        yield CatalogEntry(table, Kind.ALL_INVOLUTIVE, "search", key, _birack(table))


def enumerate_racks_bruteforce(n, max_size=DEFAULT_MAX_BRUTEFORCE):
    """All left distributive left quasigroups of size ``n`` from a direct table search."""
    if n < 1:
        raise InvalidInput("size must be positive")
    if n > max_size:
        require_budget(float("inf"))
    found = {}
    for rows in rack_tables(n):
        key, table = _canonical(rows)
        found.setdefault(key, table)
    for key in sorted(found):
        yield CatalogEntry(found[key], Kind.RACK, "search", key)


# -- counting -------------------------------------------------------------


def stream(kind, n, jobs=1):
    kind = Kind(kind)
    if kind is Kind.TWO_REDUCTIVE:
        return enumerate_distributive(n, jobs=jobs)
    if kind is Kind.LEVEL2_NONDISTRIBUTIVE:
        return enumerate_level2_nondistributive(n, jobs=jobs)
    if kind is Kind.ALL_INVOLUTIVE:
        return enumerate_involutive_bruteforce(n)
    return enumerate_racks_bruteforce(n)


def counts(n, kinds=(Kind.TWO_REDUCTIVE, Kind.LEVEL2_NONDISTRIBUTIVE, Kind.ALL_INVOLUTIVE), jobs=1):
    """Number of distinct canonical keys per requested kind."""
    report = CountReport(n)
    for kind in kinds:
        kind = Kind(kind)
        start = time.perf_counter()
        keys = {entry.canonical_key for entry in stream(kind, n, jobs=jobs)}
        report.counts[kind] = len(keys)
        report.elapsed[kind] = time.perf_counter() - start
    return report
