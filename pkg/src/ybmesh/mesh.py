"""Trivial affine meshes and their sums.

A mesh is a list of finite abelian groups ``A_0 .. A_{k-1}`` and a ``k x k``
matrix of constants with ``constants[i][j]`` in ``A_j``; every column must
generate its group.  The sum lives on the disjoint union of the groups, with
``a o b = b + c[i][j]`` and ``a . b = a - c[j][i]`` for ``a`` in ``A_i`` and
``b`` in ``A_j``.  Blocks are laid out in group order and each element sits at
``offset_j + index`` where ``index`` is its mixed-radix position in ``A_j``.
"""

import os
from dataclasses import dataclass
from itertools import permutations, product

from .abelian import FiniteAbelianGroup, abelian_groups_of_order, invariant_factors_from_orders
from .algebra import LeftQuasigroup, Property, check_property, orbits
from .birack import InvolutiveBirack
from .config import require_budget
from .errors import GeneratorsDoNotGenerate, InvalidInput, InvalidMesh

DEFAULT_MAX_MESH_SIZE = 10


@dataclass(frozen=True)
class TrivialAffineMesh:
    groups: tuple
    constants: tuple

    def __post_init__(self):
        groups = tuple(
            g if isinstance(g, FiniteAbelianGroup) else FiniteAbelianGroup(g) for g in self.groups
        )
        consts = tuple(tuple(tuple(c) for c in row) for row in self.constants)
        object.__setattr__(self, "groups", groups)
        object.__setattr__(self, "constants", consts)
        k = len(groups)
        if k == 0:
            raise InvalidMesh("a mesh needs at least one group")
        if len(consts) != k or any(len(row) != k for row in consts):
            raise InvalidMesh(f"constants must form a {k}x{k} matrix")
        for i, row in enumerate(consts):
            for j, c in enumerate(row):
                if not groups[j].contains(c):
                    raise InvalidMesh(f"constant ({i},{j}) = {c} is not an element of {groups[j]}")

    @property
    def k(self):
        return len(self.groups)

    @property
    def size(self):
        return sum(g.order for g in self.groups)

    def offsets(self):
        out, acc = [], 0
        for g in self.groups:
            out.append(acc)
            acc += g.order
        return out

    def index_matrix(self):
        """Constants as element indices, row-major."""
        return tuple(
            self.groups[j].index(self.constants[i][j]) for i in range(self.k) for j in range(self.k)
        )

    def __str__(self):
        groups = ",".join(repr(g) for g in self.groups)
        rows = ";".join(" ".join(_fmt_elem(c) for c in row) for row in self.constants)
        return f"(({groups}),({rows}))"


def _fmt_elem(c):
    if len(c) == 0:
        return "0"
    if len(c) == 1:
        return str(c[0])
    return "(" + ",".join(map(str, c)) + ")"


def cyclic_mesh(orders, matrix):
    """Convenience constructor for meshes of cyclic groups with integer constants."""
    groups = [FiniteAbelianGroup.cyclic(d) for d in orders]
    consts = [
        [() if groups[j].rank == 0 else (matrix[i][j] % orders[j],) for j in range(len(orders))]
        for i in range(len(orders))
    ]
    return TrivialAffineMesh(tuple(groups), tuple(tuple(r) for r in consts))


def validate_mesh(m):
    """Every column of constants generates its group."""
    return all(
        m.groups[j].generates([m.constants[i][j] for i in range(m.k)]) for j in range(m.k)
    )


def mesh_condition_star(m):
    """Every column of constants contains the zero element."""
    return all(
        any(not any(m.constants[i][j]) for i in range(m.k)) for j in range(m.k)
    )


def mesh_sum(m):
    if not validate_mesh(m):
        raise InvalidMesh("constants do not generate every group")
    offsets = m.offsets()
    block = []
    local = []
    for j, g in enumerate(m.groups):
        for idx in range(g.order):
            block.append(j)
            local.append(idx)
    n = len(block)
    # translation by c[i][j] on block j, as index maps
    shift = {}
    for i in range(m.k):
        for j, g in enumerate(m.groups):
            c = m.constants[i][j]
            shift[i, j] = [offsets[j] + g.index(g.add(e, c)) for e in g.elements()]
            shift[i, j, "-"] = [offsets[j] + g.index(g.sub(e, c)) for e in g.elements()]
    circ = [[shift[block[a], block[b]][local[b]] for b in range(n)] for a in range(n)]
    bullet = [[shift[block[b], block[a], "-"][local[a]] for b in range(n)] for a in range(n)]
    return InvolutiveBirack(LeftQuasigroup(circ), bullet)


def iyb_mesh(factors, generators):
    """Mesh over copies of ``A`` with ``c[i][j] = g_i``; its sum has LMlt isomorphic to ``A``."""
    group = FiniteAbelianGroup(factors)
    gens = [tuple(g) for g in generators]
    if not gens:
        raise GeneratorsDoNotGenerate("at least one generator is required")
    for g in gens:
        if not group.contains(g):
            raise GeneratorsDoNotGenerate(f"{g} is not an element of {group}")
    if not group.generates(gens):
        raise GeneratorsDoNotGenerate(f"{gens} do not generate {group}")
    k = len(gens)
    return TrivialAffineMesh((group,) * k, tuple(tuple(gens[i] for _ in range(k)) for i in range(k)))


def standard_generators(factors):
    group = FiniteAbelianGroup(factors)
    if group.rank == 0:
        return [()]
    return [tuple(1 if t == s else 0 for t in range(group.rank)) for s in range(group.rank)]


def _type_preserving_perms(groups):
    k = len(groups)
    return [p for p in permutations(range(k)) if all(groups[p[i]] == groups[i] for i in range(k))]


def mesh_iso(a, b):
    """Decide isomorphism of the sums via index bijections and group isomorphisms."""
    k = a.k
    if k != b.k or sorted(g.sort_key() for g in a.groups) != sorted(g.sort_key() for g in b.groups):
        return False
    require_budget(sum(len(g.automorphisms()) for g in a.groups) * k**3)
    A = [[a.groups[j].index(a.constants[i][j]) for j in range(k)] for i in range(k)]
    B = [[b.groups[j].index(b.constants[i][j]) for j in range(k)] for i in range(k)]
    pi = [-1] * k
    psi = [None] * k
    used = [False] * k

    def consistent(j):
        pj, sj = pi[j], psi[j]
        for i in range(j + 1):
            pii = pi[i]
            if sj[A[i][j]] != B[pii][pj]:
                return False
            if psi[i][A[j][i]] != B[pj][pii]:
                return False
        return True

    def search(j):
        if j == k:
            return True
        for target in range(k):
            if used[target] or b.groups[target] != a.groups[j]:
                continue
            pi[j] = target
            used[target] = True
            for aut in a.groups[j].automorphisms():
                psi[j] = aut
                if consistent(j) and search(j + 1):
                    return True
            used[target] = False
        pi[j] = -1
        psi[j] = None
        return False

    return search(0)


# -- enumeration -----------------------------------------------------------


def group_tuples(n):
    """Sorted tuples of abelian groups whose orders sum to ``n``."""
    by_order = {d: abelian_groups_of_order(d) for d in range(1, n + 1)}
    types = sorted((g for d in range(1, n + 1) for g in by_order[d]), key=FiniteAbelianGroup.sort_key)

    def rec(remaining, start):
        if remaining == 0:
            yield ()
            return
        for idx in range(start, len(types)):
            g = types[idx]
            if g.order > remaining:
                break
            for rest in rec(remaining - g.order, idx):
                yield (g,) + rest

    return list(rec(n, 0))


def _valid_columns(groups, j):
    g = groups[j]
    k = len(groups)
    elems = g.elements()
    cols = []
    for col in product(range(g.order), repeat=k):
        if g.generates([elems[c] for c in col]):
            cols.append(col)
    return cols


def meshes_for_groups(groups):
    """One mesh per isomorphism class with the given sorted group tuple.

    Valid matrices are visited once; each unseen one starts a class whose whole
    orbit under (type-preserving index permutations) x (column automorphisms)
    is marked.  The lexicographically least orbit member is emitted.
    """
    groups = tuple(groups)
    k = len(groups)
    columns = [_valid_columns(groups, j) for j in range(k)]
    perms = _type_preserving_perms(groups)
    auts = [g.automorphisms() for g in groups]
    aut_choices = list(product(*auts))
    # radix weights, row-major with cell (0, 0) most significant
    radix = [groups[j].order for _ in range(k) for j in range(k)]
    weight = [0] * (k * k)
    acc = 1
    for pos in range(k * k - 1, -1, -1):
        weight[pos] = acc
        acc *= radix[pos]
    # flat position of cell (p(i), p(j)) for every permutation
    targets = [[weight[p[i] * k + p[j]] for i in range(k) for j in range(k)] for p in perms]
    col_of = [pos % k for pos in range(k * k)]
    seen = set()
    reps = []
    for combo in product(*columns):
        flat = [combo[j][i] for i in range(k) for j in range(k)]
        code = sum(v * w for v, w in zip(flat, weight))
        if code in seen:
            continue
        best = code
        for psi in aut_choices:
            mapped = [psi[col_of[pos]][v] for pos, v in enumerate(flat)]
            for tw in targets:
                c = sum(v * w for v, w in zip(mapped, tw))
                if c not in seen:
                    seen.add(c)
                    if c < best:
                        best = c
        reps.append(best)
    out = []
    for code in sorted(reps):
        idx = []
        for pos in range(k * k):
            idx.append(code // weight[pos] % radix[pos])
        consts = tuple(
            tuple(groups[j].element(idx[i * k + j]) for j in range(k)) for i in range(k)
        )
        out.append(TrivialAffineMesh(groups, consts))
    return out


def _meshes_task(groups):
    return meshes_for_groups(groups)


def enumerate_meshes(n, jobs=1, max_size=DEFAULT_MAX_MESH_SIZE):
    """All trivial affine meshes of total size ``n`` up to isomorphism."""
    if n < 1:
        raise InvalidInput("size must be positive")
    if n > max_size:
        require_budget(float("inf"))
    tasks = group_tuples(n)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_meshes_task, tasks, chunksize=1)
    else:
        results = map(_meshes_task, tasks)
    for chunk in results:
        yield from chunk


def count_meshes(n, jobs=1):
    return sum(1 for _ in enumerate_meshes(n, jobs=jobs))


# -- decomposition -----------------------------------------------------------


def mesh_from_birack(b):
    """Recover a mesh whose sum is isomorphic to a distributive birack ``b``."""
    lq = b.circ
    t = lq.table
    if not check_property(lq, Property.LEFT_DISTRIBUTIVE):
        raise InvalidInput("birack is not distributive")
    blocks = orbits(lq)
    gens = {row for row in t}
    groups = []
    coords = {}
    for orb in blocks:
        e = orb[0]
        # alpha[p] = the element of LMlt (restricted to the orbit) sending e to p
        alpha = {e: {x: x for x in orb}}
        frontier = [e]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = g[p]
                    if q not in alpha:
                        alpha[q] = {x: g[alpha[p][x]] for x in orb}
                        nxt.append(q)
            frontier = nxt
        if len(alpha) != len(orb):
            raise InvalidInput("orbit is not a regular orbit of an abelian group")

        def add(p, q, alpha=alpha):
            return alpha[p][q]

        def order_of(p, e=e, add=add):
            k, acc = 1, p
            while acc != e:
                acc = add(acc, p)
                k += 1
            return k

        factors = invariant_factors_from_orders(order_of(p) for p in orb)
        group = FiniteAbelianGroup(factors)
        iso = _find_iso(group, orb, e, add, order_of)
        groups.append(group)
        for elem, p in iso.items():
            coords[p] = elem
    consts = tuple(
        tuple(coords[t[ei[0]][ej[0]]] for ej in blocks) for ei in blocks
    )
    return TrivialAffineMesh(tuple(groups), consts)


def _find_iso(group, orb, zero, add, order_of):
    """Map the standard basis of ``group`` onto elements of the orbit group."""
    if group.rank == 0:
        return {(): zero}
    by_order = {}
    for p in orb:
        by_order.setdefault(order_of(p), []).append(p)
    choices = [by_order.get(d, []) for d in group.factors]
    for basis in product(*choices):
        image = {}
        for elem in group.elements():
            acc = zero
            for coeff, gen in zip(elem, basis):
                for _ in range(coeff):
                    acc = add(acc, gen)
            image[elem] = acc
        if len(set(image.values())) == group.order:
            return image
    raise InvalidInput("could not identify orbit group")
