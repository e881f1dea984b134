import itertools
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybmesh import (
    BirackProperty,
    InvolutiveBirack,
    Permutation,
    birack_from_cycle_set,
    birack_from_table,
    birack_from_tables,
    birack_isomorphism,
    check_birack_property,
    check_braid,
    lq_from_table,
    mp_level,
    permutation_group_structure,
    retraction,
)
from ybmesh.birack import right_distributive, tau_classes, sim_classes
from ybmesh.errors import AxiomViolation, NotRightCyclic

import catalogs
from worked import (
    CYC4,
    LEVEL2_5,
    LEVEL3_A,
    LEVEL3_B,
    LRI5,
    MED4,
    MED4_BULLET,
    MED4_QUOTIENT,
    PERM3,
    RED4,
)


def relabel(table, h):
    n = len(table)
    inv = [0] * n
    for i, v in enumerate(h):
        inv[v] = i
    return [[h[table[inv[x]][inv[y]]] for y in range(n)] for x in range(n)]


def brute_isomorphic(a, b):
    n = len(a)
    return any(relabel(a, h) == [list(r) for r in b] for h in itertools.permutations(range(n)))


class TestConstruction:
    def test_bullet_of_med4(self):
        b = birack_from_table(MED4)
        assert [list(r) for r in b.bullet] == MED4_BULLET

    def test_projection(self):
        b = birack_from_table([[0, 1, 2]] * 3)
        assert all(b.bullet[x][y] == x for x in range(3) for y in range(3))

    def test_red4_bullet_is_mirror(self):
        b = birack_from_table(RED4)
        lq = b.circ
        assert all(b.bullet[x][y] == lq.ldiv(y, x) for x in range(4) for y in range(4))
        assert check_birack_property(b, BirackProperty.LRI)

    def test_not_right_cyclic(self):
        with pytest.raises(NotRightCyclic):
            birack_from_cycle_set(lq_from_table(PERM3))

    def test_two_element_swap(self):
        b = birack_from_cycle_set(lq_from_table([[1, 0], [1, 0]]))
        assert b.bullet == ((1, 1), (0, 0))

    def test_from_tables_valid(self):
        b = birack_from_tables(MED4, MED4_BULLET)
        assert check_braid(b)

    def test_from_tables_linv(self):
        n = 3
        circ = [list(range(n))] * n
        bullet = [[(x + 1) % n] * n for x in range(n)]
        with pytest.raises(AxiomViolation) as info:
            birack_from_tables(circ, bullet)
        assert info.value.axiom == "linv"
        assert info.value.witness == (0, 0)

    def test_from_tables_column_not_bijective(self):
        with pytest.raises(AxiomViolation) as info:
            birack_from_tables([[0, 1], [0, 1]], [[0, 1], [0, 1]])
        assert info.value.axiom == "rq"

    def test_level2_5_valid(self):
        derived = birack_from_table(LEVEL2_5)
        assert birack_from_tables(LEVEL2_5, derived.bullet) == derived


class TestBraid:
    def test_derived_biracks(self):
        for table in (RED4, MED4, CYC4, LEVEL2_5, LRI5, LEVEL3_A, LEVEL3_B):
            assert check_braid(birack_from_table(table))

    def test_projection(self):
        assert check_braid(birack_from_table([[0, 1, 2, 3]] * 4))

    def test_constant_bullet_fails(self):
        bad = InvolutiveBirack(lq_from_table(RED4), [[x] * 4 for x in range(4)])
        result = check_braid(bad)
        assert not result
        assert result.witness is not None


class TestProperties:
    def test_red4(self):
        b = birack_from_table(RED4)
        assert check_birack_property(b, BirackProperty.DISTRIBUTIVE)
        assert check_birack_property(b, BirackProperty.LRI)

    def test_med4(self):
        b = birack_from_table(MED4)
        assert check_birack_property(b, BirackProperty.TWO_PERMUTATIONAL)
        assert not check_birack_property(b, BirackProperty.LRI)
        assert not check_birack_property(b, BirackProperty.DISTRIBUTIVE)

    def test_lri5(self):
        b = birack_from_table(LRI5)
        assert check_birack_property(b, BirackProperty.IDEMPOTENT)
        assert check_birack_property(b, BirackProperty.LRI)
        assert not check_birack_property(b, BirackProperty.TWO_REDUCTIVE)
        # R_y = L_y for every y
        for y in range(5):
            assert b.right_translation(y) == b.circ.translation(y)
        assert b.circ.table[b.circ.table[1][3]] != b.circ.table[3]

    def test_irretractable(self):
        assert check_birack_property(birack_from_table(RED4), BirackProperty.IRRETRACTABLE) is False
        assert check_birack_property(birack_from_table(CYC4), BirackProperty.IRRETRACTABLE) is False


class TestRetraction:
    def test_med4(self):
        r = retraction(birack_from_table(MED4))
        assert r.quotient.n == 2
        assert r.quotient.circ.table == MED4_QUOTIENT
        assert check_birack_property(r.quotient, BirackProperty.ONE_PERMUTATIONAL)
        assert not check_birack_property(r.quotient, BirackProperty.PROJECTION)
        assert r.classes == ((0, 2), (1, 3))
        assert r.projection == (0, 1, 0, 1)

    def test_projection(self):
        assert retraction(birack_from_table([[0, 1, 2]] * 3)).quotient.n == 1

    def test_red4(self):
        q = retraction(birack_from_table(RED4)).quotient
        assert q.n == 2
        assert check_birack_property(q, BirackProperty.PROJECTION)


class TestLevel:
    def test_single(self):
        assert mp_level(birack_from_table([[0]])) == 0

    def test_med4(self):
        assert mp_level(birack_from_table(MED4)) == 2

    def test_level_three(self):
        assert mp_level(birack_from_table(LEVEL3_A)) == 3
        assert mp_level(birack_from_table(LEVEL3_B)) == 3

    def test_not_multipermutation(self):
        # the involutive solution r(x, y) = (y + 1, x - 1) on Z_2 is irretractable
        b = birack_from_table([[1, 0], [1, 0]])
        assert mp_level(b) == 1
        found = [e for e in catalogs.involutive(4) if mp_level(e.birack) is None]
        assert found
        for e in found:
            b = e.birack
            while not check_birack_property(b, BirackProperty.IRRETRACTABLE):
                b = retraction(b).quotient
            assert b.n > 1


class TestIsomorphism:
    def test_self(self):
        b = birack_from_table(RED4)
        h = birack_isomorphism(b, b)
        assert h is not None

    def test_level_three_pair(self):
        a, b = birack_from_table(LEVEL3_A), birack_from_table(LEVEL3_B)
        assert birack_isomorphism(a, b) is None

    def test_med4_vs_cyc4(self):
        assert birack_isomorphism(birack_from_table(MED4), birack_from_table(CYC4)) is None

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([RED4, MED4, CYC4, LEVEL2_5, LRI5, LEVEL3_A]), st.data())
    def test_relabelling_found(self, table, data):
        h = data.draw(st.permutations(range(len(table))))
        a = birack_from_table(table)
        b = birack_from_table(relabel(table, h))
        g = birack_isomorphism(a, b)
        assert g is not None
        back = birack_isomorphism(b, a)
        assert back is not None
        t, u = a.circ.table, b.circ.table
        assert all(g[t[x][y]] == u[g[x]][g[y]] for x in range(len(t)) for y in range(len(t)))
        inv = Permutation(g).inverse()
        assert all(inv[u[x][y]] == t[inv[x]][inv[y]] for x in range(len(t)) for y in range(len(t)))

    def test_against_brute_force(self):
        entries = catalogs.involutive(4)
        for a, b in itertools.combinations_with_replacement(entries, 2):
            found = birack_isomorphism(a.birack, b.birack) is not None
            assert found == brute_isomorphic(a.table, b.table)


class TestGroupStructure:
    def test_red4(self):
        s = permutation_group_structure(birack_from_table(RED4))
        assert (s.order, s.is_abelian, s.invariant_factors) == (2, True, [2])

    def test_trivial(self):
        s = permutation_group_structure(birack_from_table([[0, 1, 2]] * 3))
        assert (s.order, s.is_abelian, s.invariant_factors) == (1, True, [])


@pytest.fixture(scope="module", params=[1, 2, 3, 4, 5])
def entries(request):
    return catalogs.involutive(request.param)


class TestInvariants:
    """Exhaustive over every involutive solution of size at most 5."""

    def test_braid_and_involutive(self, entries):
        for e in entries:
            assert check_braid(e.birack)
            assert check_birack_property(e.birack, BirackProperty.INVOLUTIVE)

    def test_distributive_iff_reductive(self, entries):
        for e in entries:
            b = e.birack
            assert check_birack_property(b, BirackProperty.DISTRIBUTIVE) == check_birack_property(
                b, BirackProperty.TWO_REDUCTIVE
            )
            assert check_birack_property(b, BirackProperty.DISTRIBUTIVE) == right_distributive(b)

    def test_permutational_iff_medial(self, entries):
        for e in entries:
            b = e.birack
            assert check_birack_property(b, BirackProperty.TWO_PERMUTATIONAL) == check_birack_property(
                b, BirackProperty.MEDIAL
            )

    def test_lri_on_permutational(self, entries):
        for e in entries:
            b = e.birack
            if check_birack_property(b, BirackProperty.TWO_PERMUTATIONAL):
                assert check_birack_property(b, BirackProperty.DISTRIBUTIVE) == check_birack_property(
                    b, BirackProperty.LRI
                )

    def test_levels(self, entries):
        for e in entries:
            b = e.birack
            level = mp_level(b)
            if check_birack_property(b, BirackProperty.DISTRIBUTIVE):
                assert level is not None and level <= 2
            medial = check_birack_property(b, BirackProperty.MEDIAL)
            assert (level == 2) == (medial and level not in (0, 1))
            if level == 2:
                q = retraction(b).quotient
                trivial = all(row == tuple(range(q.n)) for row in q.circ.table)
                assert trivial == check_birack_property(b, BirackProperty.DISTRIBUTIVE)

    def test_retraction(self, entries):
        for e in entries:
            b = e.birack
            with warnings.catch_warnings():
                warnings.simplefilter("error")
                r = retraction(b)
            assert tau_classes(b) == sim_classes(b)
            assert check_braid(r.quotient)
            t, q, p = b.circ.table, r.quotient.circ.table, r.projection
            for x in range(b.n):
                for y in range(b.n):
                    assert p[t[x][y]] == q[p[x]][p[y]]
                    assert p[b.bullet[x][y]] == r.quotient.bullet[p[x]][p[y]]

    def test_orthogonality(self, entries):
        for e in entries:
            b = e.birack
            if not check_birack_property(b, BirackProperty.DISTRIBUTIVE):
                continue
            t, s, lq = b.circ.table, b.bullet, b.circ
            pairs = {(t[x][y], s[x][y]): (x, y) for x in range(b.n) for y in range(b.n)}
            assert len(pairs) == b.n ** 2
            for (a, c), (x, y) in pairs.items():
                assert (x, y) == (t[a][c], lq.ldiv(c, a))
