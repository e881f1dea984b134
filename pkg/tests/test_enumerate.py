import pytest

from ybmesh import (
    BirackProperty,
    Kind,
    Property,
    birack_from_table,
    birack_isomorphism,
    canonical_key,
    check_birack_property,
    check_braid,
    check_property,
    counts,
    enumerate_level2_nondistributive,
    lq_from_table,
    mesh_sum,
    mp_level,
    retraction,
)
from ybmesh.enumerate import mesh_from_token, mesh_token, stream
from ybmesh.errors import InvalidInput, WorkLimitExceeded
from ybmesh.isotope import lq_isotope
from ybmesh.search import _first_rows, _representative

import catalogs
from worked import CYC4, MED4


class TestSmallCounts:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 17), (5, 65)])
    def test_distributive(self, n, count):
        assert len(catalogs.distributive(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 0), (2, 0), (3, 0), (4, 2), (5, 5), (6, 36)])
    def test_level2(self, n, count):
        assert len(catalogs.level2(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 23), (5, 88)])
    def test_involutive(self, n, count):
        assert len(catalogs.involutive(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 6), (4, 19), (5, 74)])
    def test_racks(self, n, count):
        assert len(catalogs.racks(n)) == count

    def test_counts_report(self):
        r = counts(5)
        assert r.counts == {Kind.TWO_REDUCTIVE: 65, Kind.LEVEL2_NONDISTRIBUTIVE: 5, Kind.ALL_INVOLUTIVE: 88}
        assert r.level2_total == 70
        r = counts(2)
        assert r.counts[Kind.LEVEL2_NONDISTRIBUTIVE] == 0 and r.level2_total == 2
        r = counts(1, kinds=[Kind.TWO_REDUCTIVE, Kind.LEVEL2_NONDISTRIBUTIVE, Kind.ALL_INVOLUTIVE, Kind.RACK])
        assert r.counts == {
            Kind.TWO_REDUCTIVE: 1,
            Kind.LEVEL2_NONDISTRIBUTIVE: 0,
            Kind.ALL_INVOLUTIVE: 1,
            Kind.RACK: 1,
        }
        assert set(r.elapsed) == set(r.counts)


class TestEntries:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_distributive_entries(self, n):
        for e in catalogs.distributive(n):
            b = e.birack
            assert e.kind is Kind.TWO_REDUCTIVE
            assert check_braid(b)
            assert check_birack_property(b, BirackProperty.DISTRIBUTIVE)
            assert check_birack_property(b, BirackProperty.LRI)
            level = mp_level(b)
            assert level is not None and level <= 2
            if n >= 2 and not check_birack_property(retraction(b).quotient, BirackProperty.PROJECTION):
                assert level == 2
            assert canonical_key(e.table) == e.canonical_key

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_level2_entries(self, n):
        for e in catalogs.level2(n):
            b = e.birack
            assert check_braid(b)
            assert check_birack_property(b, BirackProperty.TWO_PERMUTATIONAL)
            assert not check_birack_property(b, BirackProperty.DISTRIBUTIVE)
            assert not check_birack_property(b, BirackProperty.LRI)
            assert mp_level(b) == 2

    def test_level2_size_four_matches_examples(self):
        found = [e.birack for e in catalogs.level2(4)]
        targets = [birack_from_table(MED4), birack_from_table(CYC4)]
        for t in targets:
            assert sum(birack_isomorphism(b, t) is not None for b in found) == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_rack_entries(self, n):
        for e in catalogs.racks(n):
            assert e.birack is None
            assert check_property(lq_from_table(e.table), Property.LEFT_DISTRIBUTIVE)

    def test_sorted_and_unique(self):
        for n in (3, 4, 5):
            for entries in (catalogs.distributive(n), catalogs.involutive(n), catalogs.racks(n)):
                keys = [e.canonical_key for e in entries]
                assert keys == sorted(set(keys))


class TestProvenance:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_mesh_tokens(self, n):
        for e in catalogs.distributive(n):
            m = mesh_from_token(e.provenance)
            assert mesh_token(m) == e.provenance
            assert canonical_key(mesh_sum(m).circ.table) == e.canonical_key
            assert ";" not in e.provenance and "=" not in e.provenance

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_isotope_provenance(self, n):
        for e in catalogs.level2(n):
            kind, rest = e.provenance.split(":", 1)
            assert kind == "iso"
            token, rho = rest.rsplit(":", 1)
            base = mesh_sum(mesh_from_token(token))
            pi = [int(v) for v in rho.split(".")]
            assert canonical_key(lq_isotope(base.circ, pi).table) == e.canonical_key

    def test_bad_token(self):
        with pytest.raises(InvalidInput):
            mesh_from_token("iso:2:0")


class TestCrossChecks:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_oracle_equivalence(self, n):
        algorithmic = {e.canonical_key for e in catalogs.distributive(n) + catalogs.level2(n)}
        brute = {
            e.canonical_key
            for e in catalogs.involutive(n)
            if check_birack_property(e.birack, BirackProperty.TWO_PERMUTATIONAL)
        }
        assert algorithmic == brute

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_distributive_solutions_are_reductive_racks(self, n):
        racks = {e.canonical_key for e in catalogs.racks(n)}
        for e in catalogs.distributive(n):
            assert e.canonical_key in racks
        reductive = {
            e.canonical_key
            for e in catalogs.racks(n)
            if check_property(lq_from_table(e.table), Property.M_REDUCTIVE, 2)
        }
        assert reductive == {e.canonical_key for e in catalogs.distributive(n)}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_literal_method_agrees(self, n):
        literal = {e.canonical_key for e in enumerate_level2_nondistributive(n, method="literal")}
        assert literal == {e.canonical_key for e in catalogs.level2(n)}

    def test_jobs_do_not_change_output(self):
        a = [(e.canonical_key, e.provenance) for e in enumerate_level2_nondistributive(6, jobs=2)]
        b = [(e.canonical_key, e.provenance) for e in catalogs.level2(6)]
        assert a == b


class TestLimits:
    def test_bruteforce_cap(self):
        from ybmesh import enumerate_involutive_bruteforce, enumerate_racks_bruteforce

        with pytest.raises(WorkLimitExceeded):
            list(enumerate_involutive_bruteforce(7))
        with pytest.raises(WorkLimitExceeded):
            list(enumerate_racks_bruteforce(7))

    def test_level2_cap(self):
        with pytest.raises(WorkLimitExceeded):
            list(enumerate_level2_nondistributive(9))

    def test_bad_size_and_method(self):
        with pytest.raises(InvalidInput):
            list(enumerate_level2_nondistributive(0))
        with pytest.raises(InvalidInput):
            list(enumerate_level2_nondistributive(3, method="other"))

    def test_stream_kinds(self):
        assert len(list(stream("racks", 3))) == 6
        with pytest.raises(ValueError):
            stream("bogus", 3)


class TestSearchSymmetryBreaking:
    def test_representatives(self):
        assert _representative((3, 2), 2) == (1, 0, 3, 4, 2)
        assert _representative((2, 1, 1), 1) == (0, 2, 1, 3)

    def test_first_rows_cover_every_type(self):
        from ybmesh.perm import cycle_type

        rows = _first_rows(5)
        assert len({cycle_type(r) for r in rows}) == 7
