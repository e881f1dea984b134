import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from ybmesh import canonical_key
from ybmesh.canon import canonical_form, canonical_table, key_to_table, refine_colouring

from worked import CYC4, LEVEL2_5, LRI5, MED4, RED4


def relabel(table, h):
    n = len(table)
    inv = [0] * n
    for i, v in enumerate(h):
        inv[v] = i
    return [[h[table[inv[x]][inv[y]]] for y in range(n)] for x in range(n)]


def brute_isomorphic(a, b):
    b = [list(r) for r in b]
    return any(relabel(a, h) == b for h in itertools.permutations(range(len(a))))


@st.composite
def tables(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return [draw(st.permutations(range(n))) for _ in range(n)]


def test_key_encodes_canonical_table():
    key = canonical_key(MED4)
    assert len(key) == 2 * 16
    table = key_to_table(key)
    assert table == canonical_table(MED4)
    assert brute_isomorphic(MED4, table)


def test_labelling_maps_to_canonical_table():
    for table in (RED4, MED4, CYC4, LRI5, LEVEL2_5):
        flat, lab = canonical_form(table)
        n = len(table)
        assert sorted(lab) == list(range(n))
        for x in range(n):
            for y in range(n):
                assert flat[lab[x] * n + lab[y]] == lab[table[x][y]]


def test_key_to_table_rejects_bad_length():
    import pytest

    with pytest.raises(ValueError):
        key_to_table("000102", 2)


def test_colouring_is_invariant():
    h = [2, 0, 3, 1, 4]
    c = refine_colouring(LRI5)
    d = refine_colouring(relabel(LRI5, h))
    assert all(c[x] == d[h[x]] for x in range(5))


@settings(max_examples=300, deadline=None)
@given(tables(max_n=7), st.data())
def test_invariant_under_relabelling(table, data):
    h = data.draw(st.permutations(range(len(table))))
    assert canonical_key(table) == canonical_key(relabel(table, h))


@settings(max_examples=300, deadline=None)
@given(tables(max_n=4), tables(max_n=4))
def test_equal_keys_iff_isomorphic(a, b):
    if len(a) != len(b):
        assert canonical_key(a) != canonical_key(b)
        return
    assert (canonical_key(a) == canonical_key(b)) == brute_isomorphic(a, b)


def test_exhaustive_size_three():
    # all 216 tables of size 3: keys partition them exactly into isomorphism classes
    perms = list(itertools.permutations(range(3)))
    tables_ = [list(map(list, rows)) for rows in itertools.product(perms, repeat=3)]
    keys = [canonical_key(t) for t in tables_]
    for i in range(0, len(tables_), 7):
        for j in range(len(tables_)):
            assert (keys[i] == keys[j]) == brute_isomorphic(tables_[i], tables_[j])
