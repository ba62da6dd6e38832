"""Both kernel backends against the brute-force oracles."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import BACKENDS
from pomkit import kernels
from pomkit.core import members_of


def as_rows(n, rel):
    rows = [0] * n
    for a, b in rel:
        rows[a] |= 1 << b
    return rows


def as_pairs(rows):
    return {(a, b) for a, r in enumerate(rows) for b in members_of(r)}


@st.composite
def tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return n, flat


@st.composite
def relations(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    return n, edges


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=200, deadline=None)
@given(relations())
def test_closure_matches_warshall_oracle(backend, data):
    n, edges = data
    got = backend.closure(as_rows(n, edges), n)
    assert as_pairs(got) == oracles.warshall(n, edges)


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=200, deadline=None)
@given(tables())
def test_assoc_violation_is_least_oracle_triple(backend, data):
    n, flat = data
    table = [flat[i * n:(i + 1) * n] for i in range(n)]
    bad = oracles.assoc_triples(table)
    assert backend.assoc_violation(flat, n) == (bad[0] if bad else None)


def test_compat_violation_matches_oracle_on_all_small_cases(backend):
    for n in (1, 2, 3):
        prs = oracles.all_preorders(n)
        for t in oracles.all_monoid_tables(n):
            flat = [v for r in t for v in r]
            for rel in prs:
                got = backend.compat_violation(flat, as_rows(n, rel), n)
                assert (got is None) == oracles.compatible(t, rel)
                if got is not None:
                    a, b, c, d = got
                    assert (a, b) in rel and (c, d) in rel
                    assert (t[a][c], t[b][d]) not in rel


def test_compat_witness_is_lexicographically_least(backend):
    t = oracles.EX2_2
    rel = oracles.warshall(5, [(1, 0)])
    flat = [v for r in t for v in r]
    expected = min((a, b, c, d) for (a, b) in rel for (c, d) in rel
                   if (t[a][c], t[b][d]) not in rel)
    assert backend.compat_violation(flat, as_rows(5, rel), 5) == expected


@pytest.mark.parametrize("side", [0, 1])
def test_coset_masks(backend, side):
    t = oracles.EX2_2
    flat = [v for r in t for v in r]
    for members in ({0}, {0, 1}, {0, 2, 4}, set(range(5))):
        mask = sum(1 << x for x in members)
        got = backend.coset_masks(flat, 5, mask, side)
        for a in range(5):
            want = {t[x][a] for x in members} if side == 0 else {t[a][x] for x in members}
            assert set(members_of(got[a])) == want


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 11), (4, 156)])
def test_enum_monoid_tables_counts(backend, n, count):
    # counts from oracles.all_monoid_tables (unpruned generate-and-filter)
    tabs = [tuple(t) for t in backend.enum_monoid_tables(n)]
    assert len(tabs) == count
    assert len(set(tabs)) == count
    assert tabs == sorted(tabs)


def test_enum_monoid_tables_equal_oracle_sets(backend):
    for n in (1, 2, 3):
        got = {tuple(t) for t in backend.enum_monoid_tables(n)}
        want = {tuple(v for r in t for v in r) for t in oracles.all_monoid_tables(n)}
        assert got == want


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355), (5, 6942)])
def test_enum_preorders_counts(backend, n, count):
    # n <= 4 from oracles.all_preorders; 6942 is the known number of labelled
    # preorders (quasi-orders) on five points
    got = [tuple(r) for r in backend.enum_preorders(n)]
    assert len(got) == count
    assert got == sorted(got)


def test_enum_preorders_equal_oracle_sets(backend):
    for n in (1, 2, 3, 4):
        got = {frozenset(as_pairs(r)) for r in backend.enum_preorders(n)}
        assert got == set(oracles.all_preorders(n))


def test_backends_agree_on_random_inputs():
    pytest.importorskip("pomkit._ckernels")
    from pomkit import _ckernels, _purekernels
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 9)
        rows = [rng.getrandbits(n) for _ in range(n)]
        flat = [rng.randrange(n) for _ in range(n * n)]
        assert list(_ckernels.closure(rows, n)) == list(_purekernels.closure(rows, n))
        assert _ckernels.assoc_violation(flat, n) == _purekernels.assoc_violation(flat, n)
        cl = _purekernels.closure(rows, n)
        assert _ckernels.compat_violation(flat, cl, n) == _purekernels.compat_violation(flat, cl, n)


def test_dispatcher_falls_back_above_cap():
    n = 70
    rows = [1 << ((a + 1) % n) for a in range(n)]
    got = kernels.closure(rows, n)
    assert all(r == (1 << n) - 1 for r in got)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_closure_is_idempotent_on_closed_relations(backend):
    for rel in oracles.all_preorders(3):
        rows = as_rows(3, rel)
        assert list(backend.closure(rows, 3)) == rows


def test_empty_carrier_edge_cases(backend):
    assert list(backend.enum_monoid_tables(0)) == []
    assert [tuple(r) for r in backend.enum_preorders(0)] == [()]
