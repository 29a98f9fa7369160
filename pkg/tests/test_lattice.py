import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qlab.constructions import enumerate_lattices, enumerate_lattices_unpruned
from qlab.errors import ValidationError
from qlab.io import parse, serialize_lattice
from qlab.lattice import (
    make_chain,
    make_diamond_m5,
    make_powerset,
    product_lattice,
    validate_lattice,
)


def all_small_lattices():
    out = []
    for n in range(1, 6):
        out.extend(enumerate_lattices(n))
    out.append(make_powerset(3))
    out.append(make_chain(6))
    return out


SMALL = all_small_lattices()


def test_chain_two():
    L = make_chain(2)
    assert L.n == 2 and L.bottom == 0 and L.top == 1
    assert L.leq(0, 1) and not L.leq(1, 0)


def test_diamond_m5():
    L = make_diamond_m5()
    assert L.n == 5
    atoms = [x for x in L.elements if x not in (L.bottom, L.top)
             and all(not L.leq(y, x) or y in (x, L.bottom) for y in L.elements)]
    assert len(atoms) == 3
    for a in atoms:
        for b in atoms:
            if a != b:
                assert L.join[a][b] == L.top
                assert L.meet(a, b) == L.bottom


def test_powerset_two_is_boolean():
    L = make_powerset(2)
    assert L.n == 4
    for a in L.elements:
        comps = [b for b in L.elements if L.join[a][b] == L.top and L.meet(a, b) == L.bottom]
        assert len(comps) == 1


def test_one_element_lattice_is_legal():
    L = validate_lattice([[0]])
    assert L.bottom == L.top == 0


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_meet_is_greatest_lower_bound(L):
    for a in L.elements:
        for b in L.elements:
            m = L.meet(a, b)
            assert m == oracles.meet(L.join, a, b)
            assert L.leq(m, a) and L.leq(m, b)
            for c in L.elements:
                if L.leq(c, a) and L.leq(c, b):
                    assert L.leq(c, m)


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_absorption(L):
    for a in L.elements:
        for b in L.elements:
            assert L.join[a][L.meet(a, b)] == a
            assert L.meet(a, L.join[a][b]) == a


def test_dual_swaps_bounds_and_order():
    L = make_diamond_m5()
    D = L.dual()
    assert D.bottom == L.top and D.top == L.bottom
    assert all(D.leq(a, b) == L.leq(b, a) for a in L.elements for b in L.elements)


def test_join_all_and_meet_all():
    L = make_powerset(3)
    assert L.join_all([]) == L.bottom
    assert L.meet_all([]) == L.top
    assert L.join_all([1, 2, 4]) == 7
    assert L.meet_all([3, 5, 7]) == 1


def test_product_lattice_order():
    L, elems = product_lattice([make_chain(2), make_chain(3)])
    assert L.n == 6
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            assert L.leq(i, j) == all(a <= b for a, b in zip(x, y))


@pytest.mark.parametrize(
    "table, law",
    [
        ([], "Empty"),
        ([[0, 1]], "NotSquare"),
        ([[0, 5], [5, 1]], "OutOfRange"),
        ([[0, 1], [0, 1]], "NonCommutative"),
        ([[1, 1], [1, 1]], "NonIdempotent"),
        # two minimal elements under a common top
        ([[0, 2, 2], [2, 1, 2], [2, 2, 2]], "NoBottom"),
    ],
)
def test_validate_lattice_errors(table, law):
    with pytest.raises(ValidationError) as e:
        validate_lattice(table)
    assert e.value.law == law


def test_nonassociative_join_rejected():
    # commutative, idempotent, not associative
    t = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]
    with pytest.raises(ValidationError) as e:
        validate_lattice(t)
    assert e.value.law == "NonAssociative"


def lattice_axioms_hold(t):
    """Independent oracle: commutative, associative, idempotent, bounded."""
    n = len(t)
    r = range(n)
    if any(t[a][b] != t[b][a] for a in r for b in r):
        return False
    if any(t[t[a][b]][c] != t[a][t[b][c]] for a in r for b in r for c in r):
        return False
    if any(t[a][a] != a for a in r):
        return False
    return any(all(t[x][y] == y for y in r) for x in r)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_validate_lattice_fuzz(table):
    ok = lattice_axioms_hold(table)
    try:
        L = validate_lattice(table)
    except ValidationError:
        assert not ok
        return
    assert ok
    again = parse(serialize_lattice(L, "f")).lattice
    assert again == L


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_validate_accepts_relabelled_lattices(n, rnd):
    L = rnd.choice(enumerate_lattices(n))
    perm = list(range(n))
    rnd.shuffle(perm)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    t = [[perm[L.join[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
    L2 = validate_lattice(t)
    assert L2.bottom == perm[L.bottom] and L2.top == perm[L.top]


def test_lattice_counts():
    # numbers of unlabelled lattices of order 1..6
    assert [len(enumerate_lattices(n)) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pruned_matches_unpruned(n):
    assert len(enumerate_lattices_unpruned(n)) == len(enumerate_lattices(n))
