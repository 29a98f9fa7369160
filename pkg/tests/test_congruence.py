from itertools import combinations, product

import pytest
from hypothesis import given, settings

import oracles
from conftest import M, ONE, ZERO
from strategies import quantales
from qlab.congruence import (
    Congruence,
    enumerate_congruences,
    enumerate_congruences_brute,
    generated_congruence,
    intersect_all,
    is_congruence,
    is_simple,
    is_simple_by_principals,
    is_star_simple,
    maximal_congruences,
    quotient,
    set_partitions,
    simple_quotient_congruences,
)
from qlab.constructions import are_isomorphic, c2, c3, one_element, swap_locale, z2
from qlab.errors import SizeLimitExceeded, StarMissing
from qlab import congruence
from qlab.lattice import make_chain
from qlab.quantale import locale


def as_pairs(C):
    return frozenset((a, b) for a in range(C.n) for b in range(C.n) if C.related(a, b))


# -- the Congruence type ------------------------------------------------------

def test_canonical_labels():
    C = Congruence.from_labels(["x", "y", "x", "z"])
    assert C.class_of == (0, 1, 0, 2)
    assert C.classes == ((0, 2), (1,), (3,))
    assert Congruence.from_classes(4, [[3], [1], [0, 2]]) == C


def test_refines_and_intersect():
    A = Congruence((0, 1, 1))
    B = Congruence((0, 0, 1))
    assert Congruence.diagonal(3).refines(A)
    assert A.refines(Congruence.full(3))
    assert not A.refines(B)
    assert A.intersect(B).is_diagonal()


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


# -- generation --------------------------------------------------------------

def test_generated_c3_m_one():
    Q = c3()
    C = generated_congruence(Q, [(M, ONE)])
    assert C.classes == ((ZERO,), (M, ONE))
    # least among all congruences containing the pair (oracle)
    holding = [R for R in oracles.congruences(Q.join, Q.mult) if (M, ONE) in R]
    least = min(holding, key=len)
    assert all(least <= R for R in holding)
    assert as_pairs(C) == least


@pytest.mark.parametrize("make", [c2, z2, c3, swap_locale])
def test_generated_from_nothing_is_diagonal(make):
    Q = make()
    assert generated_congruence(Q, []).is_diagonal()


def test_generated_swap_star_collapses_everything():
    Q = swap_locale()
    C = generated_congruence(Q, [(1, 0)], star=True)
    assert C.is_full()
    star_cs = oracles.congruences(Q.join, Q.mult, Q.star)
    holding = [R for R in star_cs if (1, 0) in R]
    assert holding == [frozenset(product(range(4), repeat=2))]
    # without the star flag the same pair generates a proper congruence
    assert not generated_congruence(Q, [(1, 0)]).is_full()


def test_star_flag_needs_star():
    with pytest.raises(StarMissing):
        generated_congruence(c3(), [(0, 1)], star=True)
    with pytest.raises(StarMissing):
        enumerate_congruences(c3(), star=True)


# -- enumeration -------------------------------------------------------------

def test_enumerate_c2():
    assert enumerate_congruences(c2()) == [Congruence((0, 0)), Congruence((0, 1))]


def test_enumerate_z2():
    assert enumerate_congruences(z2()) == [Congruence((0, 0)), Congruence((0, 1))]


def test_enumerate_c3():
    got = enumerate_congruences(c3())
    assert got == [Congruence(v) for v in [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2)]]
    Q = c3()
    assert {as_pairs(C) for C in got} == set(oracles.congruences(Q.join, Q.mult))


def test_enumerate_guard(monkeypatch):
    monkeypatch.setattr(congruence, "ENUM_LIMIT", 3)
    Q = locale(make_chain(4))
    with pytest.raises(SizeLimitExceeded):
        enumerate_congruences(Q)
    assert len(enumerate_congruences(Q, override=True)) == 8
    monkeypatch.setenv("QLAB_MAX_ORDER", "4")
    assert len(enumerate_congruences(Q)) == 8


def test_default_guard_is_twelve():
    assert congruence.ENUM_LIMIT == 12
    assert congruence.BRUTE_LIMIT == 6


def test_strategies_agree_on_corpus(small_corpus, star_corpus):
    for Q in small_corpus:
        assert enumerate_congruences(Q) == enumerate_congruences_brute(Q)
    for Q in star_corpus:
        assert enumerate_congruences(Q, star=True) == enumerate_congruences_brute(Q, star=True)


@settings(max_examples=40, deadline=None)
@given(quantales(1, 6))
def test_strategies_agree_with_oracle(Q):
    closure = enumerate_congruences(Q)
    assert closure == enumerate_congruences_brute(Q)
    assert {as_pairs(C) for C in closure} == set(oracles.congruences(Q.join, Q.mult))


@settings(max_examples=40, deadline=None)
@given(quantales(1, 6))
def test_generated_is_least(Q):
    cs = enumerate_congruences(Q)
    for a, b in combinations(Q.elements, 2):
        G = generated_congruence(Q, [(a, b)])
        assert G.related(a, b)
        for C in cs:
            if C.related(a, b):
                assert G.refines(C)


@settings(max_examples=40, deadline=None)
@given(quantales(1, 6))
def test_closed_under_intersection(Q):
    cs = set(enumerate_congruences(Q))
    for A, B in combinations(cs, 2):
        assert A.intersect(B) in cs
        assert is_congruence(Q, A.intersect(B))


# -- simplicity ----------------------------------------------------------------

def test_simple_examples():
    assert is_simple(c2())
    assert not is_simple(z2())
    assert not is_simple(c3())
    assert not is_simple(one_element())


def test_swap_locale_star_simple_not_simple():
    Q = swap_locale()
    assert not is_simple(Q)
    assert is_star_simple(Q)
    assert len(enumerate_congruences(Q)) == 4
    assert enumerate_congruences(Q, star=True) == [Congruence.full(4), Congruence.diagonal(4)]


def test_star_simple_needs_star():
    with pytest.raises(StarMissing):
        is_star_simple(c2())


def test_simple_iff_principals_full(small_corpus):
    for Q in small_corpus:
        assert is_simple(Q) == is_simple_by_principals(Q)


# -- quotients ---------------------------------------------------------------

def test_quotient_c3_onto_c2():
    K, proj = quotient(c3(), Congruence((0, 1, 1)))
    assert are_isomorphic(K, c2())
    assert proj == (0, 1, 1)


@pytest.mark.parametrize("make", [c2, z2, c3, swap_locale])
def test_quotient_by_diagonal_and_full(make):
    Q = make()
    K, _ = quotient(Q, Congruence.diagonal(Q.n))
    assert K == Q
    K, _ = quotient(Q, Congruence.full(Q.n))
    assert K.n == 1


def test_star_descends_to_quotient():
    Q = swap_locale()
    K, _ = quotient(Q, Congruence.full(4))
    assert K.star == (0,)
    K, _ = quotient(Q, Congruence.from_classes(4, [[0, 1], [2, 3]]))
    assert K.star is None


@settings(max_examples=30, deadline=None)
@given(quantales(1, 5))
def test_projection_is_morphism(Q):
    for C in enumerate_congruences(Q):
        K, p = quotient(Q, C)
        assert sorted(set(p)) == list(K.elements)
        for x, y in product(Q.elements, repeat=2):
            assert p[Q.join[x][y]] == K.join[p[x]][p[y]]
            assert p[Q.mult[x][y]] == K.mult[p[x]][p[y]]


# -- maximal and simple-quotient congruences ----------------------------------

def test_maximal_examples():
    assert maximal_congruences(c3()) == [Congruence((0, 0, 1)), Congruence((0, 1, 1))]
    assert maximal_congruences(c2()) == [Congruence.diagonal(2)]
    assert maximal_congruences(z2()) == [Congruence.diagonal(2)]
    assert not is_simple(quotient(z2(), Congruence.diagonal(2))[0])


def test_simple_quotient_examples():
    assert simple_quotient_congruences(c3()) == maximal_congruences(c3())
    for C in simple_quotient_congruences(c3()):
        assert are_isomorphic(quotient(c3(), C)[0], c2())
    assert simple_quotient_congruences(z2()) == []
    assert simple_quotient_congruences(c2()) == [Congruence.diagonal(2)]


def test_intersect_all():
    assert intersect_all(3, maximal_congruences(c3())).is_diagonal()
    assert intersect_all(3, []).is_full()
