import random

import pytest

from qlab.checks import CheckResult
from qlab.constructions import c3, endomorphism_quantale, enumerate_quantales, random_quantale, z2
from qlab.lattice import make_chain, make_powerset, validate_lattice
from qlab.quantale import Quantale, validate_quantale
from qlab.report import analyze, format_text
from qlab.theorems import SUITE, check_residuation, run_suite


def test_check_result_line():
    assert CheckResult("x", True).line() == "PASS x"
    bad = CheckResult("x", False, (1, 2), "why")
    assert not bad
    assert bad.line() == "FAIL x witness=(1, 2) (why)"


def test_suite_passes_on_corpus(small_corpus, star_corpus):
    for Q in small_corpus + star_corpus:
        results = run_suite(Q)
        assert len(results) == len(SUITE)
        assert all(results), [r.line() for r in results if not r]


@pytest.mark.parametrize("seed", range(6))
def test_suite_passes_on_random_order_five_and_six(seed):
    rng = random.Random(seed)
    Q = random_quantale(5 + seed % 2, rng, with_star=seed % 3 == 0)
    assert all(run_suite(Q))


def test_suite_on_endomorphism_quantales():
    for S in (make_chain(3), make_powerset(2)):
        assert all(run_suite(endomorphism_quantale(S).quantale))


def test_broken_table_is_caught():
    # bypass validation with a table that is not join preserving
    L = make_chain(3)
    Q = Quantale(L, ((0, 0, 0), (0, 1, 0), (0, 0, 0)))
    r = check_residuation(Q)
    assert not r and r.witness is not None


def test_large_structures_skip_enumeration():
    E = endomorphism_quantale(make_powerset(2))
    rep = analyze(E.quantale, "endo", run_theorems=False)
    assert rep.congruence_count is None
    assert "congruences not enumerated above the size limit" in rep.notes


def test_report_notes():
    rep = analyze(z2(), "z2")
    assert not rep.simple
    assert "1·1=0" in rep.notes
    assert any("non-simple quotient" in n for n in rep.notes)
    assert any("spatiality" in n for n in rep.notes)
    text = format_text(rep)
    assert "z2" in text and "simple=False" in text


def test_report_star_fields(SWAP):
    rep = analyze(SWAP, "swap")
    assert rep.has_star and rep.star_simple and not rep.simple
    assert rep.star_factor and not rep.factor
    assert rep.sided["hermitian_two_sided"] == 2


def test_report_id_is_isomorphism_invariant():
    Q = c3()
    R = validate_quantale(
        # the 3-chain with elements listed top, middle, bottom
        validate_lattice([[0, 0, 0], [0, 1, 1], [0, 1, 2]]),
        [[0, 1, 2], [1, 1, 2], [2, 2, 2]],
    )
    assert analyze(Q, "a", False).id == analyze(R, "b", False).id


@pytest.mark.slow
def test_order_five_enumeration():
    qs = enumerate_quantales(5, allow_order5=True)
    keys = {(Q.join, Q.mult) for Q in qs}
    assert len(keys) == len(qs)
    for Q in qs:
        assert validate_quantale(Q.lattice, Q.mult) == Q
        assert Q.bottom == 0 and Q.top == 4
