"""Exhaustive checks of the structure theory on one finite quantale.

Each check returns a :class:`CheckResult` carrying a witness on failure.
Checks that need full congruence enumeration are skipped (and say so) above
the enumeration size guard.
"""

from __future__ import annotations

from itertools import combinations, product

from .checks import CheckResult
from .congruence import (
    ENUM_LIMIT,
    BRUTE_LIMIT,
    enumerate_congruences,
    enumerate_congruences_brute,
    generated_congruence,
    intersect_all,
    is_simple,
    is_simple_by_principals,
    is_star_simple,
    maximal_congruences,
    quotient,
    simple_quotient_congruences,
    star_simple_quotient_congruences,
)
from .modules import (
    cyclic_set_from_simple_module,
    dual_module,
    find_simple_faithful_module,
    is_faithful,
    is_module_isomorphic,
    is_simple_module,
    module_from_cyclic_set,
    modules_separate,
    pmn_decomposition_holds,
    rightside_module,
    star_twist_module,
)
from .quantale import (
    Quantale,
    is_factor,
    is_star_factor,
    is_strictly_faithful,
    residuate_left_direct,
    residuate_right_direct,
    sided_elements,
    star_set,
)
from .spectra import (
    CyclicSet,
    SUBSET_ORACLE_LIMIT,
    congruence_from_cyclic_set,
    cyclic_set_from_prime,
    enumerate_cyclic_sets,
    enumerate_cyclic_sets_brute,
    has_separating_cyclic_set,
    has_star_separating_cyclic_set,
    hermitian_two_sided_primes,
    is_cyclic_set,
    is_cyclic_set_lemma,
    is_prime,
    is_semisimple,
    is_semisimple_subdirect,
    is_star_semisimple,
    prime_from_cyclic_set,
    prime_set,
    primes_closed_under_residuation_check,
    pullback_cyclic_set,
    star_cyclic_check,
    two_sided_primes,
)


def _ok(name, note=""):
    return CheckResult(name, True, note=note)


def _bad(name, witness, note=""):
    return CheckResult(name, False, witness, note)


def _skipped(name):
    return CheckResult(name, True, note="skipped: order above enumeration limit")


def check_residuation(Q: Quantale) -> CheckResult:
    """The five residuation identities, both adjunctions, cache vs direct."""
    name = "residuation_laws"
    E = Q.elements
    rr, lr = Q.right_residuals, Q.left_residuals
    m, j, meet = Q.mult, Q.join, Q.meet
    for a, c in product(E, repeat=2):
        if rr[a][c] != residuate_right_direct(Q, a, c) or lr[c][a] != residuate_left_direct(Q, c, a):
            return _bad(name, ("cache", a, c))
    for a, b, c in product(E, repeat=3):
        if lr[rr[b][c]][a] != rr[b][lr[c][a]]:
            return _bad(name, ("mixed_assoc", a, b, c))
        if rr[a][rr[b][c]] != rr[m[a][b]][c]:
            return _bad(name, ("right_curry", a, b, c))
        if lr[lr[c][a]][b] != lr[c][m[a][b]]:
            return _bad(name, ("left_curry", a, b, c))
        if rr[j[a][b]][c] != meet(rr[a][c], rr[b][c]):
            return _bad(name, ("right_join", a, b, c))
        if lr[c][j[a][b]] != meet(lr[c][a], lr[c][b]):
            return _bad(name, ("left_join", a, b, c))
        ab_le = Q.leq(m[a][b], c)
        if ab_le != Q.leq(a, rr[b][c]) or ab_le != Q.leq(b, lr[c][a]):
            return _bad(name, ("adjunction", a, b, c))
    if Q.star is not None:
        s = Q.star
        for a, b in product(E, repeat=2):
            if s[rr[a][b]] != lr[s[b]][s[a]]:
                return _bad(name, ("star", a, b))
    return _ok(name)


def check_sided_closure(Q: Quantale) -> CheckResult:
    name = "sided_sets_closed"
    sd = sided_elements(Q)
    m, j = Q.mult, Q.join
    for kind, S in (("R", sd.right), ("L", sd.left), ("T", sd.two_sided)):
        if Q.bottom not in S:
            return _bad(name, (kind, "bottom"))
        for x, y in product(S, repeat=2):
            if j[x][y] not in S:
                return _bad(name, (kind, "join", x, y))
    for r, c in product(sd.right, Q.elements):
        if m[c][r] not in sd.right:
            return _bad(name, ("R", "mult", c, r))
    for l, c in product(sd.left, Q.elements):
        if m[l][c] not in sd.left:
            return _bad(name, ("L", "mult", l, c))
    return _ok(name)


def check_simple_equivalence(Q: Quantale) -> CheckResult:
    """simple <=> strictly faithful factor <=> separating cyclic set."""
    name = "simple_iff_sf_factor_iff_separating_cyclic"
    if Q.n > ENUM_LIMIT:
        return _skipped(name)
    s = is_simple(Q)
    sff = is_strictly_faithful(Q) and is_factor(Q)
    sep = has_separating_cyclic_set(Q)
    principal = is_simple_by_principals(Q)
    vals = {"simple": s, "sf_factor": sff, "separating_cyclic": sep, "principal": principal}
    if len(set(vals.values())) != 1:
        return CheckResult(name, False, vals)
    return CheckResult(name, True, details=vals)


def check_congruence_strategies(Q: Quantale) -> CheckResult:
    name = "congruence_enumeration_agrees"
    if Q.n > BRUTE_LIMIT:
        return _skipped(name)
    stars = [False] if Q.star is None else [False, True]
    for st in stars:
        a = enumerate_congruences(Q, st)
        b = enumerate_congruences_brute(Q, st)
        if a != b:
            return _bad(name, {"star": st, "closure": len(a), "brute": len(b)})
        for x, y in combinations(Q.elements, 2):
            g = generated_congruence(Q, [(x, y)], st)
            containing = [C for C in b if C.related(x, y)]
            if g not in containing or not all(g.refines(C) for C in containing):
                return _bad(name, ("generated", st, x, y))
        for A, B in combinations(b, 2):
            if A.intersect(B) not in b:
                return _bad(name, ("intersection", str(A), str(B)))
    return _ok(name)


def check_prime_bijection(Q: Quantale) -> CheckResult:
    """Two-sided primes, cyclic sets and simple quotients correspond."""
    name = "primes_cyclic_sets_simple_quotients"
    tsp = two_sided_primes(Q)
    cyc = enumerate_cyclic_sets(Q)
    details = {"two_sided_primes": len(tsp), "cyclic_sets": len(cyc)}
    for P in cyc:
        if not is_cyclic_set(Q, P) or not is_cyclic_set_lemma(Q, P):
            return _bad(name, ("not_cyclic", P.elems))
        if prime_from_cyclic_set(Q, P) != P.witness_prime:
            return _bad(name, ("witness", P.elems))
        for p in P.elems:
            if not is_prime(Q, p):
                return _bad(name, ("element_not_prime", p))
    if Q.n <= SUBSET_ORACLE_LIMIT:
        brute = enumerate_cyclic_sets_brute(Q)
        if brute != cyc:
            return _bad(name, {"subset_search": [P.elems for P in brute],
                               "from_primes": [P.elems for P in cyc]})
    if Q.n > ENUM_LIMIT:
        return CheckResult(name, True, details=details, note="quotient side skipped")
    sq = simple_quotient_congruences(Q)
    details["simple_quotients"] = len(sq)
    details["maximal_congruences"] = len(maximal_congruences(Q))
    if not len(tsp) == len(cyc) == len(sq):
        return CheckResult(name, False, details)
    for P in cyc:
        C = congruence_from_cyclic_set(Q, P)
        if C not in sq:
            return _bad(name, ("congruence_not_simple_quotient", P.elems, str(C)))
        K, proj = quotient(Q, C)
        R = CyclicSet.of(K, {proj[p] for p in P.elems})
        if not is_cyclic_set(K, R):
            return _bad(name, ("image_not_cyclic", P.elems))
        if pullback_cyclic_set(Q, C, R) != P:
            return _bad(name, ("pullback_round_trip", P.elems))
    return CheckResult(name, True, details=details)


def check_primes_closed(Q: Quantale) -> CheckResult:
    return primes_closed_under_residuation_check(Q)


def check_semisimple(Q: Quantale) -> CheckResult:
    """Simple quotients separate <=> union of cyclic sets separates <=> modules separate."""
    name = "semisimple_criteria_agree"
    if Q.n > ENUM_LIMIT:
        return _skipped(name)
    vals = {
        "union_separating": is_semisimple(Q),
        "subdirect": is_semisimple_subdirect(Q),
        "modules_separate": modules_separate(Q),
    }
    if len(set(vals.values())) != 1:
        return CheckResult(name, False, vals)
    return CheckResult(name, True, details=vals)


def check_remarks(Q: Quantale) -> CheckResult:
    name = "factor_remarks"
    if Q.n > ENUM_LIMIT:
        return _skipped(name)
    fac = is_factor(Q)
    if fac and is_semisimple(Q) and not is_simple(Q):
        return _bad(name, "semisimple factor that is not simple")
    if fac and (prime_set(Q).primes - {Q.top}) and len(simple_quotient_congruences(Q)) != 1:
        return _bad(name, "factor with a prime but not exactly one simple quotient")
    return _ok(name)


def check_modules(Q: Quantale) -> CheckResult:
    """Simple <=> simple faithful module; cyclic set <-> simple module round trips."""
    name = "module_correspondence"
    if Q.n <= ENUM_LIMIT:
        s = is_simple(Q)
    else:
        s = is_simple_by_principals(Q)
    if s:
        R = rightside_module(Q)
        if not (is_simple_module(Q, R) and is_faithful(Q, R)):
            return _bad(name, "right-sided module of a simple quantale is not simple faithful")
    found = find_simple_faithful_module(Q)
    if (found is not None) != s:
        return _bad(name, {"simple": s, "simple_faithful_module": found is not None})
    for P in enumerate_cyclic_sets(Q):
        for p in P.elems:
            M = module_from_cyclic_set(Q, P, p)
            if not is_simple_module(Q, M):
                return _bad(name, ("module_not_simple", P.elems, p))
            if not pmn_decomposition_holds(Q, M):
                return _bad(name, ("pmn_decomposition", P.elems, p))
            P2 = cyclic_set_from_simple_module(Q, M)
            if P2 != P:
                return _bad(name, ("cyclic_round_trip", P.elems, P2.elems))
            M2 = module_from_cyclic_set(Q, P2, P2.elems[0])
            if not is_module_isomorphic(Q, M, M2):
                return _bad(name, ("module_round_trip", P.elems))
            D = dual_module(Q, M)
            if not is_simple_module(Q, D):
                return _bad(name, ("dual_not_simple", P.elems))
            if is_faithful(Q, M) and not is_faithful(Q, D):
                return _bad(name, ("dual_not_faithful", P.elems))
            if not is_module_isomorphic(Q, dual_module(Q, D), M):
                return _bad(name, ("double_dual", P.elems))
            if is_simple_module(Q, M) and is_faithful(Q, M) and not s:
                return _bad(name, ("faithful_simple_module_over_non_simple", P.elems))
    return _ok(name)


def check_star_suite(Q: Quantale) -> CheckResult:
    name = "star_theory"
    if Q.star is None:
        return CheckResult(name, True, note="no involution")
    if Q.n > ENUM_LIMIT:
        return _skipped(name)
    vals = {
        "star_simple": is_star_simple(Q),
        "sf_star_factor": is_strictly_faithful(Q) and is_star_factor(Q),
        "star_separating_cyclic": has_star_separating_cyclic_set(Q),
    }
    if len(set(vals.values())) != 1:
        return CheckResult(name, False, vals)
    if is_star_semisimple(Q) != is_semisimple(Q):
        return _bad(name, {"star_semisimple": is_star_semisimple(Q), "semisimple": is_semisimple(Q)})
    cyc = enumerate_cyclic_sets(Q)
    pairs = {frozenset([P.elems, tuple(sorted(star_set(Q, P.elems)))]) for P in cyc}
    if len(pairs) != len(star_simple_quotient_congruences(Q)):
        return _bad(name, ("star_pairs_vs_star_simple_quotients", len(pairs)))
    herm = hermitian_two_sided_primes(Q)
    if len(herm) != sum(star_cyclic_check(Q, P) for P in cyc):
        return _bad(name, ("hermitian_primes_vs_star_cyclic", herm))
    for t in herm:
        if not star_cyclic_check(Q, cyclic_set_from_prime(Q, t)):
            return _bad(name, ("hermitian_prime_not_star_cyclic", t))
    for P in cyc:
        M = module_from_cyclic_set(Q, P, P.elems[0])
        T = star_twist_module(Q, M)
        if not is_simple_module(Q, T):
            return _bad(name, ("twist_not_simple", P.elems))
        Ps = sorted(star_set(Q, P.elems))
        if not is_module_isomorphic(Q, T, module_from_cyclic_set(Q, Ps, Ps[0])):
            return _bad(name, ("twist_is_not_module_of_star_set", P.elems))
        if star_cyclic_check(Q, P) and not is_module_isomorphic(Q, T, M):
            return _bad(name, ("star_cyclic_twist_not_isomorphic", P.elems))
    return CheckResult(name, True, details=vals)


SUITE = (
    check_residuation,
    check_sided_closure,
    check_congruence_strategies,
    check_simple_equivalence,
    check_prime_bijection,
    check_primes_closed,
    check_semisimple,
    check_remarks,
    check_modules,
    check_star_suite,
)


def run_suite(Q: Quantale) -> list[CheckResult]:
    return [check(Q) for check in SUITE]
