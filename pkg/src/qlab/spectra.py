"""Primes, cyclic sets, separating sets and semisimplicity.

Only proper two-sided primes (``p != top``) enter the correspondence with
cyclic sets: ``top`` satisfies the prime implication vacuously but its
residual orbit minus ``top`` is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional

from ._limits import guard
from .checks import CheckResult
from .congruence import (
    Congruence,
    intersect_all,
    is_congruence,
    is_simple,
    quotient,
    simple_quotient_congruences,
    star_simple_quotient_congruences,
)
from .errors import (
    BottomNotInS,
    IncompatibleCongruence,
    NotCyclic,
    NotSubsemigroup,
    NotTwoSidedPrime,
    QuotientNotSimple,
    TopPrimeRejected,
)
from .quantale import Quantale, sided_elements, star_set

SUBSET_ORACLE_LIMIT = 10


@dataclass(frozen=True)
class PrimeSet:
    primes: frozenset
    two_sided_primes: frozenset


@dataclass(frozen=True, order=True)
class CyclicSet:
    elems: tuple[int, ...]
    witness_prime: int

    @classmethod
    def of(cls, Q: Quantale, elems: Iterable[int]) -> "CyclicSet":
        e = tuple(sorted(set(elems)))
        return cls(e, Q.lattice.meet_all(e))

    def __contains__(self, x: int) -> bool:
        return x in self.elems

    def __iter__(self):
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)


def _elems(P) -> frozenset:
    return frozenset(P.elems if isinstance(P, CyclicSet) else P)


def is_prime(Q: Quantale, p: int) -> bool:
    m, top = Q.mult, Q.top
    for a in Q.elements:
        if Q.leq(a, p):
            continue
        at = m[a][top]
        for b in Q.elements:
            if Q.leq(m[at][b], p) and not Q.leq(b, p):
                return False
    return True


def prime_set(Q: Quantale) -> PrimeSet:
    primes = frozenset(p for p in Q.elements if is_prime(Q, p))
    two = sided_elements(Q).two_sided
    return PrimeSet(primes, frozenset(p for p in primes & two if p != Q.top))


def two_sided_primes(Q: Quantale) -> list[int]:
    """Two-sided primes other than top, ascending."""
    return sorted(prime_set(Q).two_sided_primes)


def is_separating(Q: Quantale, P: Iterable[int]) -> bool:
    return separation_witness(Q, P) is None


def separation_witness(Q: Quantale, P: Iterable[int]) -> Optional[tuple[int, int]]:
    """A pair ``a`` not >= ``b`` that no member of P separates, or None."""
    ps = sorted(_elems(P))
    for a, b in product(Q.elements, repeat=2):
        if Q.leq(b, a):
            continue
        if not any(Q.leq(a, p) and not Q.leq(b, p) for p in ps):
            return a, b
    return None


def is_star_separating(Q: Quantale, P: Iterable[int]) -> bool:
    ps = _elems(P)
    return is_separating(Q, ps | star_set(Q, ps))


def cyclic_orbit(Q: Quantale, p: int) -> frozenset:
    """``{a -> p <- b : a, b in Q}``."""
    return frozenset(Q.sandwich(a, p, b) for a in Q.elements for b in Q.elements)


def is_cyclic_set(Q: Quantale, P: Iterable[int]) -> bool:
    ps = _elems(P)
    if not ps or Q.top in ps:
        return False
    target = ps | {Q.top}
    return all(cyclic_orbit(Q, p) == target for p in ps)


def residually_closed(Q: Quantale, P: Iterable[int]) -> bool:
    ps = _elems(P)
    rr, lr = Q.right_residuals, Q.left_residuals
    return all(rr[a][p] in ps and lr[p][a] in ps for a in Q.elements for p in ps)


def is_cyclic_set_lemma(Q: Quantale, P: Iterable[int]) -> bool:
    """Cyclicity via residual closure, a common meet, and recoverability."""
    ps = _elems(P)
    if not ps or Q.top in ps:
        return False
    if not residually_closed(Q, ps | {Q.top}):
        return False
    t = Q.lattice.meet_all(ps)
    if any(Q.sandwich(Q.top, p, Q.top) != t for p in ps):
        return False
    reachable = cyclic_orbit(Q, t)
    return ps <= reachable


def cyclic_set_from_prime(Q: Quantale, t: int) -> CyclicSet:
    """The cyclic set ``{a -> t <- b} - {top}`` of a proper two-sided prime."""
    if t not in sided_elements(Q).two_sided or not is_prime(Q, t):
        raise NotTwoSidedPrime(f"{t} is not a two-sided prime")
    if t == Q.top:
        raise TopPrimeRejected("top generates the empty set")
    elems = cyclic_orbit(Q, t) - {Q.top}
    P = CyclicSet.of(Q, elems)
    assert P.witness_prime == t, (t, P)
    return P


def prime_from_cyclic_set(Q: Quantale, P: Iterable[int]) -> int:
    """``top -> p <- top`` for any p in P (independent of the choice)."""
    p = min(_elems(P))
    return Q.sandwich(Q.top, p, Q.top)


def enumerate_cyclic_sets(Q: Quantale) -> list[CyclicSet]:
    """One cyclic set per proper two-sided prime, sorted."""
    return sorted(cyclic_set_from_prime(Q, t) for t in two_sided_primes(Q))


def enumerate_cyclic_sets_brute(Q: Quantale, override: bool = False) -> list[CyclicSet]:
    """Exhaustive subset search over ``Q - {top}``."""
    guard(Q.n, SUBSET_ORACLE_LIMIT, "enumerate_cyclic_sets_brute", override)
    cand = [x for x in Q.elements if x != Q.top]
    out = []
    for r in range(1, len(cand) + 1):
        for sub in combinations(cand, r):
            if is_cyclic_set(Q, sub):
                out.append(CyclicSet.of(Q, sub))
    return sorted(out)


def primes_closed_under_residuation_check(Q: Quantale) -> CheckResult:
    """Residuals of primes are primes or top."""
    primes = prime_set(Q).primes
    ok_set = primes | {Q.top}
    for p in sorted(primes):
        for a in Q.elements:
            for r in (Q.right_residuals[a][p], Q.left_residuals[p][a]):
                if r not in ok_set:
                    return CheckResult("primes_closed_under_residuation", False, (p, a, r))
    return CheckResult("primes_closed_under_residuation", True)


def congruence_from_cyclic_set(Q: Quantale, P) -> Congruence:
    """``a ~ b`` iff a and b lie below exactly the same members of P."""
    ps = sorted(_elems(P))
    if not is_cyclic_set(Q, ps):
        raise NotCyclic(f"{ps} is not cyclic")
    C = Congruence.from_labels([tuple(Q.leq(a, p) for p in ps) for a in Q.elements])
    if not is_congruence(Q, C):
        raise IncompatibleCongruence(f"partition {C} from {ps}")
    return C


def projection_adjoint(Q: Quantale, K: Quantale, proj) -> list[int]:
    """Right adjoint of ``proj: Q -> K``: ``t -> join{s : proj(s) <= t}``."""
    out = []
    for t in K.elements:
        out.append(Q.lattice.join_all(s for s in Q.elements if K.leq(proj[s], t)))
    return out


def pullback_cyclic_set(Q: Quantale, C: Congruence, R) -> CyclicSet:
    K, proj = quotient(Q, C)
    if not is_simple(K):
        raise QuotientNotSimple(str(C))
    rs = _elems(R)
    if not is_cyclic_set(K, rs):
        raise NotCyclic(f"{sorted(rs)} is not cyclic in the quotient")
    adj = projection_adjoint(Q, K, proj)
    P = CyclicSet.of(Q, (adj[r] for r in rs))
    assert is_cyclic_set(Q, P), (C, rs, P)
    return P


def union_of_cyclic_sets(Q: Quantale) -> frozenset:
    out: set = set()
    for P in enumerate_cyclic_sets(Q):
        out.update(P.elems)
    return frozenset(out)


def is_semisimple(Q: Quantale) -> bool:
    """The union of all cyclic sets separates elements."""
    return is_separating(Q, union_of_cyclic_sets(Q))


def is_semisimple_subdirect(Q: Quantale) -> bool:
    """Simple quotients jointly separate elements (needs congruence enumeration)."""
    return intersect_all(Q.n, simple_quotient_congruences(Q)).is_diagonal()


def is_star_semisimple(Q: Quantale) -> bool:
    """*-simple quotients jointly separate elements."""
    return intersect_all(Q.n, star_simple_quotient_congruences(Q)).is_diagonal()


def star_cyclic_check(Q: Quantale, P) -> bool:
    ps = _elems(P)
    return is_cyclic_set(Q, ps) and star_set(Q, ps) == ps


def hermitian_two_sided_primes(Q: Quantale) -> list[int]:
    s = Q.require_star()
    return [t for t in two_sided_primes(Q) if s[t] == t]


def has_separating_cyclic_set(Q: Quantale) -> bool:
    return any(is_separating(Q, P) for P in enumerate_cyclic_sets(Q))


def has_star_separating_cyclic_set(Q: Quantale) -> bool:
    Q.require_star()
    return any(is_star_separating(Q, P) for P in enumerate_cyclic_sets(Q))


# restrictions to a multiplicative subsemigroup S containing bottom

def validate_subsemigroup(Q: Quantale, S: Iterable[int]) -> frozenset:
    ss = frozenset(S)
    if Q.bottom not in ss:
        raise BottomNotInS(f"bottom {Q.bottom} missing from S")
    for a, b in product(ss, repeat=2):
        if Q.mult[a][b] not in ss:
            raise NotSubsemigroup(f"{a}*{b} = {Q.mult[a][b]} not in S")
    return ss


def is_S_separating(Q: Quantale, S: Iterable[int], P: Iterable[int]) -> bool:
    ss = validate_subsemigroup(Q, S)
    ps = _elems(P)
    return all(
        any(Q.leq(a, p) and not Q.leq(b, p) for p in ps)
        for a in ss for b in ss if not Q.leq(b, a)
    )


def is_residually_S_closed(Q: Quantale, S: Iterable[int], P: Iterable[int]) -> bool:
    ss = validate_subsemigroup(Q, S)
    ps = _elems(P)
    ok = ps | {Q.top}
    rr, lr = Q.right_residuals, Q.left_residuals
    return all(rr[a][p] in ok and lr[p][a] in ok for a in ss for p in ps)


def is_S_cyclic(Q: Quantale, S: Iterable[int], P: Iterable[int]) -> bool:
    ss = validate_subsemigroup(Q, S)
    ps = _elems(P)
    if not ps or Q.top in ps:
        return False
    target = ps | {Q.top}
    return all(
        {Q.sandwich(a, p, b) for a in ss for b in ss} == target for p in ps
    )
