"""Quantale congruences: closure, enumeration, quotients, simplicity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from ._limits import guard
from .errors import IncompatibleCongruence, SizeLimitExceeded, StarMissing
from .lattice import validate_lattice
from .quantale import Quantale, validate_quantale

ENUM_LIMIT = 12
BRUTE_LIMIT = 6


def canonical_labels(labels: Sequence) -> tuple[int, ...]:
    """Relabel classes by first occurrence scanning 0..n-1."""
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


@dataclass(frozen=True, order=True)
class Congruence:
    """A partition of ``0..n-1`` stored as canonical class ids."""

    class_of: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Congruence":
        return cls(canonical_labels(labels))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Congruence":
        labels = list(range(n))
        for k, block in enumerate(classes):
            for x in block:
                labels[x] = n + k
        return cls.from_labels(labels)

    @classmethod
    def diagonal(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def n_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return tuple(tuple(b) for b in out)

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def is_diagonal(self) -> bool:
        return self.n_classes == self.n

    def is_full(self) -> bool:
        return self.n_classes <= 1

    def refines(self, other: "Congruence") -> bool:
        """True iff self is contained in other as a relation."""
        return all(
            other.class_of[x] == other.class_of[block[0]]
            for block in self.classes
            for x in block
        )

    def intersect(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels(list(zip(self.class_of, other.class_of)))

    def pairs(self) -> list[tuple[int, int]]:
        """Generating pairs: each element with the first member of its class."""
        return [(block[0], x) for block in self.classes for x in block[1:]]

    def __str__(self) -> str:
        return " | ".join(",".join(map(str, b)) for b in self.classes)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def _check_star_flag(Q: Quantale, star: bool) -> None:
    if star and Q.star is None:
        raise StarMissing("star_flag requires a *-quantale")


def generated_congruence(
    Q: Quantale, pairs: Iterable[tuple[int, int]], star: bool = False
) -> Congruence:
    """Least congruence (or *-congruence) relating every given pair.

    Each merged pair is pushed through the unary translations
    ``x -> c*x``, ``x -> x*c``, ``x -> x v c`` (and ``x -> x*`` when
    ``star``); translation closure plus transitivity gives compatibility
    with binary joins and products.
    """
    _check_star_flag(Q, star)
    n = Q.n
    m, j = Q.mult, Q.join
    s = Q.star
    uf = _UnionFind(n)
    work = list(pairs)
    while work:
        a, b = work.pop()
        if not uf.union(a, b):
            continue
        for c in range(n):
            work.append((m[c][a], m[c][b]))
            work.append((m[a][c], m[b][c]))
            work.append((j[a][c], j[b][c]))
        if star:
            work.append((s[a], s[b]))
    return Congruence.from_labels([uf.find(x) for x in range(n)])


def is_congruence(Q: Quantale, C: Congruence, star: bool = False) -> bool:
    """Direct check of the compatibility laws on a partition."""
    _check_star_flag(Q, star)
    k = C.class_of
    m, j = Q.mult, Q.join
    for block in C.classes:
        for a, b in combinations(block, 2):
            for c in Q.elements:
                if k[m[c][a]] != k[m[c][b]] or k[m[a][c]] != k[m[b][c]]:
                    return False
                if k[j[a][c]] != k[j[b][c]]:
                    return False
            if star and k[Q.star[a]] != k[Q.star[b]]:
                return False
    return True


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``0..n-1`` as restricted growth strings."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield tuple(labels)
            return
        for v in range(used + 1):
            labels[i] = v
            yield from rec(i + 1, max(used, v + 1))

    yield from rec(1, 1)


def enumerate_congruences_brute(Q: Quantale, star: bool = False) -> list[Congruence]:
    """Filter every set partition by the compatibility laws (small n only)."""
    _check_star_flag(Q, star)
    if Q.n > BRUTE_LIMIT:
        raise SizeLimitExceeded(f"brute-force partition filter limited to n <= {BRUTE_LIMIT}")
    found = [Congruence(p) for p in set_partitions(Q.n)]
    return sorted(C for C in found if is_congruence(Q, C, star))


def congruence_join(Q: Quantale, A: Congruence, B: Congruence, star: bool = False) -> Congruence:
    return generated_congruence(Q, A.pairs() + B.pairs(), star)


def enumerate_congruences(
    Q: Quantale, star: bool = False, override: bool = False
) -> list[Congruence]:
    """All congruences (or *-congruences), sorted by canonical vector.

    Every congruence is a join of principal ones, so closing the principal
    congruences under pairwise join yields the whole lattice.
    """
    _check_star_flag(Q, star)
    guard(Q.n, ENUM_LIMIT, "enumerate_congruences", override)
    principal = {
        generated_congruence(Q, [(a, b)], star) for a, b in combinations(Q.elements, 2)
    }
    found = {Congruence.diagonal(Q.n)} | principal
    frontier = list(found)
    while frontier:
        new = []
        for A in frontier:
            for P in principal:
                J = congruence_join(Q, A, P, star)
                if J not in found:
                    found.add(J)
                    new.append(J)
        frontier = new
    return sorted(found)


def is_simple(Q: Quantale) -> bool:
    """``top*top != bottom`` and exactly two congruences."""
    if Q.mult[Q.top][Q.top] == Q.bottom:
        return False
    return len(enumerate_congruences(Q)) == 2


def is_star_simple(Q: Quantale) -> bool:
    Q.require_star()
    if Q.mult[Q.top][Q.top] == Q.bottom:
        return False
    return len(enumerate_congruences(Q, star=True)) == 2


def is_simple_by_principals(Q: Quantale, star: bool = False) -> bool:
    """Simplicity via principal congruences only; no enumeration."""
    if Q.n < 2 or Q.mult[Q.top][Q.top] == Q.bottom:
        return False
    return all(
        generated_congruence(Q, [(a, b)], star).is_full()
        for a, b in combinations(Q.elements, 2)
    )


def quotient(Q: Quantale, C: Congruence) -> tuple[Quantale, tuple[int, ...]]:
    """Quotient quantale on the classes of ``C`` plus the projection map.

    The involution descends whenever ``C`` is a *-congruence.
    """
    k = C.class_of
    reps = [block[0] for block in C.classes]
    qn = len(reps)
    m, j = Q.mult, Q.join
    qjoin = [[k[j[x][y]] for y in reps] for x in reps]
    qmult = [[k[m[x][y]] for y in reps] for x in reps]
    for x, y in product(Q.elements, repeat=2):
        if k[j[x][y]] != qjoin[k[x]][k[y]] or k[m[x][y]] != qmult[k[x]][k[y]]:
            raise IncompatibleCongruence(f"partition {C} is not a congruence at ({x}, {y})")
    qstar = None
    if Q.star is not None and is_congruence(Q, C, star=True):
        qstar = [k[Q.star[x]] for x in reps]
    try:
        lat = validate_lattice(qjoin)
        Qc = validate_quantale(lat, qmult, qstar)
    except Exception as exc:  # pragma: no cover - indicates an internal bug
        raise IncompatibleCongruence(str(exc)) from exc
    assert qn == Qc.n
    return Qc, k


def maximal_congruences(
    Q: Quantale, star: bool = False, congruences: Optional[list[Congruence]] = None
) -> list[Congruence]:
    """Congruences covered only by the full relation (the full one excluded)."""
    cs = congruences if congruences is not None else enumerate_congruences(Q, star)
    proper = [C for C in cs if not C.is_full()]
    return [
        C for C in proper
        if not any(D != C and C.refines(D) for D in proper)
    ]


def simple_quotient_congruences(Q: Quantale) -> list[Congruence]:
    """Maximal congruences whose quotient is a simple quantale."""
    return [C for C in maximal_congruences(Q) if is_simple(quotient(Q, C)[0])]


def star_simple_quotient_congruences(Q: Quantale) -> list[Congruence]:
    """Maximal *-congruences whose quotient is *-simple."""
    Q.require_star()
    return [
        C for C in maximal_congruences(Q, star=True)
        if is_star_simple(quotient(Q, C)[0])
    ]


def intersect_all(n: int, congruences: Iterable[Congruence]) -> Congruence:
    out = Congruence.full(n)
    for C in congruences:
        out = out.intersect(C)
    return out
