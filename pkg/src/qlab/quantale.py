"""Finite quantales and *-quantales as explicit tables.

Residuation convention used throughout::

    a -> c = join{b : b*a <= c}        (residuate_right)
    c <- a = join{b : a*b <= c}        (residuate_left)

i.e. ``b <= a -> c`` iff ``b*a <= c`` iff ``a <= c <- b``.  With this
choice ``a -> (b -> c) == (a*b) -> c`` and ``(b -> c) <- a == b -> (c <- a)``,
so ``a -> p <- b`` needs no brackets and equals ``join{y : b*y*a <= p}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import StarMissing, ValidationError
from .lattice import Lattice, Table, as_table


@dataclass(frozen=True)
class SidedSets:
    right: frozenset
    left: frozenset
    two_sided: frozenset
    hermitian: frozenset = frozenset()
    hermitian_two_sided: frozenset = frozenset()


@dataclass(frozen=True, eq=True)
class Quantale:
    """A validated finite quantale; build with :func:`validate_quantale`."""

    lattice: Lattice
    mult: Table
    star: Optional[tuple[int, ...]] = None

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def elements(self) -> range:
        return self.lattice.elements

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def join(self) -> Table:
        return self.lattice.join

    def leq(self, a: int, b: int) -> bool:
        return self.lattice.join[a][b] == b

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet_table[a][b]

    def require_star(self) -> tuple[int, ...]:
        if self.star is None:
            raise StarMissing("operation needs a *-quantale")
        return self.star

    def with_star(self, star: Optional[Sequence[int]]) -> "Quantale":
        return validate_quantale(self.lattice, self.mult, star)

    # residuation caches, built once on first use

    @cached_property
    def right_residuals(self) -> Table:
        """``right_residuals[a][c] == a -> c``."""
        return tuple(
            tuple(residuate_right_direct(self, a, c) for c in self.elements)
            for a in self.elements
        )

    @cached_property
    def left_residuals(self) -> Table:
        """``left_residuals[c][a] == c <- a``."""
        return tuple(
            tuple(residuate_left_direct(self, c, a) for a in self.elements)
            for c in self.elements
        )

    def sandwich(self, a: int, p: int, b: int) -> int:
        """``a -> p <- b``; well defined since (a->p)<-b == a->(p<-b)."""
        return self.left_residuals[self.right_residuals[a][p]][b]


def validate_quantale(
    lattice: Lattice,
    mult: Sequence[Sequence[int]],
    star: Optional[Sequence[int]] = None,
) -> Quantale:
    """Check the quantale (and *-quantale) laws on explicit tables.

    Distributivity is checked on binary joins plus the bottom case, which
    generates all finite joins.
    """
    n = lattice.n
    m = as_table(mult)
    if len(m) != n or any(len(r) != n for r in m):
        raise ValidationError("BadShape", (), f"mult must be {n}x{n}")
    for a, b in product(range(n), repeat=2):
        if not 0 <= m[a][b] < n:
            raise ValidationError("OutOfRange", (a, b))
    j = lattice.join
    for a, b, c in product(range(n), repeat=3):
        if m[m[a][b]][c] != m[a][m[b][c]]:
            raise ValidationError("NonAssociative", (a, b, c))
    for a, b, c in product(range(n), repeat=3):
        if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
            raise ValidationError("NotLeftDistributive", (a, b, c))
    for a, b, c in product(range(n), repeat=3):
        if m[j[b][c]][a] != j[m[b][a]][m[c][a]]:
            raise ValidationError("NotRightDistributive", (a, b, c))
    bot = lattice.bottom
    for a in range(n):
        if m[a][bot] != bot or m[bot][a] != bot:
            raise ValidationError("BottomNotAbsorbed", (a,))
    s = None
    if star is not None:
        s = tuple(int(x) for x in star)
        if len(s) != n or any(not 0 <= x < n for x in s):
            raise ValidationError("BadShape", (), "star must be a permutation of 0..n-1")
        for a in range(n):
            if s[s[a]] != a:
                raise ValidationError("StarNotInvolutive", (a,))
        for a, b in product(range(n), repeat=2):
            if s[j[a][b]] != j[s[a]][s[b]]:
                raise ValidationError("StarNotJoinPreserving", (a, b))
        for a, b in product(range(n), repeat=2):
            if s[m[a][b]] != m[s[b]][s[a]]:
                raise ValidationError("StarNotAntihomomorphic", (a, b))
    return Quantale(lattice, m, s)


def residuate_right_direct(Q: Quantale, a: int, c: int) -> int:
    m, j = Q.mult, Q.join
    out = Q.bottom
    for b in Q.elements:
        if j[m[b][a]][c] == c:
            out = j[out][b]
    return out


def residuate_left_direct(Q: Quantale, c: int, a: int) -> int:
    m, j = Q.mult, Q.join
    out = Q.bottom
    for b in Q.elements:
        if j[m[a][b]][c] == c:
            out = j[out][b]
    return out


def residuate_right(Q: Quantale, a: int, c: int) -> int:
    """``a -> c``, the largest b with ``b*a <= c``."""
    return Q.right_residuals[a][c]


def residuate_left(Q: Quantale, c: int, a: int) -> int:
    """``c <- a``, the largest b with ``a*b <= c``."""
    return Q.left_residuals[c][a]


def sided_elements(Q: Quantale) -> SidedSets:
    m, top = Q.mult, Q.top
    right = frozenset(a for a in Q.elements if Q.leq(m[a][top], a))
    left = frozenset(a for a in Q.elements if Q.leq(m[top][a], a))
    two = right & left
    if Q.star is None:
        return SidedSets(right, left, two)
    herm = frozenset(a for a in Q.elements if Q.star[a] == a)
    return SidedSets(right, left, two, herm, herm & two)


def is_factor(Q: Quantale) -> bool:
    return Q.bottom != Q.top and sided_elements(Q).two_sided == {Q.bottom, Q.top}


def is_star_factor(Q: Quantale) -> bool:
    Q.require_star()
    return Q.bottom != Q.top and sided_elements(Q).hermitian_two_sided == {Q.bottom, Q.top}


def faithfulness_signature(Q: Quantale, a: int) -> tuple[int, ...]:
    """The values ``l*a*r`` over left-sided l and right-sided r."""
    sided = sided_elements(Q)
    m = Q.mult
    return tuple(m[m[l][a]][r] for l in sorted(sided.left) for r in sorted(sided.right))


def is_strictly_faithful(Q: Quantale) -> bool:
    sigs = [faithfulness_signature(Q, a) for a in Q.elements]
    return len(set(sigs)) == Q.n


def strict_faithfulness_witness(Q: Quantale) -> Optional[tuple[int, int]]:
    """A pair a != b that no sandwich l*_*r tells apart, or None."""
    seen: dict = {}
    for a in Q.elements:
        sig = faithfulness_signature(Q, a)
        if sig in seen:
            return seen[sig], a
        seen[sig] = a
    return None


def is_commutative(Q: Quantale) -> bool:
    return all(Q.mult[a][b] == Q.mult[b][a] for a, b in product(Q.elements, repeat=2))


def star_set(Q: Quantale, elems: Iterable[int]) -> frozenset:
    s = Q.require_star()
    return frozenset(s[x] for x in elems)


def locale(L: Lattice, star: Optional[Sequence[int]] = None) -> Quantale:
    """The quantale with multiplication = meet (valid iff L is distributive)."""
    return validate_quantale(L, L.meet_table, star)


def zero_quantale(L: Lattice, star: Optional[Sequence[int]] = None) -> Quantale:
    """Every product is bottom."""
    return validate_quantale(L, [[L.bottom] * L.n for _ in L.elements], star)
