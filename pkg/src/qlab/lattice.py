"""Finite sup-lattices given by a join table over elements ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from ._limits import guard
from .errors import ValidationError

Table = tuple[tuple[int, ...], ...]


def as_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True, eq=True)
class Lattice:
    """An immutable, validated finite lattice.

    The join table is the only stored structure; order and meet are derived
    from it.  Build instances with :func:`validate_lattice`.
    """

    join: Table
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.join)

    @property
    def elements(self) -> range:
        return range(len(self.join))

    def leq(self, a: int, b: int) -> bool:
        return self.join[a][b] == b

    @cached_property
    def meet_table(self) -> Table:
        n = self.n
        rows = []
        for a in range(n):
            row = []
            for b in range(n):
                m = self.bottom
                for x in range(n):
                    if self.join[x][a] == a and self.join[x][b] == b:
                        m = self.join[m][x]
                row.append(m)
            rows.append(tuple(row))
        return tuple(rows)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join_all(self, elems: Iterable[int]) -> int:
        # left fold from bottom; associativity makes the order irrelevant
        return reduce(lambda x, y: self.join[x][y], elems, self.bottom)

    def meet_all(self, elems: Iterable[int]) -> int:
        return reduce(lambda x, y: self.meet_table[x][y], elems, self.top)

    def down(self, a: int) -> list[int]:
        return [x for x in self.elements if self.join[x][a] == a]

    def up(self, a: int) -> list[int]:
        return [x for x in self.elements if self.join[a][x] == x]

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        """Non-bottom elements that are not the join of two strictly smaller ones."""
        out = []
        for j in self.elements:
            if j == self.bottom:
                continue
            below = [x for x in self.elements if x != j and self.join[x][j] == j]
            if self.join_all(below) != j:
                out.append(j)
        return tuple(out)

    def dual(self) -> "Lattice":
        """Order-reversed lattice on the same carrier."""
        return Lattice(self.meet_table, self.top, self.bottom)


def validate_lattice(join_table: Sequence[Sequence[int]]) -> Lattice:
    """Check the join-semilattice axioms and locate bottom and top.

    Raises :class:`ValidationError` naming the first failed law in the order
    NonCommutative, NonAssociative, NonIdempotent, NoBottom, NoTop.
    """
    t = as_table(join_table)
    n = len(t)
    if n < 1:
        raise ValidationError("Empty")
    for a, row in enumerate(t):
        if len(row) != n:
            raise ValidationError("NotSquare", (a,))
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise ValidationError("OutOfRange", (a, b))
    for a in range(n):
        for b in range(a + 1, n):
            if t[a][b] != t[b][a]:
                raise ValidationError("NonCommutative", (a, b))
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise ValidationError("NonAssociative", (a, b, c))
    for a in range(n):
        if t[a][a] != a:
            raise ValidationError("NonIdempotent", (a,))
    bottoms = [x for x in range(n) if all(t[x][y] == y for y in range(n))]
    if not bottoms:
        raise ValidationError("NoBottom")
    tops = [x for x in range(n) if all(t[x][y] == x for y in range(n))]
    if not tops:
        raise ValidationError("NoTop")
    return Lattice(t, bottoms[0], tops[0])


def lattice_from_join(elems: Sequence[Hashable], join: Callable) -> tuple[Lattice, dict]:
    """Index ``elems`` densely and validate the induced join table.

    Returns the lattice and the map element -> index.  ``join`` must be
    closed on ``elems``.
    """
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[join(x, y)] for y in elems] for x in elems]
    return validate_lattice(table), index


def lattice_from_leq(n: int, leq: Callable[[int, int], bool]) -> Lattice:
    """Build the join table of a finite lattice from its order relation."""
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            ubs = [x for x in range(n) if leq(a, x) and leq(b, x)]
            least = [u for u in ubs if all(leq(u, v) for v in ubs)]
            if len(least) != 1:
                raise ValidationError("NoLeastUpperBound", (a, b))
            row.append(least[0])
        rows.append(row)
    return validate_lattice(rows)


def make_chain(n: int) -> Lattice:
    """The chain 0 < 1 < ... < n-1."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    guard(n, 64, "make_chain")
    return validate_lattice([[max(a, b) for b in range(n)] for a in range(n)])


def make_diamond_m5() -> Lattice:
    """M5: bottom 0, pairwise incomparable atoms 1, 2, 3, top 4."""
    def j(a: int, b: int) -> int:
        if a == b or b == 0:
            return a
        if a == 0:
            return b
        return 4
    return validate_lattice([[j(a, b) for b in range(5)] for a in range(5)])


def make_powerset(k: int) -> Lattice:
    """Boolean lattice of subsets of a k-set; element i is the bitmask i."""
    if k < 0:
        raise ValueError("k must be non-negative")
    guard(k, 6, "make_powerset")
    n = 1 << k
    return validate_lattice([[a | b for b in range(n)] for a in range(n)])


def product_lattice(factors: Sequence[Lattice]) -> tuple[Lattice, list[tuple[int, ...]]]:
    """Componentwise product; returns the lattice and the tuple for each index."""
    tuples = list(product(*[f.elements for f in factors]))

    def j(x, y):
        return tuple(f.join[a][b] for f, a, b in zip(factors, x, y))

    lat, _ = lattice_from_join(tuples, j)
    return lat, tuples
