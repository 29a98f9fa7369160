"""Endomorphism quantales, products, canonical forms and small-order enumeration.

Composition convention for Q(S): ``mult[f][g] = f o g`` (apply g first), so
that Q(S) acts on S from the left by application and
``f(g(s)) == (f*g)(s)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Iterator, Optional, Sequence

from ._limits import guard
from .errors import BadParameters, SizeLimitExceeded, ValidationError
from .lattice import Lattice, Table, lattice_from_join, make_chain, make_powerset, validate_lattice
from .quantale import Quantale, locale, validate_quantale, zero_quantale


# -- stock fixtures --------------------------------------------------------

def c2() -> Quantale:
    """Two-element locale."""
    return locale(make_chain(2))


def z2() -> Quantale:
    """Two-element chain with every product bottom."""
    return zero_quantale(make_chain(2))


def c3() -> Quantale:
    """Three-element locale 0 < 1 < 2 (1 plays the middle element m)."""
    return locale(make_chain(3))


def swap_locale() -> Quantale:
    """The four-element Boolean locale with the coordinate-swap involution."""
    return locale(make_powerset(2), star=(0, 2, 1, 3))


def one_element() -> Quantale:
    return zero_quantale(make_chain(1))


# -- endomorphism quantales ------------------------------------------------

def sup_endomorphisms(S: Lattice) -> list[tuple[int, ...]]:
    """All join-preserving self-maps of S, sorted lexicographically.

    A map is fixed by its values on join-irreducibles; each candidate
    extension is then checked on every pair.
    """
    J = S.join_irreducibles
    below = {x: [k for k, j in enumerate(J) if S.leq(j, x)] for x in S.elements}
    out = []
    for vals in product(S.elements, repeat=len(J)):
        f = tuple(S.join_all(vals[k] for k in below[x]) for x in S.elements)
        if any(f[j] != vals[k] for k, j in enumerate(J)):
            continue
        if all(f[S.join[x][y]] == S.join[f[x]][f[y]] for x in S.elements for y in S.elements):
            out.append(f)
    return sorted(set(out))


@dataclass(frozen=True)
class EndoQuantale:
    base: Lattice
    maps: tuple[tuple[int, ...], ...]
    quantale: Quantale

    @cached_property
    def index(self) -> dict:
        return {f: i for i, f in enumerate(self.maps)}

    def apply(self, f: int, z: int) -> int:
        return self.maps[f][z]

    @property
    def identity(self) -> int:
        return self.index[tuple(self.base.elements)]


def endomorphism_quantale(S: Lattice, override: bool = False) -> EndoQuantale:
    guard(S.n, 6, "endomorphism_quantale", override)
    maps = sup_endomorphisms(S)
    lat, index = lattice_from_join(
        maps, lambda f, g: tuple(S.join[a][b] for a, b in zip(f, g))
    )
    mult = [[index[tuple(f[g[z]] for z in S.elements)] for g in maps] for f in maps]
    return EndoQuantale(S, tuple(maps), validate_quantale(lat, mult))


def rho_lambda_map(S: Lattice, x: int, y: int) -> tuple[int, ...]:
    """z -> top if z not<= y; x if bottom != z <= y; bottom if z == bottom."""
    if x == S.top or y == S.bottom:
        raise BadParameters("need x != top and y != bottom")

    def f(z: int) -> int:
        if z == S.bottom:
            return S.bottom
        return x if S.leq(z, y) else S.top

    return tuple(f(z) for z in S.elements)


def rho_lambda_element(E: EndoQuantale, x: int, y: int) -> int:
    f = rho_lambda_map(E.base, x, y)
    if f not in E.index:  # pragma: no cover - would mean the map is not join-preserving
        raise ValidationError("NotJoinPreserving", (x, y))
    return E.index[f]


def rho_lambda_family(E: EndoQuantale) -> frozenset:
    S = E.base
    return frozenset(
        rho_lambda_element(E, x, y)
        for x in S.elements if x != S.top
        for y in S.elements if y != S.bottom
    )


# -- products ----------------------------------------------------------------

def product_quantale(
    Qs: Sequence[Quantale], limit: int = 64
) -> tuple[Quantale, list[tuple[int, ...]]]:
    """Componentwise product; returns it with the projection maps.

    The involution is componentwise when every factor has one.
    """
    total = 1
    for Q in Qs:
        total *= Q.n
    if total > limit:
        raise SizeLimitExceeded(f"product has {total} elements (limit {limit})")
    tuples = list(product(*[Q.elements for Q in Qs]))
    lat, index = lattice_from_join(
        tuples, lambda x, y: tuple(Q.join[a][b] for Q, a, b in zip(Qs, x, y))
    )
    mult = [
        [index[tuple(Q.mult[a][b] for Q, a, b in zip(Qs, x, y))] for y in tuples]
        for x in tuples
    ]
    star = None
    if Qs and all(Q.star is not None for Q in Qs):
        star = [index[tuple(Q.star[a] for Q, a in zip(Qs, x))] for x in tuples]
    P = validate_quantale(lat, mult, star)
    projections = [tuple(x[i] for x in tuples) for i in range(len(Qs))]
    return P, projections


# -- canonical forms -------------------------------------------------------

def _relabel(table: Table, perm: Sequence[int], inv: Sequence[int]) -> Table:
    n = len(perm)
    return tuple(tuple(perm[table[inv[i]][inv[k]]] for k in range(n)) for i in range(n))


def _bounded_perms(n: int, bottom: int, top: int) -> Iterator[tuple[int, ...]]:
    """Permutations old->new sending bottom to 0 and top to n-1."""
    if n == 1:
        yield (0,)
        return
    middle = [x for x in range(n) if x not in (bottom, top)]
    for targets in permutations(range(1, n - 1)):
        perm = [0] * n
        perm[bottom], perm[top] = 0, n - 1
        for x, t in zip(middle, targets):
            perm[x] = t
        yield tuple(perm)


def _flat(*tables) -> tuple:
    out: list = []
    for t in tables:
        if t is None:
            out.append(-1)
        elif t and isinstance(t[0], tuple):
            for row in t:
                out.extend(row)
        else:
            out.extend(t)
    return tuple(out)


def relabel_quantale(Q: Quantale, perm: Sequence[int]) -> Quantale:
    n = Q.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    join = _relabel(Q.join, perm, inv)
    mult = _relabel(Q.mult, perm, inv)
    star = None if Q.star is None else tuple(perm[Q.star[inv[i]]] for i in range(n))
    return Quantale(Lattice(join, perm[Q.bottom], perm[Q.top]), mult, star)


def canonical_form(Q: Quantale) -> Quantale:
    """Lexicographically least relabelling of (join, mult, star).

    Only relabellings with bottom -> 0 and top -> n-1 are tried, which loses
    nothing since isomorphisms preserve bottom and top.
    """
    best = None
    best_key = None
    for perm in _bounded_perms(Q.n, Q.bottom, Q.top):
        R = relabel_quantale(Q, perm)
        key = _flat(R.join, R.mult, R.star)
        if best_key is None or key < best_key:
            best, best_key = R, key
    return best


def canonical_key(Q: Quantale) -> tuple:
    C = canonical_form(Q)
    return _flat(C.join, C.mult, C.star)


def canonical_lattice(L: Lattice) -> Lattice:
    best = None
    for perm in _bounded_perms(L.n, L.bottom, L.top):
        inv = [0] * L.n
        for old, new in enumerate(perm):
            inv[new] = old
        t = _relabel(L.join, perm, inv)
        if best is None or t < best:
            best = t
    return Lattice(best, 0, L.n - 1)


def are_isomorphic(Q1: Quantale, Q2: Quantale) -> bool:
    return Q1.n == Q2.n and canonical_key(Q1) == canonical_key(Q2)


# -- lattice enumeration ---------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_lattices(n: int) -> tuple[Lattice, ...]:
    """All lattices of order n up to isomorphism, bottom 0 and top n-1.

    Brute force over the join values of the middle elements.
    """
    if n < 1:
        return ()
    guard(n, 7, "enumerate_lattices")
    if n == 1:
        return (validate_lattice([[0]]),)
    top = n - 1
    middle = range(1, top)
    cells = [(a, b) for a in middle for b in middle if a < b]
    found = {}
    for vals in product(range(1, n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for x in range(n):
            t[0][x] = t[x][0] = x
            t[top][x] = t[x][top] = top
            t[x][x] = x
        for (a, b), v in zip(cells, vals):
            t[a][b] = t[b][a] = v
        try:
            L = validate_lattice(t)
        except ValidationError:
            continue
        C = canonical_lattice(L)
        found.setdefault(C.join, C)
    return tuple(found[k] for k in sorted(found))


def enumerate_lattices_unpruned(n: int) -> list[Lattice]:
    """Oracle: every commutative idempotent table, no fixed positions."""
    if n > 4:
        raise SizeLimitExceeded("unpruned lattice search is limited to n <= 4")
    cells = [(a, b) for a in range(n) for b in range(n) if a < b]
    found = {}
    for vals in product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for x in range(n):
            t[x][x] = x
        for (a, b), v in zip(cells, vals):
            t[a][b] = t[b][a] = v
        try:
            L = validate_lattice(t)
        except ValidationError:
            continue
        C = canonical_lattice(L)
        found.setdefault(C.join, C)
    return [found[k] for k in sorted(found)]


def lattice_involutions(L: Lattice) -> list[tuple[int, ...]]:
    """Lattice automorphisms of period at most two (candidate involutions)."""
    out = []
    for perm in _bounded_perms(L.n, L.bottom, L.top):
        if any(perm[perm[x]] != x for x in L.elements):
            continue
        if all(perm[L.join[a][b]] == L.join[perm[a]][perm[b]] for a in L.elements for b in L.elements):
            out.append(perm)
    return out


# -- multiplication search -------------------------------------------------

class _MultSearch:
    """Depth-first search for quantale multiplications on a fixed lattice.

    Products of join-irreducibles are the free choices; every other product
    is their join.  Cells are filled along a linear extension so monotonicity
    gives each cell a lower bound, and distributivity, associativity and the
    optional star law are checked as soon as their cells are known.
    """

    def __init__(self, L: Lattice, star: Optional[Sequence[int]] = None):
        self.L = L
        self.star = None if star is None else tuple(star)
        n = L.n
        height = {x: len(L.down(x)) for x in L.elements}
        J = sorted(L.join_irreducibles, key=lambda x: (height[x], x))
        self.cells = [(j, k) for j in J for k in J]
        cell_idx = {c: i for i, c in enumerate(self.cells)}
        self.preds = [
            [cell_idx[(j2, k2)] for (j2, k2) in self.cells
             if (j2, k2) != (j, k) and L.leq(j2, j) and L.leq(k2, k)]
            for (j, k) in self.cells
        ]
        nonzero = [x for x in L.elements if x != L.bottom]
        self.nonzero = nonzero
        # each product a*b becomes known once the last cell below it is set
        self.deps = {}
        self.fires: list[list[tuple[int, int]]] = [[] for _ in self.cells]
        for a in nonzero:
            for b in nonzero:
                d = [cell_idx[(j, k)] for (j, k) in self.cells if L.leq(j, a) and L.leq(k, b)]
                self.deps[(a, b)] = d
                self.fires[max(d)].append((a, b))
        self.n = n

    def _check(self, m: list[list[int]], known: list[list[bool]]) -> bool:
        L = self.L
        j = L.join
        nz = self.nonzero
        for a in nz:
            ra, ka = m[a], known[a]
            for b in nz:
                if not ka[b]:
                    continue
                ab = ra[b]
                for c in nz:
                    if ka[c]:
                        bc = j[b][c]
                        if ka[bc] and ra[bc] != j[ab][ra[c]]:
                            return False
                        if known[b][a] and known[c][a] and known[bc][a]:
                            if m[bc][a] != j[m[b][a]][m[c][a]]:
                                return False
                    if known[b][c]:
                        bc = m[b][c]
                        if known[ab][c] and ka[bc] and m[ab][c] != ra[bc]:
                            return False
        s = self.star
        if s is not None:
            for a in nz:
                for b in nz:
                    if known[a][b] and known[s[b]][s[a]] and s[m[a][b]] != m[s[b]][s[a]]:
                        return False
        return True

    def search(self, rng: Optional[random.Random] = None, budget: Optional[int] = None):
        L = self.L
        n = self.n
        bot = L.bottom
        m = [[bot] * n for _ in range(n)]
        known = [[x == bot or y == bot for y in range(n)] for x in range(n)]
        f = [bot] * len(self.cells)
        steps = [0]
        cells = self.cells

        def rec(i: int):
            if budget is not None:
                steps[0] += 1
                if steps[0] > budget:
                    raise _Budget
            if i == len(cells):
                yield tuple(tuple(r) for r in m)
                return
            lb = L.join_all(f[p] for p in self.preds[i])
            dom = [v for v in L.elements if L.leq(lb, v)]
            if rng is not None:
                rng.shuffle(dom)
            for v in dom:
                f[i] = v
                for (a, b) in self.fires[i]:
                    m[a][b] = L.join_all(f[d] for d in self.deps[(a, b)])
                    known[a][b] = True
                if self._check(m, known):
                    yield from rec(i + 1)
                for (a, b) in self.fires[i]:
                    known[a][b] = False
            f[i] = bot

        if not cells:
            yield tuple(tuple(r) for r in m)
            return
        yield from rec(0)


class _Budget(Exception):
    pass


def multiplications(L: Lattice, star: Optional[Sequence[int]] = None) -> list[Table]:
    """Every quantale multiplication on L (compatible with ``star`` if given)."""
    out = []
    for mult in _MultSearch(L, star).search():
        try:
            validate_quantale(L, mult, star)
        except ValidationError:  # pragma: no cover - the search checks these laws
            continue
        out.append(mult)
    return out


def multiplications_brute(L: Lattice) -> list[Table]:
    """Oracle: filter every bottom-absorbing table through full validation."""
    n = L.n
    guard(n, 4, "multiplications_brute")
    bot = L.bottom
    free = [(a, b) for a in L.elements for b in L.elements if a != bot and b != bot]
    out = []
    for vals in product(range(n), repeat=len(free)):
        m = [[bot] * n for _ in range(n)]
        for (a, b), v in zip(free, vals):
            m[a][b] = v
        try:
            validate_quantale(L, m)
        except ValidationError:
            continue
        out.append(tuple(tuple(r) for r in m))
    return out


def enumerate_quantales(
    n: int, with_star: bool = False, up_to_iso: bool = True, allow_order5: bool = False
) -> list[Quantale]:
    """All quantales (or *-quantales) of order n, in deterministic order.

    With ``up_to_iso`` one representative per isomorphism class is kept, in
    canonical form.  Orders above 4 need ``allow_order5``.
    """
    limit = 5 if allow_order5 else 4
    guard(n, limit, "enumerate_quantales")
    found: dict = {}
    for L in enumerate_lattices(n):
        stars = lattice_involutions(L) if with_star else [None]
        for mult in multiplications(L):
            for s in stars:
                try:
                    Q = validate_quantale(L, mult, s)
                except ValidationError:
                    continue
                if up_to_iso:
                    Q = canonical_form(Q)
                key = _flat(Q.join, Q.mult, Q.star)
                found.setdefault(key, Q)
    return [found[k] for k in sorted(found)]


@lru_cache(maxsize=None)
def corpus(max_order: int = 4, with_star: bool = False) -> tuple[Quantale, ...]:
    """Every quantale (or *-quantale) of order 1..max_order up to isomorphism."""
    out: list[Quantale] = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_quantales(n, with_star=with_star, allow_order5=max_order >= 5))
    return tuple(out)


def random_quantale(
    n: int, rng: random.Random, with_star: bool = False, budget: int = 20000
) -> Quantale:
    """A random quantale of order n: random lattice, random DFS for mult.

    The zero multiplication always exists, so restarts terminate.
    """
    lattices = enumerate_lattices(n)
    while True:
        L = rng.choice(lattices)
        star = rng.choice(lattice_involutions(L)) if with_star else None
        try:
            for mult in _MultSearch(L, star).search(rng=rng, budget=budget):
                return validate_quantale(L, mult, star)
        except _Budget:
            continue
