"""Quantale modules: validation, duals, simplicity, and cyclic-set modules.

Module carriers taken from subsets of the quantale keep an ``embedding``
tuple mapping each module index back to the quantale element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

from ._limits import guard
from .errors import ElementNotInSet, NotCyclic, NotSimpleModule, ValidationError
from .lattice import Lattice, Table, as_table, lattice_from_join
from .quantale import Quantale, sided_elements
from .spectra import CyclicSet, enumerate_cyclic_sets, is_cyclic_set

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class QModule:
    """``act[a][x]`` is ``a.x`` for a left module and ``x.a`` for a right one."""

    lattice: Lattice
    side: str
    act: Table
    embedding: Optional[tuple[int, ...]] = None

    @property
    def m(self) -> int:
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

    def leq(self, x: int, y: int) -> bool:
        return self.lattice.join[x][y] == y


def validate_module(Q: Quantale, M: Lattice, side: str, act: Sequence[Sequence[int]],
                    embedding: Optional[Sequence[int]] = None) -> QModule:
    if side not in (LEFT, RIGHT):
        raise ValidationError("BadSide", (), side)
    t = as_table(act)
    if len(t) != Q.n or any(len(r) != M.n for r in t):
        raise ValidationError("BadShape", (), f"action must be {Q.n}x{M.n}")
    for a, x in product(Q.elements, M.elements):
        if not 0 <= t[a][x] < M.n:
            raise ValidationError("OutOfRange", (a, x))
    mj, qj = M.join, Q.join
    for a, x, y in product(Q.elements, M.elements, M.elements):
        if t[a][mj[x][y]] != mj[t[a][x]][t[a][y]]:
            raise ValidationError("NotJoinDistributiveModuleArg", (a, x, y))
    for a, b, x in product(Q.elements, Q.elements, M.elements):
        if t[qj[a][b]][x] != mj[t[a][x]][t[b][x]]:
            raise ValidationError("NotJoinDistributiveQuantaleArg", (a, b, x))
    for x in M.elements:
        if t[Q.bottom][x] != M.bottom:
            raise ValidationError("NotJoinDistributiveQuantaleArg", (Q.bottom, Q.bottom, x),
                                  "bottom of Q must act as bottom")
    for a in Q.elements:
        if t[a][M.bottom] != M.bottom:
            raise ValidationError("BottomNotAbsorbed", (a,))
    for a, b, x in product(Q.elements, Q.elements, M.elements):
        ab = Q.mult[a][b] if side == LEFT else Q.mult[b][a]
        if t[a][t[b][x]] != t[ab][x]:
            raise ValidationError("NotActionAssociative", (a, b, x))
    emb = None if embedding is None else tuple(embedding)
    return QModule(M, side, t, emb)


def self_module(Q: Quantale) -> QModule:
    """Q acting on itself by left multiplication."""
    return validate_module(Q, Q.lattice, LEFT, Q.mult, tuple(Q.elements))


def module_residuate(Q: Quantale, Mod: QModule, a: int, y: int) -> int:
    """Largest x with ``act(a, x) <= y``."""
    j = Mod.lattice.join
    out = Mod.bottom
    row = Mod.act[a]
    for x in Mod.elements:
        if j[row[x]][y] == y:
            out = j[out][x]
    return out


def is_faithful(Q: Quantale, Mod: QModule) -> bool:
    return len(set(Mod.act)) == Q.n


def dual_module(Q: Quantale, Mod: QModule) -> QModule:
    """Order-reversed carrier, opposite side, residuals as the action."""
    act = [[module_residuate(Q, Mod, a, x) for x in Mod.elements] for a in Q.elements]
    side = RIGHT if Mod.side == LEFT else LEFT
    return validate_module(Q, Mod.lattice.dual(), side, act, Mod.embedding)


def is_simple_module(Q: Quantale, Mod: QModule) -> bool:
    """Nontrivial action, every nonzero orbit and every non-top residual orbit is M."""
    if Mod.act[Q.top][Mod.top] == Mod.bottom:
        return False
    full = set(Mod.elements)
    for x in Mod.elements:
        if x != Mod.bottom and {Mod.act[a][x] for a in Q.elements} != full:
            return False
        if x != Mod.top and {module_residuate(Q, Mod, a, x) for a in Q.elements} != full:
            return False
    return True


def submodules(Q: Quantale, Mod: QModule) -> Iterator[frozenset]:
    """Every subset containing bottom closed under joins and the action."""
    guard(Mod.m, 12, "submodules")
    rest = [x for x in Mod.elements if x != Mod.bottom]
    j = Mod.lattice.join
    for r in range(len(rest) + 1):
        for sub in combinations(rest, r):
            s = frozenset(sub) | {Mod.bottom}
            if all(j[x][y] in s for x in s for y in s) and all(
                Mod.act[a][x] in s for a in Q.elements for x in s
            ):
                yield s


def is_simple_module_by_definition(Q: Quantale, Mod: QModule) -> bool:
    """Only trivial submodules, only trivial quotients (submodules of the dual), nontrivial action."""
    if Mod.act[Q.top][Mod.top] == Mod.bottom:
        return False
    if len(list(submodules(Q, Mod))) != 2:
        return False
    return len(list(submodules(Q, dual_module(Q, Mod)))) == 2


def _sub_module(Q: Quantale, carrier: Sequence[int], join, act) -> QModule:
    lat, index = lattice_from_join(list(carrier), join)
    table = [[index[act(a, c)] for c in carrier] for a in Q.elements]
    return validate_module(Q, lat, LEFT, table, tuple(carrier))


def rightside_module(Q: Quantale) -> QModule:
    """Right-sided elements as a left module under multiplication."""
    R = sorted(sided_elements(Q).right)
    return _sub_module(Q, R, lambda x, y: Q.join[x][y], lambda a, r: Q.mult[a][r])


def module_from_cyclic_set(Q: Quantale, P, p: int) -> QModule:
    """``{a -> p : a in Q}`` ordered by reverse inclusion, action ``a.x = a -> x``."""
    elems = P.elems if isinstance(P, CyclicSet) else tuple(sorted(P))
    if not is_cyclic_set(Q, elems):
        raise NotCyclic(f"{elems} is not cyclic")
    if p not in elems:
        raise ElementNotInSet(f"{p} not in {elems}")
    rr = Q.right_residuals
    carrier = sorted({rr[a][p] for a in Q.elements})
    return _sub_module(Q, carrier, Q.meet, lambda a, x: rr[a][x])


def pmn(Q: Quantale, Mod: QModule, m: int, n: int) -> int:
    """``join{a : act(a, n) <= m}``."""
    return Q.lattice.join_all(a for a in Q.elements if Mod.leq(Mod.act[a][n], m))


def pmn_decomposition_holds(Q: Quantale, Mod: QModule) -> bool:
    """``p(m, n) == r_m v l_n`` for m != top, n != bottom."""
    top_m, bot_m = Mod.top, Mod.bottom
    for m in Mod.elements:
        if m == top_m:
            continue
        r_m = pmn(Q, Mod, m, top_m)
        for n in Mod.elements:
            if n == bot_m:
                continue
            l_n = pmn(Q, Mod, bot_m, n)
            if pmn(Q, Mod, m, n) != Q.join[r_m][l_n]:
                return False
    return True


def cyclic_set_from_simple_module(Q: Quantale, Mod: QModule) -> CyclicSet:
    if not is_simple_module(Q, Mod):
        raise NotSimpleModule("module is not simple")
    assert pmn_decomposition_holds(Q, Mod)
    elems = {
        pmn(Q, Mod, m, n)
        for m in Mod.elements if m != Mod.top
        for n in Mod.elements if n != Mod.bottom
    }
    P = CyclicSet.of(Q, elems)
    assert is_cyclic_set(Q, P), P
    return P


def star_twist_module(Q: Quantale, Mod: QModule) -> QModule:
    """``(M*)^op``: M with ``x * a = a^* . x`` as a right module, then dualised."""
    s = Q.require_star()
    if Mod.side != LEFT:
        raise ValidationError("BadSide", (), "star twist expects a left module")
    twisted = validate_module(
        Q, Mod.lattice, RIGHT, [Mod.act[s[a]] for a in Q.elements], Mod.embedding
    )
    return dual_module(Q, twisted)


def _signature(Q: Quantale, Mod: QModule, x: int) -> tuple:
    lat = Mod.lattice
    return (
        len(lat.down(x)),
        len(lat.up(x)),
        tuple(sorted(len(lat.down(Mod.act[a][x])) for a in Q.elements)),
    )


def module_isomorphism(Q: Quantale, A: QModule, B: QModule) -> Optional[tuple[int, ...]]:
    """A bijection A -> B preserving joins and the action, or None."""
    if A.m != B.m or A.side != B.side:
        return None
    sig_b: dict = {}
    for y in B.elements:
        sig_b.setdefault(_signature(Q, B, y), []).append(y)
    order = list(A.elements)
    cands = [sig_b.get(_signature(Q, A, x), []) for x in order]
    if any(not c for c in cands):
        return None
    phi = [-1] * A.m
    used = [False] * B.m
    ja, jb = A.lattice.join, B.lattice.join

    def consistent(x: int) -> bool:
        fx = phi[x]
        for y in order:
            fy = phi[y]
            if fy < 0:
                continue
            z = ja[x][y]
            if phi[z] >= 0 and phi[z] != jb[fx][fy]:
                return False
        for a in Q.elements:
            z = A.act[a][x]
            if phi[z] >= 0 and phi[z] != B.act[a][fx]:
                return False
            for w in order:
                if phi[w] >= 0 and A.act[a][w] == x and B.act[a][phi[w]] != fx:
                    return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in cands[i]:
            if used[y]:
                continue
            phi[x], used[y] = y, True
            if consistent(x) and rec(i + 1):
                return True
            phi[x], used[y] = -1, False
        return False

    if not rec(0):
        return None
    return tuple(phi)


def is_module_isomorphic(Q: Quantale, A: QModule, B: QModule) -> bool:
    return module_isomorphism(Q, A, B) is not None


def simple_modules_from_cyclic_sets(Q: Quantale) -> list[tuple[CyclicSet, QModule]]:
    return [(P, module_from_cyclic_set(Q, P, P.elems[0])) for P in enumerate_cyclic_sets(Q)]


def find_simple_faithful_module(Q: Quantale) -> Optional[QModule]:
    """Search the natural candidates (R(Q), cyclic-set modules, their duals)."""
    cands = [rightside_module(Q)]
    cands += [M for _, M in simple_modules_from_cyclic_sets(Q)]
    cands += [dual_module(Q, M) for M in list(cands)]
    for M in cands:
        if is_simple_module(Q, M) and is_faithful(Q, M):
            return M
    return None


def modules_separate(Q: Quantale) -> bool:
    """Some simple cyclic-set module tells every pair a != b apart."""
    mods = [M for _, M in simple_modules_from_cyclic_sets(Q)]
    for a, b in combinations(Q.elements, 2):
        if not any(M.act[a] != M.act[b] for M in mods):
            return False
    return True
