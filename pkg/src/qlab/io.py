"""Plain-text structure files.

::

    quantale <name>
    order <n>
    join
    <n rows of n integers>
    mult
    <n rows of n integers>
    star                  # optional
    <n integers>
    end

A ``lattice`` block omits mult/star.  A ``module`` block (side, order,
join, action, end) may follow a quantale block.  ``#`` starts a comment.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .lattice import Lattice, validate_lattice
from .modules import QModule, validate_module
from .quantale import Quantale, validate_quantale


@dataclass(frozen=True)
class Document:
    """A parsed file: a lattice, or a quantale with an optional module."""

    kind: str
    name: str
    lattice: Lattice
    quantale: Optional[Quantale] = None
    module: Optional[QModule] = None
    module_name: Optional[str] = None

    @property
    def structure(self):
        if self.module is not None:
            return self.module
        return self.quantale if self.quantale is not None else self.lattice


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, int, int]] = []
        for ln, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0]
            col = 0
            for part in body.split():
                col = body.index(part, col)
                self.toks.append((part, ln, col + 1))
                col += len(part)
        self.i = 0
        last_line = text.count("\n") + 1
        self.eof_pos = (last_line, 1)

    def peek(self) -> Optional[str]:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> tuple[int, int]:
        if self.i < len(self.toks):
            return self.toks[self.i][1], self.toks[self.i][2]
        return self.eof_pos

    def next(self, what: str) -> str:
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of file, expected {what}", *self.eof_pos)
        tok = self.toks[self.i][0]
        self.i += 1
        return tok

    def keyword(self, kw: str) -> None:
        line, col = self.pos()
        tok = self.next(f"'{kw}'")
        if tok != kw:
            raise ParseError(f"expected '{kw}', got '{tok}'", line, col)

    def integer(self, what: str) -> int:
        line, col = self.pos()
        tok = self.next(what)
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"expected integer ({what}), got '{tok}'", line, col) from None

    def rows(self, nrows: int, ncols: int, what: str) -> list[list[int]]:
        return [[self.integer(what) for _ in range(ncols)] for _ in range(nrows)]


def parse(text: str) -> Document:
    """Parse and validate a structure file.

    Raises :class:`ParseError` on syntax problems and
    :class:`~qlab.errors.ValidationError` when a table breaks a law.
    """
    tk = _Tokens(text)
    line, col = tk.pos()
    kind = tk.next("'lattice' or 'quantale'")
    if kind not in ("lattice", "quantale"):
        raise ParseError(f"expected 'lattice' or 'quantale', got '{kind}'", line, col)
    name = tk.next("name")
    tk.keyword("order")
    line, col = tk.pos()
    n = tk.integer("order")
    if n < 1:
        raise ParseError("order must be positive", line, col)
    tk.keyword("join")
    join = tk.rows(n, n, "join entry")
    if kind == "lattice":
        tk.keyword("end")
        _expect_eof(tk)
        return Document("lattice", name, validate_lattice(join))
    tk.keyword("mult")
    mult = tk.rows(n, n, "mult entry")
    star = None
    if tk.peek() == "star":
        tk.next("star")
        star = [tk.integer("star entry") for _ in range(n)]
    tk.keyword("end")
    L = validate_lattice(join)
    Q = validate_quantale(L, mult, star)
    if tk.peek() is None:
        return Document("quantale", name, L, Q)
    tk.keyword("module")
    mname = tk.next("module name")
    tk.keyword("side")
    line, col = tk.pos()
    side = tk.next("side")
    if side not in ("left", "right"):
        raise ParseError(f"side must be left or right, got '{side}'", line, col)
    tk.keyword("order")
    line, col = tk.pos()
    m = tk.integer("module order")
    if m < 1:
        raise ParseError("order must be positive", line, col)
    tk.keyword("join")
    mjoin = tk.rows(m, m, "module join entry")
    tk.keyword("action")
    act = tk.rows(n, m, "action entry")
    tk.keyword("end")
    _expect_eof(tk)
    mod = validate_module(Q, validate_lattice(mjoin), side, act)
    return Document("module", name, L, Q, mod, mname)


def _expect_eof(tk: _Tokens) -> None:
    if tk.peek() is not None:
        line, col = tk.pos()
        raise ParseError(f"trailing input '{tk.peek()}'", line, col)


def _rows(table) -> list[str]:
    return [" ".join(map(str, row)) for row in table]


def serialize_lattice(L: Lattice, name: str) -> str:
    lines = [f"lattice {name}", f"order {L.n}", "join", *_rows(L.join), "end"]
    return "\n".join(lines) + "\n"


def serialize_quantale(Q: Quantale, name: str) -> str:
    lines = [f"quantale {name}", f"order {Q.n}", "join", *_rows(Q.join), "mult", *_rows(Q.mult)]
    if Q.star is not None:
        lines += ["star", " ".join(map(str, Q.star))]
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_module(Mod: QModule, name: str) -> str:
    lines = [
        f"module {name}", f"side {Mod.side}", f"order {Mod.m}",
        "join", *_rows(Mod.lattice.join), "action", *_rows(Mod.act), "end",
    ]
    return "\n".join(lines) + "\n"


def serialize(doc: Document) -> str:
    """Canonical text: single spaces, one row per line, no comments."""
    if doc.kind == "lattice":
        return serialize_lattice(doc.lattice, doc.name)
    out = serialize_quantale(doc.quantale, doc.name)
    if doc.module is not None:
        out += serialize_module(doc.module, doc.module_name)
    return out


def structure_hash(Q: Quantale) -> str:
    """Hex digest of the tables (name-independent), 16 characters."""
    return hashlib.sha256(serialize_quantale(Q, "_").encode()).hexdigest()[:16]
