"""Analysis reports: every computed invariant of one quantale, JSON-ready."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from .congruence import ENUM_LIMIT, enumerate_congruences, is_simple_by_principals, maximal_congruences, simple_quotient_congruences
from .constructions import canonical_form
from .io import structure_hash
from .quantale import Quantale, is_factor, is_star_factor, is_strictly_faithful, sided_elements
from .spectra import enumerate_cyclic_sets, is_semisimple, is_star_semisimple, two_sided_primes
from .theorems import run_suite


@dataclass
class AnalysisReport:
    id: str
    name: str
    order: int
    has_star: bool
    sided: dict
    factor: bool
    star_factor: Optional[bool]
    strictly_faithful: bool
    congruence_count: Optional[int]
    star_congruence_count: Optional[int]
    simple: bool
    star_simple: Optional[bool]
    two_sided_primes: list
    cyclic_sets: list
    semisimple: bool
    star_semisimple: Optional[bool]
    simple_module_count: int
    theorems: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(t["ok"] for t in self.theorems)

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls(**json.loads(text))


def analyze(Q: Quantale, name: str = "q", run_theorems: bool = True) -> AnalysisReport:
    sd = sided_elements(Q)
    has_star = Q.star is not None
    enumerable = Q.n <= ENUM_LIMIT
    notes = ["top is excluded from the two-sided primes (it yields an empty cyclic set)"]
    congs = enumerate_congruences(Q) if enumerable else None
    star_congs = enumerate_congruences(Q, star=True) if enumerable and has_star else None
    topsq = Q.mult[Q.top][Q.top] == Q.bottom
    if topsq:
        notes.append("1·1=0")
    if congs is not None:
        simple = not topsq and len(congs) == 2
    else:
        simple = is_simple_by_principals(Q)
        notes.append("congruences not enumerated above the size limit")
    star_simple = None
    if star_congs is not None:
        star_simple = not topsq and len(star_congs) == 2
    elif has_star:
        star_simple = is_simple_by_principals(Q, star=True)
    if enumerable:
        nmax = len(maximal_congruences(Q, congruences=congs))
        nsq = len(simple_quotient_congruences(Q))
        if nmax != nsq:
            notes.append(f"{nmax - nsq} maximal congruence(s) with a non-simple quotient")
    notes.append("spatiality-based semisimplicity criteria are not evaluated")
    cyc = enumerate_cyclic_sets(Q)
    theorems = []
    if run_theorems:
        theorems = [
            {"name": r.name, "ok": r.ok, "witness": None if r.ok else repr(r.witness), "note": r.note}
            for r in run_suite(Q)
        ]
    sided = {"right": len(sd.right), "left": len(sd.left), "two_sided": len(sd.two_sided)}
    if has_star:
        sided["hermitian"] = len(sd.hermitian)
        sided["hermitian_two_sided"] = len(sd.hermitian_two_sided)
    return AnalysisReport(
        id=structure_hash(canonical_form(Q)) if Q.n <= 9 else structure_hash(Q),
        name=name,
        order=Q.n,
        has_star=has_star,
        sided=sided,
        factor=is_factor(Q),
        star_factor=is_star_factor(Q) if has_star else None,
        strictly_faithful=is_strictly_faithful(Q),
        congruence_count=None if congs is None else len(congs),
        star_congruence_count=None if star_congs is None else len(star_congs),
        simple=simple,
        star_simple=star_simple,
        two_sided_primes=two_sided_primes(Q),
        cyclic_sets=[list(P.elems) for P in cyc],
        semisimple=is_semisimple(Q),
        star_semisimple=is_star_semisimple(Q) if has_star and enumerable else None,
        simple_module_count=len(cyc),
        theorems=theorems,
        notes=notes,
    )


def format_text(r: AnalysisReport) -> str:
    lines = [
        f"{r.name} (id {r.id}), order {r.order}" + (", with involution" if r.has_star else ""),
        "sided sets: " + ", ".join(f"{k}={v}" for k, v in r.sided.items()),
        f"factor={r.factor} strictly_faithful={r.strictly_faithful}"
        + (f" star_factor={r.star_factor}" if r.has_star else ""),
        f"congruences={r.congruence_count} simple={r.simple}"
        + (f" star_congruences={r.star_congruence_count} star_simple={r.star_simple}" if r.has_star else ""),
        f"two-sided primes={r.two_sided_primes} cyclic sets={r.cyclic_sets}",
        f"semisimple={r.semisimple}" + (f" star_semisimple={r.star_semisimple}" if r.has_star else ""),
        f"simple modules={r.simple_module_count}",
    ]
    for t in r.theorems:
        line = ("PASS " if t["ok"] else "FAIL ") + t["name"]
        if t["witness"]:
            line += f" witness={t['witness']}"
        if t["note"]:
            line += f" ({t['note']})"
        lines.append(line)
    lines += [f"note: {n}" for n in r.notes]
    return "\n".join(lines)
