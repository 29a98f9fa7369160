from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive property check; truthy iff it passed."""

    name: str
    ok: bool
    witness: Any = None
    note: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status} {self.name}"
        if not self.ok and self.witness is not None:
            out += f" witness={self.witness}"
        if self.note:
            out += f" ({self.note})"
        return out
