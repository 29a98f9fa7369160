"""Exception types shared across the package."""

from __future__ import annotations


class QlabError(Exception):
    """Base class for all errors raised by qlab."""


class ValidationError(QlabError):
    """A table failed one of the structural laws.

    ``law`` names the violated axiom (e.g. ``"NonAssociative"``) and
    ``witnesses`` holds the offending element indices.
    """

    def __init__(self, law: str, witnesses: tuple = (), detail: str = ""):
        self.law = law
        self.witnesses = tuple(witnesses)
        msg = law
        if witnesses:
            msg += "(" + ", ".join(map(str, witnesses)) + ")"
        if detail:
            msg += ": " + detail
        super().__init__(msg)


class SizeLimitExceeded(QlabError):
    pass


class StarMissing(QlabError):
    """A *-predicate was asked of a quantale without an involution."""


class NotCyclic(QlabError):
    pass


class NotTwoSidedPrime(QlabError):
    pass


class TopPrimeRejected(NotTwoSidedPrime):
    pass


class NotSubsemigroup(QlabError):
    pass


class BottomNotInS(QlabError):
    pass


class QuotientNotSimple(QlabError):
    pass


class NotSimpleModule(QlabError):
    pass


class ElementNotInSet(QlabError):
    pass


class BadParameters(QlabError):
    pass


class IncompatibleCongruence(QlabError):
    pass


class ParseError(QlabError):
    """Syntax error in a structure file, with 1-based line/column."""

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")
