"""Exception vocabulary shared across the package."""

from __future__ import annotations


class LfcatError(Exception):
    """Base class for all errors raised by this package."""


class Violation:
    """One broken invariant, with the tokens that witness it.

    kind is a stable machine-readable tag (e.g. "axiom/associativity",
    "loop-free/return", "dangling"); witnesses are the offending tokens.
    """

    __slots__ = ("kind", "message", "witnesses")

    def __init__(self, kind: str, message: str, witnesses: tuple[str, ...] = ()):
        self.kind = kind
        self.message = message
        self.witnesses = witnesses

    def __repr__(self):
        return f"Violation({self.kind!r}, {self.message!r}, {self.witnesses!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Violation)
            and (self.kind, self.message, self.witnesses)
            == (other.kind, other.message, other.witnesses)
        )

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "message": self.message,
            "witnesses": list(self.witnesses),
        }


class InvalidCategory(LfcatError):
    """Raised with the complete list of violated category invariants."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        lines = "; ".join(v.message for v in violations[:8])
        more = "" if len(violations) <= 8 else f" (+{len(violations) - 8} more)"
        super().__init__(f"invalid category: {lines}{more}")


class NotFunctorial(LfcatError):
    """Raised with the complete list of functoriality violations."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        lines = "; ".join(v.message for v in violations[:8])
        more = "" if len(violations) <= 8 else f" (+{len(violations) - 8} more)"
        super().__init__(f"not a functor: {lines}{more}")


class DanglingReference(LfcatError):
    pass


class UnknownObject(LfcatError):
    pass


class UnknownMorphism(LfcatError):
    pass


class SourceTargetMismatch(LfcatError):
    pass


class NotInvertible(LfcatError):
    pass


class SeedInconsistent(LfcatError):
    pass


class IsoTimeout(LfcatError):
    """Isomorphism search exceeded its time limit."""


class IndexUnknown(LfcatError):
    pass


class ComponentWrongFactor(LfcatError):
    pass


class RaggedIndexSets(LfcatError):
    pass


class SizeExceeded(LfcatError):
    pass


class NotConnected(LfcatError):
    pass


class NotIso(LfcatError):
    pass


class EmptyCategory(LfcatError):
    pass


class PreconditionViolated(LfcatError):
    pass


class ParamOutOfRange(LfcatError):
    pass


class TokenCollision(LfcatError):
    """Distinct component tuples rendered to the same canonical token."""


class ParseError(LfcatError):
    """Malformed document; location names the offending field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
