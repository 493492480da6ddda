"""Exception types shared across the package."""

from __future__ import annotations


class RingLabError(Exception):
    """Base class for all errors raised by this package."""


class RingAxiomError(RingLabError):
    """A table fails one of the ring (or module) axioms.

    `axiom` names the violated law; `witness` is the element tuple that
    violates it, when one exists.
    """

    def __init__(self, axiom: str, witness: tuple = (), detail: str = ""):
        self.axiom = axiom
        self.witness = tuple(int(x) for x in witness)
        msg = f"axiom violated: {axiom}"
        if self.witness:
            msg += f" at {self.witness}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CapExceeded(RingLabError):
    """A constructor would exceed a configured size cap."""


class NotAnIdeal(RingLabError):
    """A subset handed to an operation is not closed under the required axioms."""


class FamilyInputError(RingLabError):
    """A named family constructor was given inputs violating its preconditions."""


class UnsupportedFamily(RingLabError):
    """Requested family constructor is intentionally not provided."""


class TheoremViolation(RingLabError):
    """An exhaustively checkable statement failed; carries the full witness dump."""

    def __init__(self, statement: str, dump: dict):
        self.statement = statement
        self.dump = dump
        super().__init__(f"theorem violation: {statement}: {dump}")


class InternalConsistencyError(RingLabError):
    """Two independent evaluation routes disagreed; indicates an engine bug."""
