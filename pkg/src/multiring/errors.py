"""Exception types shared across the library.

Every error raised by the public API derives from MultiRingError, so callers
can catch one base class.  ForeignElement also covers operation indices that
fall outside 1..m, since an out-of-range index names an operation the space
does not own.
"""

from __future__ import annotations


class MultiRingError(Exception):
    """Base class for all errors raised by this library."""


class CapExceeded(MultiRingError):
    """A ring-size cap or subset-enumeration budget was exceeded."""


class MalformedTable(MultiRingError):
    """An operation table has the wrong shape or references an unknown label."""


class AxiomViolation(MultiRingError):
    """Tables were rejected because they violate a ring axiom.

    Carries the full ValidationReport so the failing witness can be replayed.
    """

    def __init__(self, report):
        self.report = report
        first = report.failures[0] if report.failures else None
        super().__init__(f"ring axioms violated: {first}")


class ForeignElement(MultiRingError):
    """An element (or operation index) does not belong to the structure at hand."""


class NoUnit(MultiRingError):
    """The operation requires a multiplicative unit and the ring has none."""


class EmptyFamily(MultiRingError):
    """A multi-ring space needs at least one ring."""


class EmptyOps(MultiRingError):
    """A subset selection must select at least one operation pair."""


class RingInvalid(MultiRingError):
    """A ring handed to build_multispace failed validation."""

    def __init__(self, ring_name: str, report):
        self.ring_name = ring_name
        self.report = report
        first = report.failures[0] if report.failures else None
        super().__init__(f"ring {ring_name!r} invalid: {first}")


class MixedLawViolationError(MultiRingError):
    """Two operation pairs break a mixed associativity/distributivity law.

    Carries the MixedLawViolation witness; replaying it against the tables
    reproduces the inequality.
    """

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class StepInvalid(MultiRingError):
    """A chain step produced a term that is not a maximal ideal subspace."""

    def __init__(self, message: str, term=None):
        self.term = term
        super().__init__(message)


class NotIdealSubspace(MultiRingError):
    """An argument required to be an ideal subspace is not one."""


class MixedModeMismatch(MultiRingError):
    """Additive-mode directed sum applied to components spanning several rings."""


class NoDecomposition(MultiRingError):
    """No directed-sum decomposition could be produced or certified."""


class SpecError(MultiRingError):
    """Base class for description-file problems; carries a location string."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class SpecSyntaxError(SpecError):
    """The description file is not well-formed text (with line/column)."""


class DuplicateLabel(SpecError):
    """A label appears twice where labels must be distinct."""


class UnknownKey(SpecError):
    """The description file uses a key the format does not define."""


class TableShape(SpecError):
    """A declared table is ragged or does not match its element count."""
