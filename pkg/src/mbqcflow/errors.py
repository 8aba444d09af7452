"""Exception types shared across the package."""

from __future__ import annotations


class MbqcflowError(Exception):
    """Base class for all errors raised by this package."""


class MissingOutcomeError(MbqcflowError, KeyError):
    """An expression was evaluated under an assignment missing a variable."""

    def __init__(self, qubit: int):
        super().__init__(f"no outcome recorded for qubit {qubit}")
        self.qubit = qubit


class DimensionMismatchError(MbqcflowError, ValueError):
    """Two Pauli words over different qubit sets were combined."""


class NonConstantExponentError(MbqcflowError, ValueError):
    """pow() was applied to a word that already carries symbolic exponents."""


class InvalidQubitError(MbqcflowError, ValueError):
    """A qubit id does not belong to the pattern."""


class PatternValidationError(MbqcflowError):
    """A pattern (or its flow) breaks one or more structural rules."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(f"{v.rule}: {v.detail}" for v in self.violations)
        super().__init__(lines or "invalid pattern")


class NoFlowError(MbqcflowError):
    """The graph admits no causal successor map for the given roles."""


class EliminationError(MbqcflowError):
    """Byproduct elimination did not terminate cleanly (invalid flow)."""


class NormalizationError(MbqcflowError, ValueError):
    """An input state is not normalized."""


class SymbolicAngleError(MbqcflowError, ValueError):
    """A numeric angle was required but the pattern holds a named symbol."""


class BranchCapError(MbqcflowError, ValueError):
    """Branch enumeration would exceed the configured cap."""


class PatternFormatError(MbqcflowError, ValueError):
    """A pattern document does not match the file schema."""
