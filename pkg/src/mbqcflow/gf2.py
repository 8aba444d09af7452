"""Linear expressions over GF(2) in measurement-outcome variables.

Every classical quantity in the calculus (angle-sign flips, output
corrections, stabilizer exponents) is an XOR of outcome bits plus a
constant bit. Products of expressions never occur: generators are only
ever raised to a single symbolic power, so ``scale`` by a constant bit
is the largest multiplication this module supports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import MissingOutcomeError

__all__ = ["Gf2Expr"]


@dataclass(frozen=True)
class Gf2Expr:
    """XOR of outcome variables plus a constant bit, in canonical form.

    ``vars`` holds the qubit id of every variable with odd multiplicity;
    XOR absorbs pairs, so a set is already canonical. Instances are
    immutable values and safe to share between threads.
    """

    vars: frozenset[int] = field(default_factory=frozenset)
    const: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vars", frozenset(self.vars))
        if self.const not in (0, 1):
            raise ValueError(f"constant bit must be 0 or 1, got {self.const!r}")
        for q in self.vars:
            if not isinstance(q, int) or isinstance(q, bool) or q < 0:
                raise ValueError(f"outcome variables are non-negative qubit ids, got {q!r}")

    @classmethod
    def zero(cls) -> "Gf2Expr":
        return cls()

    @classmethod
    def one(cls) -> "Gf2Expr":
        return cls(const=1)

    @classmethod
    def var(cls, qubit: int) -> "Gf2Expr":
        """The single outcome variable of the given measured qubit."""
        return cls(vars=frozenset((qubit,)))

    @classmethod
    def of(cls, qubits: Iterable[int] = (), const: int = 0) -> "Gf2Expr":
        """Build from a variable multiset; repeated entries cancel in pairs."""
        acc: frozenset[int] = frozenset()
        for q in qubits:
            acc = acc.symmetric_difference((q,))
        return cls(vars=acc, const=const)

    @property
    def is_zero(self) -> bool:
        return not self.vars and self.const == 0

    @property
    def is_one(self) -> bool:
        return not self.vars and self.const == 1

    @property
    def is_constant(self) -> bool:
        return not self.vars

    @property
    def term_count(self) -> int:
        """Number of rendered terms (variables plus the constant if set)."""
        return len(self.vars) + self.const

    def add(self, other: "Gf2Expr") -> "Gf2Expr":
        """XOR of two expressions; the group operation of the calculus."""
        return Gf2Expr(self.vars.symmetric_difference(other.vars), self.const ^ other.const)

    __xor__ = add

    def scale(self, bit: int) -> "Gf2Expr":
        """Multiply by a constant bit: zero kills the expression, one keeps it.

        Only constant bits are legal multipliers; passing another expression
        is a contract violation, not a supported product.
        """
        if isinstance(bit, Gf2Expr):
            raise TypeError("products of expressions are not part of the calculus")
        if bit not in (0, 1):
            raise ValueError(f"scale factor must be 0 or 1, got {bit!r}")
        return self if bit else Gf2Expr.zero()

    def evaluate(self, assignment: Mapping[int, int]) -> int:
        """Instantiate one branch of outcomes; assignment must cover all vars."""
        acc = self.const
        for q in self.vars:
            if q not in assignment:
                raise MissingOutcomeError(q)
            acc ^= assignment[q] & 1
        return acc

    def sorted_vars(self) -> tuple[int, ...]:
        return tuple(sorted(self.vars))

    def as_dict(self) -> dict:
        """Structured form: sorted variable ids plus the constant bit."""
        return {"vars": list(self.sorted_vars()), "const": self.const}

    def __str__(self) -> str:
        parts = [f"s{q}" for q in self.sorted_vars()]
        if self.const:
            parts.append("1")
        return "^".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Gf2Expr({str(self)})"
