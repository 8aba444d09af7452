"""Symbolic Pauli words with GF(2)-expression exponents.

A word stores, per qubit, the X exponent and the Z exponent as
:class:`~mbqcflow.gf2.Gf2Expr`. Normal form per qubit is X^x Z^z with X
written left of Z; the global phase produced by reordering is discarded
throughout, so multiplication reduces to exponent-wise XOR.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DimensionMismatchError, NonConstantExponentError
from .gf2 import Gf2Expr

__all__ = ["PauliWord"]

# Concrete per-qubit operators after instantiation; "XZ" means the X is
# applied after the Z (X left of Z in operator order).
_LABELS = ("X", "Z", "XZ")


def _canonical(exps: Mapping[int, Gf2Expr], qubits: frozenset[int], kind: str) -> dict[int, Gf2Expr]:
    out: dict[int, Gf2Expr] = {}
    for q, e in exps.items():
        if q not in qubits:
            raise DimensionMismatchError(f"{kind} exponent on qubit {q} outside the word's qubit set")
        if not isinstance(e, Gf2Expr):
            raise TypeError(f"{kind} exponent for qubit {q} must be a Gf2Expr")
        if not e.is_zero:
            out[q] = e
    return out


@dataclass(eq=True)
class PauliWord:
    """Pauli word over an explicit qubit set; zero exponents are not stored.

    Treat instances as immutable; all operations return new words.
    """

    qubits: frozenset[int]
    x_exp: dict[int, Gf2Expr] = field(default_factory=dict)
    z_exp: dict[int, Gf2Expr] = field(default_factory=dict)

    def __post_init__(self):
        self.qubits = frozenset(self.qubits)
        self.x_exp = _canonical(self.x_exp, self.qubits, "X")
        self.z_exp = _canonical(self.z_exp, self.qubits, "Z")

    @classmethod
    def identity(cls, qubits: int | Iterable[int]) -> "PauliWord":
        """Identity word; an int n means qubit ids 0..n-1."""
        ids = range(qubits) if isinstance(qubits, int) else qubits
        return cls(frozenset(ids))

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    @property
    def is_identity(self) -> bool:
        return not self.x_exp and not self.z_exp

    def multiply(self, other: "PauliWord") -> "PauliWord":
        """Exponent-wise XOR per qubit; the reordering phase is dropped."""
        if self.qubits != other.qubits:
            raise DimensionMismatchError(
                f"cannot multiply words over different qubit sets "
                f"({sorted(self.qubits)} vs {sorted(other.qubits)})"
            )
        x = dict(self.x_exp)
        for q, e in other.x_exp.items():
            x[q] = x[q].add(e) if q in x else e
        z = dict(self.z_exp)
        for q, e in other.z_exp.items():
            z[q] = z[q].add(e) if q in z else e
        return PauliWord(self.qubits, x, z)

    __mul__ = multiply

    def pow(self, exponent: Gf2Expr) -> "PauliWord":
        """Raise a concrete generator to a symbolic power.

        Every stored exponent must be the constant 1 (the word must not be
        symbolic already); each is replaced by ``exponent``.
        """
        for e in list(self.x_exp.values()) + list(self.z_exp.values()):
            if not e.is_one:
                raise NonConstantExponentError(
                    "pow() needs a concrete word; found symbolic exponent " + str(e)
                )
        x = {q: exponent for q in self.x_exp}
        z = {q: exponent for q in self.z_exp}
        return PauliWord(self.qubits, x, z)

    def instantiate(self, assignment: Mapping[int, int]) -> dict[int, str]:
        """Fix a branch of outcomes; returns per-qubit labels X/Z/XZ.

        Qubits acting as identity are omitted, so an empty dict is the
        identity operator.
        """
        labels: dict[int, str] = {}
        for q in sorted(self.qubits):
            xbit = self.x_exp[q].evaluate(assignment) if q in self.x_exp else 0
            zbit = self.z_exp[q].evaluate(assignment) if q in self.z_exp else 0
            if xbit or zbit:
                labels[q] = _LABELS[(zbit << 1 | xbit) - 1]
        return labels

    def x_on(self, qubit: int) -> Gf2Expr:
        return self.x_exp.get(qubit, Gf2Expr.zero())

    def z_on(self, qubit: int) -> Gf2Expr:
        return self.z_exp.get(qubit, Gf2Expr.zero())

    def __str__(self) -> str:
        terms = []
        for q in sorted(self.qubits, reverse=True):
            if q in self.x_exp:
                terms.append(f"X{q}{_exp_str(self.x_exp[q])}")
            if q in self.z_exp:
                terms.append(f"Z{q}{_exp_str(self.z_exp[q])}")
        return " ".join(terms) if terms else "I"

    def __repr__(self) -> str:
        return f"PauliWord({str(self)})"


def _exp_str(e: Gf2Expr) -> str:
    # Frozen grammar: exponent omitted when 1, parenthesized when it has
    # more than one term.
    if e.is_one:
        return ""
    if e.term_count == 1:
        return f"^{e}"
    return f"^({e})"
