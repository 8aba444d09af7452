"""Byproduct elimination: from random Z factors to a classical signal flow.

Measurement outcomes leave a Z^s byproduct on every measured qubit of the
prepared state. Each byproduct is cancelled by multiplying in the
successor's stabilizer raised to the accumulated exponent; the flow
condition guarantees that deposits only land on qubits processed later,
so a single pass in measurement order suffices. What survives the pass is
the classical signal flow: X exponents on measured qubits flip their
measurement angles, X/Z exponents on output qubits are the corrections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import EliminationError, PatternValidationError, SymbolicAngleError
from .gf2 import Gf2Expr
from .pattern import FlowMap, Pattern, find_flow, stabilizer, validate
from .pauli import PauliWord

__all__ = ["SignalFlow", "AdaptedAngle", "initial_byproduct", "eliminate", "adapt_angles"]


@dataclass(frozen=True)
class SignalFlow:
    """Compiled classical dependencies of one pattern.

    angle_sign: per measured qubit, the parity that flips its angle sign.
    output_x / output_z: per output qubit, the correction exponents.
    trace: the stabilizer powers applied, in application order.
    """

    angle_sign: dict[int, Gf2Expr]
    output_x: dict[int, Gf2Expr]
    output_z: dict[int, Gf2Expr]
    trace: tuple[tuple[int, Gf2Expr], ...]


@dataclass(frozen=True)
class AdaptedAngle:
    """A base angle together with the parity controlling its sign."""

    base: float | str
    sign: Gf2Expr

    def value(self, outcomes: Mapping[int, int]) -> float:
        """Numeric angle for one branch: base negated when the parity is odd."""
        if isinstance(self.base, str):
            raise SymbolicAngleError(f"angle symbol {self.base!r} has no numeric value")
        return -float(self.base) if self.sign.evaluate(outcomes) else float(self.base)

    def __str__(self) -> str:
        base = self.base if isinstance(self.base, str) else repr(float(self.base))
        if self.sign.is_zero:
            return base
        sign = str(self.sign)
        if self.sign.term_count > 1:
            sign = f"({sign})"
        return f"(-1)^{sign} * {base}"


def initial_byproduct(p: Pattern) -> PauliWord:
    """Z^s on every measured qubit: the state right after all measurements."""
    return PauliWord(
        frozenset(p.qubits),
        z_exp={q: Gf2Expr.var(q) for q in p.measured},
    )


def eliminate(
    p: Pattern,
    flow: FlowMap | Mapping[int, int] | None = None,
    *,
    check: bool = True,
) -> SignalFlow:
    """Cancel every measured-qubit Z byproduct and read off the signal flow.

    ``flow`` defaults to the pattern's own flow, or to :func:`find_flow`
    when the pattern carries none. With ``check`` (the default) the
    pattern-plus-flow is validated first and violations raise
    :class:`PatternValidationError`; ``check=False`` skips straight to the
    pass, in which case an unsound flow surfaces as
    :class:`EliminationError`.
    """
    if flow is None:
        flow = p.flow if p.flow is not None else find_flow(p)
    succ = flow.succ if isinstance(flow, FlowMap) else dict(flow)

    if check:
        violations = validate(p.with_flow(succ))
        if violations:
            raise PatternValidationError(violations)

    word = initial_byproduct(p)
    trace: list[tuple[int, Gf2Expr]] = []
    for i in p.measured:
        exponent = word.z_on(i)
        if exponent.is_zero:
            continue
        if i not in succ:
            raise EliminationError(f"measured qubit {i} has no successor to cancel its byproduct")
        target = succ[i]
        word = word.multiply(stabilizer(p, target).pow(exponent))
        trace.append((target, exponent))

    residue = [q for q in p.measured if not word.z_on(q).is_zero]
    if residue:
        raise EliminationError(
            f"Z byproducts survive on measured qubits {residue}; the flow is not causal"
        )

    pos = {q: t for t, q in enumerate(p.measured)}
    angle_sign: dict[int, Gf2Expr] = {}
    for k in p.measured:
        e = word.x_on(k)
        late = [v for v in e.vars if pos[v] >= pos[k]]
        if late:
            raise EliminationError(
                f"angle sign of qubit {k} depends on outcomes {sorted(late)} not yet measured"
            )
        angle_sign[k] = e

    output_x = {j: word.x_on(j) for j in p.outputs}
    output_z = {j: word.z_on(j) for j in p.outputs}
    return SignalFlow(
        angle_sign=angle_sign,
        output_x=output_x,
        output_z=output_z,
        trace=tuple(trace),
    )


def adapt_angles(p: Pattern, sf: SignalFlow) -> dict[int, AdaptedAngle]:
    """Pair every measured qubit's base angle with its sign parity."""
    return {k: AdaptedAngle(base=p.angles[k], sign=sf.angle_sign[k]) for k in p.measured}
