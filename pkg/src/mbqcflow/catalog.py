"""Builders for the bundled example patterns.

The same two patterns ship as JSON documents under patterns/ for the
command line; these constructors are the programmatic counterpart used by
the demos and the test suite.
"""

from __future__ import annotations

from .pattern import Pattern

__all__ = ["chain5", "hbranch", "linear_chain"]

Angle = float | str


def linear_chain(n: int, angles=None) -> Pattern:
    """Open chain on qubits 1..n; qubit 1 is the input, qubit n the output.

    ``angles`` assigns the base angles of qubits 1..n-1 in order; default
    is 0.0 everywhere.
    """
    if n < 2:
        raise ValueError("a chain needs at least an input and an output qubit")
    measured = tuple(range(1, n))
    if angles is None:
        angles = [0.0] * (n - 1)
    if len(angles) != n - 1:
        raise ValueError(f"expected {n - 1} angles, got {len(angles)}")
    return Pattern(
        n_qubits=n,
        edges=frozenset((i, i + 1) for i in range(1, n)),
        inputs=(1,),
        outputs=(n,),
        measured=measured,
        angles=dict(zip(measured, angles)),
    )


def chain5(alpha: Angle = "alpha", beta: Angle = "beta", gamma: Angle = "gamma") -> Pattern:
    """The five-qubit wire realizing a general single-qubit rotation.

    Qubit 1 (the input) is measured at angle 0; qubits 2..4 carry the
    three rotation angles. Pass floats to get a numerically runnable
    pattern, or leave the symbol names for symbolic compilation.
    """
    return linear_chain(5, angles=[0.0, alpha, beta, gamma])


def hbranch(
    angle1: Angle = "theta1",
    angle2: Angle = "theta2",
    angle4: Angle = "theta4",
    angle5: Angle = "theta5",
) -> Pattern:
    """Two three-qubit rails bridged in the middle (an H shape).

    Qubits 1 and 4 are inputs, 3 and 6 outputs; the bridge 2-5 makes the
    rails interact, which is the essential ingredient of a controlled
    transformation. The measurement order interleaves the rails so each
    byproduct lands before the qubit it affects is measured.
    """
    return Pattern(
        n_qubits=6,
        edges=frozenset({(1, 2), (2, 3), (4, 5), (5, 6), (2, 5)}),
        inputs=(1, 4),
        outputs=(3, 6),
        measured=(1, 4, 2, 5),
        angles={1: angle1, 4: angle4, 2: angle2, 5: angle5},
    )
