"""Dense state-vector oracle for measurement patterns.

Conventions, frozen once and used everywhere:

* Qubit ids map to tensor axes in ascending order; amplitudes live in a
  complex array of shape (2,)*n.
* The angle-theta measurement basis is (|0> +- e^{i theta}|1>)/sqrt(2),
  outcome 0 being the + vector. Measuring contracts the axis against the
  chosen basis vector and parks the result at basis index 0, so measured
  qubits stay in the register but carry no further amplitude structure.
* Rotations use U_z(t) = diag(1, e^{it}) and U_x(t) = H U_z(t) H.
* States are only ever compared through fidelity |<a|b>|^2, never
  componentwise: global phase is physically meaningless here.

All comparisons assume double precision; the package-wide tolerances are
1e-10 for state agreement and 1e-9 for probability sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .compiler import SignalFlow, adapt_angles
from .errors import (
    BranchCapError,
    InvalidQubitError,
    NormalizationError,
    SymbolicAngleError,
)
from .pattern import Pattern, stabilizer

__all__ = [
    "StateVector",
    "BranchResult",
    "prepare",
    "measure",
    "run_branch",
    "enumerate_branches",
    "reference_chain_unitary",
    "check_z_substitution",
    "apply_pauli",
    "stabilizer_deviation",
    "fidelity",
    "max_pairwise_infidelity",
    "DEFAULT_BRANCH_CAP",
    "STATE_TOL",
    "PROB_TOL",
]

STATE_TOL = 1e-10
PROB_TOL = 1e-9
DEFAULT_BRANCH_CAP = 16
_ZERO_PROB = 1e-12

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
# "XZ" is X applied after Z; the i-phase relative to Y is part of the
# discarded global phase.
_LABEL_MATS = {"X": _X, "Z": _Z, "XZ": _X @ _Z}


@dataclass
class StateVector:
    """Dense amplitudes over an explicit, ascending tuple of qubit ids."""

    qubits: tuple[int, ...]
    amps: np.ndarray

    def __post_init__(self):
        self.qubits = tuple(self.qubits)
        n = len(self.qubits)
        self.amps = np.asarray(self.amps, dtype=complex).reshape((2,) * n)

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    @property
    def vector(self) -> np.ndarray:
        """Flat view of the 2^n amplitudes."""
        return self.amps.reshape(-1)

    def axis(self, qubit: int) -> int:
        try:
            return self.qubits.index(qubit)
        except ValueError:
            raise InvalidQubitError(f"qubit {qubit} is not in this register") from None

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def copy(self) -> "StateVector":
        return StateVector(self.qubits, self.amps.copy())

    def apply_one(self, qubit: int, mat: np.ndarray) -> "StateVector":
        """Apply a 2x2 operator (not necessarily unitary) on one qubit."""
        ax = self.axis(qubit)
        moved = np.moveaxis(self.amps, ax, 0)
        out = np.tensordot(np.asarray(mat, dtype=complex), moved, axes=(1, 0))
        return StateVector(self.qubits, np.moveaxis(out, 0, ax))


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2 for unit vectors; the only phase-blind comparison used."""
    if a.qubits != b.qubits:
        raise InvalidQubitError("fidelity of states over different qubit sets")
    return float(abs(np.vdot(a.vector, b.vector)) ** 2)


def prepare(p: Pattern, input_states=None) -> StateVector:
    """Entangle the register: |+> everywhere, inputs replaced, CZ per edge.

    ``input_states`` maps input qubits to (a, b) amplitude pairs; missing
    inputs default to the equal superposition. Pairs must be normalized
    to within 1e-10.
    """
    input_states = dict(input_states or {})
    for q in input_states:
        if q not in p.inputs:
            raise InvalidQubitError(f"state supplied for qubit {q}, which is not an input")

    qubits = p.qubits
    amps = np.ones((1,), dtype=complex)
    for q in qubits:
        if q in input_states:
            a, b = input_states[q]
            vec = np.array([a, b], dtype=complex)
            if abs(np.linalg.norm(vec) - 1.0) > 1e-10:
                raise NormalizationError(f"input state for qubit {q} is not normalized")
        else:
            vec = _PLUS
        amps = np.tensordot(amps, vec, axes=0)
    amps = amps.reshape((2,) * len(qubits))

    index = {q: i for i, q in enumerate(qubits)}
    for u, v in sorted(p.edges):
        sl = [slice(None)] * len(qubits)
        sl[index[u]] = 1
        sl[index[v]] = 1
        amps[tuple(sl)] *= -1
    return StateVector(qubits, amps)


def measure(state: StateVector, qubit: int, angle: float, outcome: int) -> tuple[StateVector, float]:
    """Project one qubit onto the angle basis and renormalize.

    Returns the post-measurement state and the branch probability. The
    measured axis is collapsed onto basis index 0. A zero-probability
    branch returns probability 0.0 and the unnormalized (all-zero) state;
    the vanished norm is the flag for it.
    """
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome!r}")
    sign = -1.0 if outcome else 1.0
    basis = np.array([1.0, sign * np.exp(1j * float(angle))], dtype=complex) / np.sqrt(2)
    # |0><v| : contract against the eigenvector, park the result at index 0.
    proj = np.outer(np.array([1.0, 0.0], dtype=complex), basis.conj())
    out = state.apply_one(qubit, proj)
    prob = float(np.vdot(out.vector, out.vector).real)
    if prob < _ZERO_PROB:
        return StateVector(out.qubits, np.zeros_like(out.amps)), 0.0
    out.amps /= np.sqrt(prob)
    return out, prob


def apply_pauli(state: StateVector, labels: dict[int, str]) -> StateVector:
    """Apply per-qubit X / Z / XZ operators, as produced by instantiation."""
    for q in sorted(labels):
        state = state.apply_one(q, _LABEL_MATS[labels[q]])
    return state


def stabilizer_deviation(p: Pattern, state: StateVector, qubit: int) -> float:
    """Vector norm of (K_q - 1)|state>; zero when the generator fixes it."""
    word = stabilizer(p, qubit)
    moved = apply_pauli(state, word.instantiate({}))
    return float(np.linalg.norm(moved.vector - state.vector))


def _numeric_angle(p: Pattern, qubit: int) -> float:
    a = p.angles[qubit]
    if isinstance(a, str):
        raise SymbolicAngleError(f"qubit {qubit} has symbolic angle {a!r}; bind it first")
    return float(a)


@dataclass
class BranchResult:
    """One post-selected branch: outcomes, its probability, corrected output.

    A probability of exactly 0.0 marks an impossible branch; its output
    state is the unnormalized zero vector.
    """

    outcomes: dict[int, int]
    probability: float
    output_state: StateVector


def run_branch(p: Pattern, sf: SignalFlow, outcomes, input_states=None) -> BranchResult:
    """Execute one branch: adapted-angle measurements, then corrections.

    Measures in pattern order, flipping each base angle by the compiled
    sign parity evaluated on the outcomes recorded so far, applies the
    instantiated output corrections, and reduces to the output qubits.
    """
    outcomes = dict(outcomes)
    missing = [q for q in p.measured if q not in outcomes]
    if missing:
        raise ValueError(f"branch outcomes missing for measured qubits {missing}")

    adapted = adapt_angles(p, sf)
    state = prepare(p, input_states)
    record: dict[int, int] = {}
    prob = 1.0
    for q in p.measured:
        theta = adapted[q].value(record)
        state, pq = measure(state, q, theta, outcomes[q])
        prob *= pq
        record[q] = outcomes[q]

    labels: dict[int, str] = {}
    for j in p.outputs:
        xbit = sf.output_x[j].evaluate(record)
        zbit = sf.output_z[j].evaluate(record)
        if xbit or zbit:
            labels[j] = ("X", "Z", "XZ")[(zbit << 1 | xbit) - 1]
    state = apply_pauli(state, labels)

    sl = [0] * state.n_qubits
    for j in p.outputs:
        sl[state.axis(j)] = slice(None)
    reduced = state.amps[tuple(sl)]
    return BranchResult(
        outcomes=record,
        probability=prob if prob > _ZERO_PROB else 0.0,
        output_state=StateVector(p.outputs, reduced),
    )


def enumerate_branches(p: Pattern, sf: SignalFlow, input_states=None, cap: int = DEFAULT_BRANCH_CAP):
    """All 2^m outcome branches by post-selection, zero branch first.

    The branch index runs the first-measured qubit as the most significant
    bit. Refuses to enumerate more than 2^cap branches.
    """
    m = len(p.measured)
    if m > cap:
        raise BranchCapError(f"{m} measured qubits exceed the enumeration cap of {cap}")
    results = []
    for bits in itertools.product((0, 1), repeat=m):
        outcomes = dict(zip(p.measured, bits))
        results.append(run_branch(p, sf, outcomes, input_states))
    return results


def max_pairwise_infidelity(results, exact_limit: int = 4096) -> float:
    """Worst disagreement between corrected branch outputs.

    Exact over all pairs up to ``exact_limit`` branches; beyond that the
    zero branch is the reference and the triangle inequality bounds any
    pair by four times the reported value.
    """
    states = [r.output_state.vector for r in results if r.probability > 0.0]
    if len(states) < 2:
        return 0.0
    mat = np.array(states)
    if len(states) <= exact_limit:
        gram = np.abs(mat @ mat.conj().T) ** 2
        return max(0.0, float(np.max(1.0 - gram)))
    overlaps = np.abs(mat @ mat[0].conj()) ** 2
    return max(0.0, float(np.max(1.0 - overlaps)))


def reference_chain_unitary(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """The rotation the five-qubit wire performs on its zero branch.

    With the frozen measurement convention, one wire segment measured at
    angle t (outcome 0) applies H U_z(-t); the wire measured at angles
    (0, alpha, beta, gamma) therefore composes to
    U_x(-gamma) U_z(-beta) U_x(-alpha). Calibrated once against the dense
    oracle and frozen.
    """

    def uz(t):
        return np.array([[1, 0], [0, np.exp(1j * t)]], dtype=complex)

    def ux(t):
        return _H @ uz(t) @ _H

    return ux(-gamma) @ uz(-beta) @ ux(-alpha)


def check_z_substitution(p: Pattern, qubit: int, input_states=None) -> float:
    """Maximum deviation between the two sides of the byproduct substitution.

    Compares the unnormalized outcome-1 projection of a qubit against the
    outcome-0 projection of the run with Z pre-applied to that qubit,
    after aligning global phase. Both sides are equal operators on any
    state, so the deviation is numerical noise.
    """
    if qubit not in p.measured:
        raise InvalidQubitError(f"qubit {qubit} is not measured by the pattern")
    theta = _numeric_angle(p, qubit)

    base = prepare(p, input_states)
    one_branch, p1 = measure(base, qubit, theta, 1)
    v1 = one_branch.vector * np.sqrt(p1)

    flipped = base.apply_one(qubit, _Z)
    zero_branch, p0 = measure(flipped, qubit, theta, 0)
    v0 = zero_branch.vector * np.sqrt(p0)

    if np.linalg.norm(v1) < _ZERO_PROB and np.linalg.norm(v0) < _ZERO_PROB:
        return 0.0
    inner = np.vdot(v0, v1)
    phase = inner / abs(inner) if abs(inner) > _ZERO_PROB else 1.0
    return float(np.max(np.abs(v1 - phase * v0)))
