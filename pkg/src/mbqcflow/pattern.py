"""Measurement patterns on graph states: topology, roles, order, flow.

A pattern's qubit universe is the disjoint union of its measured qubits
and its output qubits; ids are arbitrary non-negative labels (the bundled
examples use 1-based ids). Input qubits are ordinary measured qubits
carrying the role "input": they hold arbitrary states at preparation and
their own stabilizers do not fix the prepared state.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .errors import InvalidQubitError, NoFlowError
from .gf2 import Gf2Expr
from .pauli import PauliWord

__all__ = ["Pattern", "FlowMap", "Violation", "validate", "stabilizer", "find_flow"]

Angle = float | str


@dataclass(frozen=True)
class Violation:
    """One broken pattern rule; data, not an exception."""

    rule: str
    detail: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.detail}"


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Pattern:
    """Immutable measurement pattern.

    ``measured`` is the measurement order. ``angles`` maps each measured
    qubit to its base angle in radians, or to a symbol name for purely
    symbolic compilation. ``flow`` optionally maps each measured qubit to
    the neighbor whose stabilizer cancels its byproduct.
    """

    n_qubits: int
    edges: frozenset[tuple[int, int]]
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    measured: tuple[int, ...]
    angles: dict[int, Angle] = field(default_factory=dict)
    flow: dict[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "edges", frozenset(_norm_edge(int(u), int(v)) for u, v in self.edges)
        )
        object.__setattr__(self, "inputs", tuple(int(q) for q in self.inputs))
        object.__setattr__(self, "outputs", tuple(sorted(int(q) for q in self.outputs)))
        object.__setattr__(self, "measured", tuple(int(q) for q in self.measured))
        object.__setattr__(self, "angles", dict(self.angles))
        if self.flow is not None:
            object.__setattr__(self, "flow", {int(k): int(v) for k, v in self.flow.items()})
        adj: dict[int, set[int]] = {q: set() for q in self.qubits}
        for u, v in self.edges:
            if u in adj and v in adj and u != v:
                adj[u].add(v)
                adj[v].add(u)
        object.__setattr__(self, "_adj", {q: tuple(sorted(n)) for q, n in adj.items()})

    @property
    def qubits(self) -> tuple[int, ...]:
        """The qubit universe: measured and output qubits, ascending."""
        return tuple(sorted(set(self.measured) | set(self.outputs)))

    def neighbors(self, qubit: int) -> tuple[int, ...]:
        try:
            return self._adj[qubit]
        except KeyError:
            raise InvalidQubitError(f"qubit {qubit} is not part of the pattern") from None

    def is_input(self, qubit: int) -> bool:
        return qubit in self.inputs

    def is_output(self, qubit: int) -> bool:
        return qubit in self.outputs

    def measure_position(self, qubit: int) -> int:
        return self.measured.index(qubit)

    def with_flow(self, succ: Mapping[int, int] | "FlowMap") -> "Pattern":
        mapping = succ.succ if isinstance(succ, FlowMap) else dict(succ)
        return replace(self, flow=dict(mapping))

    def bind_angles(self, values: Mapping[str, float]) -> "Pattern":
        """Substitute numeric values for named angle symbols."""
        bound: dict[int, Angle] = {}
        for q, a in self.angles.items():
            if isinstance(a, str) and a in values:
                bound[q] = float(values[a])
            else:
                bound[q] = a
        return replace(self, angles=bound)

    def symbolic_angles(self) -> tuple[str, ...]:
        return tuple(sorted({a for a in self.angles.values() if isinstance(a, str)}))


@dataclass(frozen=True)
class FlowMap:
    """Causal successor map plus a witness layering of the partial order.

    ``depth`` assigns each measured qubit a layer; measuring in ascending
    depth satisfies every ordering constraint the flow induces.
    """

    succ: dict[int, int]
    depth: dict[int, int]

    def measurement_order(self) -> tuple[int, ...]:
        return tuple(sorted(self.depth, key=lambda q: (self.depth[q], q)))


def stabilizer(p: Pattern, qubit: int) -> PauliWord:
    """The graph-state generator of a qubit: X there, Z on every neighbor."""
    if qubit not in p.qubits:
        raise InvalidQubitError(f"qubit {qubit} is not part of the pattern")
    one = Gf2Expr.one()
    return PauliWord(
        frozenset(p.qubits),
        x_exp={qubit: one},
        z_exp={n: one for n in p.neighbors(qubit)},
    )


def validate(p: Pattern) -> list[Violation]:
    """Check every structural rule; returns violations instead of raising."""
    out: list[Violation] = []
    measured_set = set(p.measured)
    output_set = set(p.outputs)
    universe = measured_set | output_set

    if p.n_qubits != len(universe):
        out.append(
            Violation(
                "qubit-count",
                f"n_qubits is {p.n_qubits} but measured+outputs name {len(universe)} qubits",
            )
        )
    if len(p.measured) != len(measured_set):
        dupes = sorted({q for q in p.measured if p.measured.count(q) > 1})
        out.append(Violation("duplicate-measured", f"qubits {dupes} listed more than once"))
    if len(p.outputs) != len(output_set):
        out.append(Violation("duplicate-output", "an output qubit is listed more than once"))
    if len(p.inputs) != len(set(p.inputs)):
        out.append(Violation("duplicate-input", "an input qubit is listed more than once"))
    overlap = sorted(measured_set & output_set)
    for q in overlap:
        out.append(Violation("role-conflict", f"qubit {q} is both measured and an output"))
    for q in p.inputs:
        if q not in measured_set:
            out.append(Violation("input-not-measured", f"input qubit {q} is never measured"))
    for q in universe:
        if q < 0:
            out.append(Violation("negative-qubit", f"qubit id {q} is negative"))

    for u, v in sorted(p.edges):
        if u == v:
            out.append(Violation("self-loop", f"edge {u}-{v} is a self-loop"))
            continue
        for q in (u, v):
            if q not in universe:
                out.append(Violation("edge-endpoint", f"edge {u}-{v} references unknown qubit {q}"))

    for q in sorted(p.angles):
        if q not in measured_set:
            out.append(Violation("angle-unmeasured", f"angle given for unmeasured qubit {q}"))
        elif not isinstance(p.angles[q], (int, float, str)) or isinstance(p.angles[q], bool):
            out.append(Violation("angle-type", f"angle for qubit {q} is neither a number nor a symbol"))
    for q in p.measured:
        if q not in p.angles:
            out.append(Violation("angle-missing", f"measured qubit {q} has no base angle"))

    if p.flow is not None:
        out.extend(_validate_flow(p, measured_set, output_set, universe))
    return out


def _validate_flow(p: Pattern, measured_set, output_set, universe) -> list[Violation]:
    out: list[Violation] = []
    pos = {q: i for i, q in enumerate(p.measured)}
    flow = p.flow or {}

    for q in sorted(flow):
        if q not in measured_set:
            out.append(Violation("flow-domain", f"flow entry for non-measured qubit {q}"))
    for q in p.measured:
        if q not in flow:
            out.append(Violation("flow-missing", f"measured qubit {q} has no successor"))

    targets: dict[int, int] = {}
    for i in sorted(flow):
        if i not in measured_set:
            continue
        s = flow[i]
        if s == i:
            out.append(Violation("flow-self", f"succ({i}) = {i}"))
            continue
        if s not in universe:
            out.append(Violation("flow-adjacency", f"succ({i}) = {s} is not a pattern qubit"))
            continue
        if s not in p.neighbors(i):
            out.append(Violation("flow-adjacency", f"succ({i}) = {s} is not adjacent to {i}"))
            continue
        if s in p.inputs:
            # Only non-input stabilizers fix the prepared state, so an
            # input successor cannot cancel anything soundly.
            out.append(Violation("flow-target-input", f"succ({i}) = {s} is an input qubit"))
        if s in targets:
            out.append(Violation("flow-injective", f"succ({targets[s]}) = succ({i}) = {s}"))
        else:
            targets[s] = i
        if s in measured_set and pos[s] <= pos[i]:
            out.append(Violation("flow-order", f"succ({i}) = {s} is not measured after {i}"))
        for u in p.neighbors(s):
            if u == i or u in output_set:
                continue
            if u in measured_set and pos[u] <= pos[i]:
                out.append(
                    Violation(
                        "flow-neighbor-order",
                        f"qubit {u} neighbors succ({i}) = {s} but is not measured after {i}",
                    )
                )
    return out


def find_flow(p: Pattern) -> FlowMap:
    """Derive a causal successor map from roles and topology alone.

    Reverse search from the outputs: repeatedly take the lowest-id
    already-safe non-input qubit having exactly one unsolved neighbor and
    make it that neighbor's successor. Deterministic; raises
    :class:`NoFlowError` when the search stalls.
    """
    universe = set(p.measured) | set(p.outputs)
    inputs = set(p.inputs)
    solved = set(p.outputs)
    succ: dict[int, int] = {}
    solve_seq: list[int] = []

    while len(solved) < len(universe):
        for v in sorted(solved - inputs):
            unsolved = [u for u in p.neighbors(v) if u not in solved]
            if len(unsolved) == 1 and v not in succ.values():
                u = unsolved[0]
                succ[u] = v
                solved.add(u)
                solve_seq.append(u)
                break
        else:
            stuck = sorted(universe - solved)
            raise NoFlowError(f"no causal successor map exists; unsolved qubits {stuck}")

    m = len(solve_seq)
    depth = {u: m - 1 - i for i, u in enumerate(solve_seq)}
    return FlowMap(succ=succ, depth=depth)
