"""Shared test utilities: independent oracles and random generators.

The flow oracle enumerates successor maps exhaustively and is kept free
of any code path from mbqcflow.pattern.find_flow so the two can check
each other.
"""

from __future__ import annotations

import itertools

import numpy as np

from mbqcflow import Gf2Expr, Pattern, PauliWord

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
LABEL_MATS = {"I": _I2, "X": _X, "Z": _Z, "XZ": _X @ _Z}


def brute_force_flow(p: Pattern):
    """Exhaustive oracle: any injective successor map with an acyclic
    ordering constraint graph, or None. Exponential; keep n small."""
    measured = sorted(set(p.measured))
    inputs = set(p.inputs)
    if not measured:
        return {}, []
    candidates = []
    for i in measured:
        cands = [v for v in p.neighbors(i) if v != i and v not in inputs]
        if not cands:
            return None
        candidates.append(cands)

    for choice in itertools.product(*candidates):
        if len(set(choice)) != len(choice):
            continue
        succ = dict(zip(measured, choice))
        order = _topological(measured, succ, p)
        if order is not None:
            return succ, order
    return None


def _topological(measured, succ, p):
    after = {i: set() for i in measured}
    mset = set(measured)
    for i in measured:
        s = succ[i]
        if s in mset:
            after[i].add(s)
        for u in p.neighbors(s):
            if u != i and u in mset:
                after[i].add(u)
    indeg = {i: 0 for i in measured}
    for i in measured:
        for j in after[i]:
            indeg[j] += 1
    ready = sorted(q for q in measured if indeg[q] == 0)
    order = []
    while ready:
        q = ready.pop(0)
        order.append(q)
        for j in sorted(after[q]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return order if len(order) == len(measured) else None


def random_connected_edges(rng, n: int) -> set[tuple[int, int]]:
    """Random connected graph on qubits 0..n-1: random tree plus extras."""
    edges = set()
    nodes = list(range(n))
    rng.shuffle(nodes)
    for k in range(1, n):
        other = nodes[rng.integers(0, k)]
        edges.add(tuple(sorted((nodes[k], other))))
    extra = rng.integers(0, n)
    for _ in range(extra):
        u, v = rng.choice(n, size=2, replace=False)
        edges.add(tuple(sorted((int(u), int(v)))))
    return edges


def random_flow_pattern(rng, max_qubits: int = 10) -> Pattern:
    """Random pattern admitting a causal flow: parallel wires plus bridges.

    Wires always admit a flow; bridges may break it, so candidates are
    retried until the exhaustive construction in find_flow succeeds.
    """
    from mbqcflow import NoFlowError, find_flow

    while True:
        n_wires = int(rng.integers(1, 4))
        lengths = []
        budget = int(rng.integers(max(2, 2 * n_wires), max_qubits + 1))
        for w in range(n_wires):
            remaining_wires = n_wires - w - 1
            hi = budget - 2 * remaining_wires
            length = int(rng.integers(2, max(3, hi + 1)))
            length = min(length, hi)
            lengths.append(length)
            budget -= length
        qid = 1
        edges = set()
        inputs, outputs, heads = [], [], []
        wire_qubits = []
        for length in lengths:
            ids = list(range(qid, qid + length))
            qid += length
            wire_qubits.append(ids)
            heads.append(ids[0])
            outputs.append(ids[-1])
            edges.update((ids[k], ids[k + 1]) for k in range(length - 1))
        for h in heads:
            if rng.random() < 0.7:
                inputs.append(h)
        all_ids = [q for ids in wire_qubits for q in ids]
        n_bridges = int(rng.integers(0, 3))
        for _ in range(n_bridges):
            u, v = rng.choice(len(all_ids), size=2, replace=False)
            u, v = all_ids[int(u)], all_ids[int(v)]
            if u != v:
                edges.add(tuple(sorted((u, v))))
        measured = [q for q in all_ids if q not in outputs]
        base = Pattern(
            n_qubits=len(all_ids),
            edges=frozenset(edges),
            inputs=tuple(inputs),
            outputs=tuple(outputs),
            measured=tuple(measured),
            angles={q: 0.0 for q in measured},
        )
        try:
            flow = find_flow(base)
        except NoFlowError:
            continue
        order = flow.measurement_order()
        angles = {q: float(rng.uniform(-np.pi, np.pi)) for q in order}
        return Pattern(
            n_qubits=base.n_qubits,
            edges=base.edges,
            inputs=base.inputs,
            outputs=base.outputs,
            measured=order,
            angles=angles,
            flow=dict(flow.succ),
        )


def random_input_states(rng, p: Pattern) -> dict[int, tuple[complex, complex]]:
    states = {}
    for q in p.inputs:
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v = v / np.linalg.norm(v)
        states[q] = (complex(v[0]), complex(v[1]))
    return states


def random_expr(rng, pool) -> Gf2Expr:
    vars_ = [q for q in pool if rng.random() < 0.4]
    return Gf2Expr.of(vars_, const=int(rng.integers(0, 2)))


def random_word(rng, qubits) -> PauliWord:
    qubits = frozenset(qubits)
    pool = sorted(qubits)
    x = {q: random_expr(rng, pool) for q in pool if rng.random() < 0.5}
    z = {q: random_expr(rng, pool) for q in pool if rng.random() < 0.5}
    return PauliWord(qubits, x, z)


def labels_to_matrix(labels: dict[int, str], qubits) -> np.ndarray:
    """Dense operator for per-qubit labels, axes ascending by qubit id."""
    mat = np.ones((1, 1), dtype=complex)
    for q in sorted(qubits):
        mat = np.kron(mat, LABEL_MATS[labels.get(q, "I")])
    return mat


def random_state_vector(rng, nq: int) -> np.ndarray:
    v = rng.normal(size=2**nq) + 1j * rng.normal(size=2**nq)
    return v / np.linalg.norm(v)


def phase_aligned_equal(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> bool:
    """Operator/vector equality up to one global complex unit."""
    a = np.asarray(a).reshape(-1)
    b = np.asarray(b).reshape(-1)
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na < tol or nb < tol:
        return na < tol and nb < tol
    inner = np.vdot(a, b)
    if abs(inner) < tol:
        return False
    phase = inner / abs(inner)
    return bool(np.max(np.abs(b - phase * a)) <= tol * max(1.0, nb))
