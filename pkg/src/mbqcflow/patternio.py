"""Pattern document format: strict JSON with a fixed field set.

Unknown fields are rejected rather than ignored; a typo in a role list
would otherwise compile into a plausible but wrong signal flow. Map keys
are qubit ids rendered as decimal strings (JSON object keys are strings).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import PatternFormatError
from .pattern import Pattern

__all__ = ["PatternDocument", "parse_document", "render_document", "load_document"]

_FIELDS = {"n_qubits", "edges", "inputs", "outputs", "measured", "angles", "flow", "input_states"}
_REQUIRED = {"n_qubits", "edges", "inputs", "outputs", "measured", "angles"}


@dataclass
class PatternDocument:
    """A pattern plus optional per-input state amplitudes."""

    pattern: Pattern
    input_states: dict[int, tuple[complex, complex]] | None = None


def _fail(msg: str):
    raise PatternFormatError(msg)


def _as_qubit(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{where}: qubit ids must be integers, got {value!r}")
    if value < 0:
        _fail(f"{where}: qubit ids must be non-negative, got {value}")
    return value


def _key_qubit(key, where: str) -> int:
    if not isinstance(key, str) or not key.lstrip("-").isdigit():
        _fail(f"{where}: map keys must be decimal qubit ids, got {key!r}")
    return _as_qubit(int(key), where)


def _qubit_list(value, where: str) -> list[int]:
    if not isinstance(value, list):
        _fail(f"{where} must be a list")
    return [_as_qubit(q, where) for q in value]


def parse_document(text: str) -> PatternDocument:
    """Parse and schema-check a pattern document; semantic validation is
    a separate step (:func:`mbqcflow.pattern.validate`)."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PatternFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        _fail("document root must be an object")

    unknown = sorted(set(raw) - _FIELDS)
    if unknown:
        _fail(f"unknown fields {unknown}")
    missing = sorted(_REQUIRED - set(raw))
    if missing:
        _fail(f"missing required fields {missing}")

    n_qubits = raw["n_qubits"]
    if isinstance(n_qubits, bool) or not isinstance(n_qubits, int) or n_qubits < 0:
        _fail(f"n_qubits must be a non-negative integer, got {n_qubits!r}")

    if not isinstance(raw["edges"], list):
        _fail("edges must be a list of qubit pairs")
    edges = []
    for e in raw["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            _fail(f"edges entries must be pairs, got {e!r}")
        edges.append((_as_qubit(e[0], "edges"), _as_qubit(e[1], "edges")))

    inputs = _qubit_list(raw["inputs"], "inputs")
    outputs = _qubit_list(raw["outputs"], "outputs")
    measured = _qubit_list(raw["measured"], "measured")

    if not isinstance(raw["angles"], dict):
        _fail("angles must be a map of qubit id to angle")
    angles: dict[int, float | str] = {}
    for key, value in raw["angles"].items():
        q = _key_qubit(key, "angles")
        if isinstance(value, bool):
            _fail(f"angles[{key}]: booleans are not angles")
        elif isinstance(value, (int, float)):
            angles[q] = float(value)
        elif isinstance(value, str) and value:
            angles[q] = value
        else:
            _fail(f"angles[{key}] must be a number (radians) or a symbol name, got {value!r}")

    flow = None
    if "flow" in raw:
        if not isinstance(raw["flow"], dict):
            _fail("flow must be a map of qubit id to successor id")
        flow = {_key_qubit(k, "flow"): _as_qubit(v, "flow") for k, v in raw["flow"].items()}

    input_states = None
    if "input_states" in raw:
        if not isinstance(raw["input_states"], dict):
            _fail("input_states must be a map of qubit id to 4 reals")
        input_states = {}
        for key, value in raw["input_states"].items():
            q = _key_qubit(key, "input_states")
            if (
                not isinstance(value, list)
                or len(value) != 4
                or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in value)
            ):
                _fail(f"input_states[{key}] must be [a_re, a_im, b_re, b_im]")
            input_states[q] = (complex(value[0], value[1]), complex(value[2], value[3]))

    pattern = Pattern(
        n_qubits=n_qubits,
        edges=frozenset(edges),
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        measured=tuple(measured),
        angles=angles,
        flow=flow,
    )
    return PatternDocument(pattern=pattern, input_states=input_states)


def render_document(doc: PatternDocument) -> str:
    """Canonical serialization; parse/render round-trips losslessly."""
    p = doc.pattern
    raw: dict = {
        "n_qubits": p.n_qubits,
        "edges": [list(e) for e in sorted(p.edges)],
        "inputs": list(p.inputs),
        "outputs": list(p.outputs),
        "measured": list(p.measured),
        "angles": {str(q): p.angles[q] for q in sorted(p.angles)},
    }
    if p.flow is not None:
        raw["flow"] = {str(q): p.flow[q] for q in sorted(p.flow)}
    if doc.input_states is not None:
        raw["input_states"] = {
            str(q): [a.real, a.imag, b.real, b.imag]
            for q, (a, b) in sorted(doc.input_states.items())
        }
    return json.dumps(raw, indent=2, sort_keys=True) + "\n"


def load_document(path) -> PatternDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())
