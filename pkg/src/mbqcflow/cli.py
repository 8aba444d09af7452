"""Command-line front end: compile, verify, and inspect pattern files.

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage or parse
error, 3 validation error, 4 no causal flow. All report output is
byte-deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compiler import adapt_angles, eliminate
from .errors import (
    BranchCapError,
    EliminationError,
    InvalidQubitError,
    MbqcflowError,
    NoFlowError,
    NormalizationError,
    PatternFormatError,
    PatternValidationError,
    SymbolicAngleError,
)
from .pattern import Pattern, find_flow, stabilizer, validate
from .patternio import load_document
from .simulator import DEFAULT_BRANCH_CAP, STATE_TOL, enumerate_branches, max_pairwise_infidelity

__all__ = [
    "main",
    "entry",
    "render_flow_text",
    "render_flow_json",
    "render_verify_report",
    "stabilizer_text",
]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_NO_FLOW = 4


def _exp_suffix(e) -> str:
    if e.is_one:
        return ""
    return f"^{e}" if e.term_count == 1 else f"^({e})"


def stabilizer_text(p: Pattern, qubit: int) -> str:
    """The generator in its conventional form: X first, then Z neighbors."""
    parts = [f"X{qubit}"] + [f"Z{n}" for n in p.neighbors(qubit)]
    return " ".join(parts)


def _correction_str(qubit: int, x, z) -> str:
    parts = []
    if not x.is_zero:
        parts.append(f"X{qubit}{_exp_suffix(x)}")
    if not z.is_zero:
        parts.append(f"Z{qubit}{_exp_suffix(z)}")
    return " ".join(parts) if parts else "I"


def render_flow_text(p: Pattern, succ: dict[int, int], sf, adapted) -> str:
    lines = [
        f"qubits: {len(p.qubits)} (measured {len(p.measured)}, outputs {len(p.outputs)})",
        "measurement order: " + " ".join(str(q) for q in p.measured),
        "flow: " + " ".join(f"{i}->{succ[i]}" for i in sorted(succ)),
        "angle signs:",
    ]
    for q in p.measured:
        lines.append(f"  qubit {q}: {sf.angle_sign[q]}")
    lines.append("adapted angles:")
    for q in p.measured:
        lines.append(f"  qubit {q}: {adapted[q]}")
    lines.append("output corrections:")
    for j in p.outputs:
        lines.append(f"  qubit {j}: {_correction_str(j, sf.output_x[j], sf.output_z[j])}")
    lines.append("stabilizer trace:")
    for q, e in sf.trace:
        lines.append(f"  K{q}{_exp_suffix(e)}")
    return "\n".join(lines) + "\n"


def render_flow_json(p: Pattern, succ: dict[int, int], sf, adapted) -> str:
    doc = {
        "measurement_order": list(p.measured),
        "outputs": list(p.outputs),
        "flow": {str(i): succ[i] for i in sorted(succ)},
        "angle_signs": {str(q): sf.angle_sign[q].as_dict() for q in p.measured},
        "adapted_angles": {
            str(q): {"base": adapted[q].base, "sign": adapted[q].sign.as_dict()}
            for q in p.measured
        },
        "output_corrections": {
            str(j): {"x": sf.output_x[j].as_dict(), "z": sf.output_z[j].as_dict()}
            for j in p.outputs
        },
        "trace": [{"qubit": q, "exponent": e.as_dict()} for q, e in sf.trace],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_verify_report(p: Pattern, results, tol: float = STATE_TOL) -> tuple[str, bool]:
    """Format the branch table and verdict; pure so the FAIL path is testable."""
    lines = [f"branches: {len(results)}"]
    zero = results[0].output_state.vector if results else None
    for r in results:
        key = "".join(str(r.outcomes[q]) for q in p.measured)
        if r.probability > 0.0:
            infid = max(0.0, 1.0 - float(abs(zero.conj() @ r.output_state.vector) ** 2))
            detail = f"infidelity vs zero branch {infid:.3e}"
        else:
            detail = "impossible branch"
        lines.append(f"branch {key or '-'}: probability {r.probability:.10f}, {detail}")
    total = sum(r.probability for r in results)
    lines.append(f"probability sum: {total:.10f}")
    worst = max_pairwise_infidelity(results)
    lines.append(f"max pairwise infidelity: {worst:.3e}")
    passed = worst <= tol and abs(total - 1.0) <= 1e-9
    lines.append(f"result: {'PASS' if passed else 'FAIL'} (tolerance {tol:g})")
    return "\n".join(lines) + "\n", passed


def _load(path: str):
    try:
        return load_document(path)
    except FileNotFoundError:
        raise PatternFormatError(f"no such file: {path}") from None
    except OSError as exc:
        raise PatternFormatError(f"cannot read {path}: {exc}") from exc


def _resolve_flow(p: Pattern) -> tuple[Pattern, dict[int, int]]:
    """Attach a flow (the file's own, or a derived one) and validate fully."""
    if p.flow is None:
        base_violations = validate(p)
        if base_violations:
            raise PatternValidationError(base_violations)
        full = p.with_flow(find_flow(p).succ)
    else:
        full = p
    violations = validate(full)
    if violations:
        raise PatternValidationError(violations)
    return full, dict(full.flow or {})


def _parse_angle_bindings(raw: str | None) -> dict[str, float]:
    if not raw:
        return {}
    bindings = {}
    for item in raw.split(","):
        name, eq, value = item.partition("=")
        if not eq or not name:
            raise PatternFormatError(f"bad angle binding {item!r}; expected name=value")
        try:
            bindings[name.strip()] = float(value)
        except ValueError:
            raise PatternFormatError(f"angle value for {name!r} is not a number: {value!r}") from None
    return bindings


def _parse_input_overrides(items) -> dict[int, tuple[complex, complex]]:
    states = {}
    for item in items or []:
        qpart, eq, rest = item.partition("=")
        parts = rest.split(",")
        if not eq or not qpart.strip().isdigit() or len(parts) != 4:
            raise PatternFormatError(
                f"bad input state {item!r}; expected q=a_re,a_im,b_re,b_im"
            )
        try:
            vals = [float(x) for x in parts]
        except ValueError:
            raise PatternFormatError(f"input state for qubit {qpart} has non-numeric entries") from None
        states[int(qpart)] = (complex(vals[0], vals[1]), complex(vals[2], vals[3]))
    return states


def cmd_flow(args) -> int:
    doc = _load(args.file)
    full, succ = _resolve_flow(doc.pattern)
    sf = eliminate(full, check=False)
    adapted = adapt_angles(full, sf)
    render = render_flow_json if args.format == "json" else render_flow_text
    sys.stdout.write(render(full, succ, sf, adapted))
    return EXIT_OK


def cmd_stabilizers(args) -> int:
    doc = _load(args.file)
    violations = [v for v in validate(doc.pattern) if not v.rule.startswith("flow")]
    if violations:
        raise PatternValidationError(violations)
    for q in doc.pattern.qubits:
        sys.stdout.write(f"K{q} = {stabilizer_text(doc.pattern, q)}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _load(args.file)
    bindings = _parse_angle_bindings(args.angles)
    p = doc.pattern.bind_angles(bindings)
    unbound = p.symbolic_angles()
    if unbound:
        raise PatternFormatError(
            "numeric angles required; unbound symbols: " + ", ".join(unbound)
        )
    full, _succ = _resolve_flow(p)
    sf = eliminate(full, check=False)

    input_states = dict(doc.input_states or {})
    input_states.update(_parse_input_overrides(args.input))

    results = enumerate_branches(full, sf, input_states or None, cap=args.cap)
    report, passed = render_verify_report(full, results)
    sys.stdout.write(report)
    return EXIT_OK if passed else EXIT_FAIL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbqcflow",
        description="Compile and verify classical signal flow of measurement patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_flow = sub.add_parser("flow", help="compile a pattern's signal flow")
    p_flow.add_argument("file")
    p_flow.add_argument("--format", choices=("text", "json"), default="text")
    p_flow.set_defaults(func=cmd_flow)

    p_verify = sub.add_parser("verify", help="enumerate all branches and certify determinism")
    p_verify.add_argument("file")
    p_verify.add_argument("--angles", help="bind angle symbols, e.g. alpha=0.3,beta=1.1")
    p_verify.add_argument(
        "--input",
        action="append",
        help="input state per qubit as q=a_re,a_im,b_re,b_im (repeatable)",
    )
    p_verify.add_argument("--cap", type=int, default=DEFAULT_BRANCH_CAP)
    p_verify.set_defaults(func=cmd_verify)

    p_stab = sub.add_parser("stabilizers", help="list the graph-state generators")
    p_stab.add_argument("file")
    p_stab.set_defaults(func=cmd_stabilizers)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PatternFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NormalizationError, SymbolicAngleError, BranchCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PatternValidationError as exc:
        print("validation error:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_VALIDATION
    except (EliminationError, InvalidQubitError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NoFlowError as exc:
        print(f"no-flow error: {exc}", file=sys.stderr)
        return EXIT_NO_FLOW
    except MbqcflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
