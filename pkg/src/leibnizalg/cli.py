"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input/usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .core import Side, first_nonzero, leibniz_residual
from .document import parse_algebra, parse_rmatrix
from .errors import ChiralityError, LeibnizError, ParseError
from .report import (
    actions_section,
    adjoint_section,
    build_report,
    chirality_section,
    duals_section,
    matrix_json,
    rational_str,
    render_json,
    tensor_json,
)
from .rmatrix import (
    coboundary_case,
    coboundary_cocommutator,
    cybe_check,
    gybe_residual,
    is_antisymmetric_matrix,
    schouten,
    solve_rmatrix,
)
from .solver import SCENARIOS, scenario, scenario_sweep

OK, FAIL, BAD_INPUT = 0, 1, 2


class _Verification(Exception):
    """Declared property of the input does not hold."""


def _load_algebra(path: str):
    raw = Path(path).read_bytes()
    doc = parse_algebra(raw.decode("utf-8"))
    try:
        alg = doc.algebra()
    except ChiralityError as exc:
        raise _Verification(str(exc)) from None
    return doc, alg, raw


def _load_rmatrix(path: str, dim: int):
    doc = parse_rmatrix(Path(path).read_text("utf-8"))
    if doc.dim != dim:
        raise ParseError(
            f"r-matrix dimension {doc.dim} does not match algebra dimension {dim}"
        )
    return doc.matrix()


def _side(arg: str) -> Side:
    key = arg.lower()
    if key in ("l", "left"):
        return Side.LEFT
    if key in ("r", "right"):
        return Side.RIGHT
    raise ParseError(f"bad side {arg!r}; want l|r|left|right")


def _emit(payload, fmt: str, text_lines):
    if fmt == "json":
        sys.stdout.write(render_json(payload))
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _cmd_check(args) -> int:
    doc, alg, _ = _load_algebra(args.file)
    section = chirality_section(alg)
    lines = [f"chirality: {section['chirality']}"]
    for w in section["witnesses"]:
        comp = ",".join(str(x) for x in w["component"])
        lines.append(f"defect {w['check']} at ({comp}) = {w['value']}")
    _emit(section, args.format, lines)
    if doc.declared_side == "auto" and section["chirality"] == "neither":
        return FAIL
    return OK


def _cmd_adjoint(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    section = adjoint_section(alg)
    lines = []
    for label in ("first_slot", "second_slot", "output_slot"):
        for idx, m in enumerate(section[label], start=1):
            lines.append(f"{label}[{idx}]:")
            lines.extend("  [" + ", ".join(row) + "]" for row in m)
    _emit(section, args.format, lines)
    return OK


def _cmd_actions(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    section = actions_section(alg)
    lines = []
    failed = False
    for case, axioms in section.items():
        for label, verdict in axioms.items():
            lines.append(f"{case} {label}: {verdict}")
            failed = failed or verdict != "pass"
    _emit(section, args.format, lines)
    return FAIL if failed else OK


def _cmd_duals(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    if args.scenario != "all":
        sc = scenario(args.scenario)
        sc.require(alg)
        wanted = {sc.key}
    else:
        wanted = None
    section = {
        k: v for k, v in duals_section(alg).items() if wanted is None or k in wanted
    }
    lines = []
    for key, entry in section.items():
        lines.append(
            f"{key}: kernel dimension {entry['kernel_dimension']}, "
            f"dual side {entry['dual_side']}, quadratic identically zero: "
            f"{entry['quadratic_identically_zero']}"
        )
        for b, tensor in enumerate(entry["basis"]):
            terms = " ".join(f"({i},{j},{k})={v}" for i, j, k, v in tensor)
            lines.append(f"  {entry['parameters'][b]}: {terms}")
    _emit(section, args.format, lines)
    return OK


def _cmd_rmatrix(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    dual_doc = parse_algebra(Path(args.dual).read_text("utf-8"))
    if dual_doc.dim != alg.dim:
        raise ParseError("dual tensor dimension does not match the algebra")
    case = coboundary_case(args.case)
    family = solve_rmatrix(alg, dual_doc.tensor(), case)
    if family is None:
        _emit(
            {"case": case.value, "solvable": False},
            args.format,
            [f"case {case.value}: infeasible (no r-matrix reproduces this dual)"],
        )
        return FAIL
    payload = {
        "case": case.value,
        "solvable": True,
        "particular": matrix_json(family.particular),
        "kernel": [matrix_json(m) for m in family.kernel],
        "parameters": list(family.parameters),
    }
    lines = [f"case {case.value}: affine family with {family.dimension} parameters"]
    lines.append("particular:")
    lines.extend("  [" + ", ".join(row) + "]" for row in payload["particular"])
    for name, m in zip(family.parameters, payload["kernel"]):
        lines.append(f"{name}:")
        lines.extend("  [" + ", ".join(row) + "]" for row in m)
    _emit(payload, args.format, lines)
    return OK


def _cmd_coboundary(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    r = _load_rmatrix(args.r, alg.dim)
    case = coboundary_case(args.case)
    ftilde = coboundary_cocommutator(alg, r, case)
    from .core import classify

    payload = {
        "case": case.value,
        "dual_tensor": tensor_json(ftilde),
        "dual_chirality": classify(ftilde).value,
        "r_antisymmetric": is_antisymmetric_matrix(r),
    }
    lines = [
        "dual tensor: "
        + (" ".join(f"({i},{j},{k})={v}" for i, j, k, v in payload["dual_tensor"]) or "0"),
        f"dual chirality: {payload['dual_chirality']}",
        f"r antisymmetric: {payload['r_antisymmetric']}",
    ]
    _emit(payload, args.format, lines)
    return OK


def _cmd_ybe(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    r = _load_rmatrix(args.r, alg.dim)
    side = _side(args.side)
    ok = cybe_check(alg, r, side)
    payload = {
        "side": side.value,
        "cybe": "satisfied" if ok else "violated",
        "r_antisymmetric": is_antisymmetric_matrix(r),
    }
    _emit(payload, args.format, [f"CYBE: {payload['cybe']}"])
    return OK if ok else FAIL


def _cmd_gybe(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    r = _load_rmatrix(args.r, alg.dim)
    side = _side(args.side)
    res = gybe_residual(alg, r, side)
    ok = all(v == 0 for a in res for b in a for c in b for v in c)
    payload = {"side": side.value, "gybe": "satisfied" if ok else "violated"}
    _emit(payload, args.format, [f"GYBE: {payload['gybe']}"])
    return OK if ok else FAIL


def _cmd_schouten(args) -> int:
    _, alg, _ = _load_algebra(args.file)
    r = _load_rmatrix(args.r, alg.dim)
    side = _side(args.side)
    s = schouten(alg, r, side)
    n = alg.dim
    entries = [
        [m + 1, p + 1, q + 1, rational_str(s.entries[m][p][q])]
        for m in range(n)
        for p in range(n)
        for q in range(n)
        if s.entries[m][p][q] != 0
    ]
    payload = {
        "side": side.value,
        "entries": entries,
        "zero": s.is_zero(),
        "r_antisymmetric": is_antisymmetric_matrix(r),
    }
    lines = (
        ["schouten: 0"]
        if s.is_zero()
        else ["schouten: " + " ".join(f"({a},{b},{c})={v}" for a, b, c, v in entries)]
    )
    _emit(payload, args.format, lines)
    return OK


def _cmd_report(args) -> int:
    doc, alg, raw = _load_algebra(args.file)
    payload = build_report(doc, alg, raw, args.seed)
    sys.stdout.write(render_json(payload))
    return FAIL if payload["check"]["chirality"] == "neither" else OK


def _cmd_corpus(args) -> int:
    if not args.name:
        for name in corpus_mod.names():
            sys.stdout.write(name + "\n")
        return OK
    try:
        text = corpus_mod.text(args.name)
    except KeyError as exc:
        raise ParseError(str(exc)) from None
    if args.dest:
        dest = Path(args.dest)
        dest.mkdir(parents=True, exist_ok=True)
        target = dest / f"{args.name}.leib"
        target.write_text(text, "utf-8")
        sys.stdout.write(str(target) + "\n")
    else:
        sys.stdout.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibnizalg",
        description="Exact verification toolkit for Leibniz algebras, their "
        "dual (bialgebra) structures and classical r-matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="algebra definition file")
        p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("check", help="classify the bracket and verify the declared side")
    common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("adjoint", help="print the adjoint slice matrices")
    common(p)
    p.set_defaults(fn=_cmd_adjoint)

    p = sub.add_parser("actions", help="verify the module axioms per action case")
    common(p)
    p.set_defaults(fn=_cmd_actions)

    p = sub.add_parser("duals", help="solve the dual-structure scenarios")
    common(p)
    p.add_argument(
        "--scenario",
        default="all",
        help="scenario key (" + ", ".join(sc.key for sc in SCENARIOS) + ") or 'all'",
    )
    p.set_defaults(fn=_cmd_duals)

    p = sub.add_parser("rmatrix", help="recover r-matrices for a given dual tensor")
    common(p)
    p.add_argument("--case", required=True, help="coboundary case (right1|left1|right4|left4)")
    p.add_argument("--dual", required=True, help="dual tensor definition file")
    p.set_defaults(fn=_cmd_rmatrix)

    p = sub.add_parser("coboundary", help="cocommutator induced by an r-matrix")
    common(p)
    p.add_argument("--case", required=True)
    p.add_argument("--r", required=True, help="r-matrix definition file")
    p.set_defaults(fn=_cmd_coboundary)

    p = sub.add_parser("ybe", help="classical Yang-Baxter check")
    common(p)
    p.add_argument("--side", required=True, help="l|r")
    p.add_argument("--r", required=True)
    p.set_defaults(fn=_cmd_ybe)

    p = sub.add_parser("gybe", help="generalized Yang-Baxter check")
    common(p)
    p.add_argument("--side", required=True)
    p.add_argument("--r", required=True)
    p.set_defaults(fn=_cmd_gybe)

    p = sub.add_parser("schouten", help="Schouten bracket of an r-matrix with itself")
    common(p)
    p.add_argument("--side", required=True)
    p.add_argument("--r", required=True)
    p.set_defaults(fn=_cmd_schouten)

    p = sub.add_parser("report", help="run everything and emit the JSON report")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_report)

    p = sub.add_parser("corpus", help="list or extract the bundled examples")
    p.add_argument("name", nargs="?", default="")
    p.add_argument("--dest", default="", help="directory to extract into")
    p.set_defaults(fn=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else BAD_INPUT
    try:
        return args.fn(args)
    except _Verification as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAIL
    except (LeibnizError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
