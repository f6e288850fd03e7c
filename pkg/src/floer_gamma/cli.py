"""Command line interface.

Exit codes: 0 success, 2 validation failure, 3 parse error, 4 missing data,
5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import bounds, engine, lattice, library, model

EXIT_OK, EXIT_VALIDATION, EXIT_PARSE, EXIT_MISSING, EXIT_INTERNAL = 0, 2, 3, 4, 5


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _chain_json(chain: model.Chain | None):
    if chain is None:
        return None
    return [[n, l] for n, l in sorted(chain.terms)]


def _render(payload, fmt: str, rows: list[dict] | None = None) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    rows = rows if rows is not None else [payload]
    buf = io.StringIO()
    fields = list(rows[0]) if rows else []
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
    return buf.getvalue()


def _resolve(args) -> library.ResolvedKnot:
    try:
        ref = library.parse_knot_ref(args.knot, getattr(args, "seifert", None))
    except library.UnknownKnot as exc:
        raise CommandError(EXIT_MISSING, str(exc)) from None
    try:
        return library.resolve(ref, args.fixtures_dir)
    except model.ComplexError as exc:
        code = EXIT_PARSE if exc.code == "syntax" else EXIT_VALIDATION
        raise CommandError(code, f"{args.knot}: {exc}") from None
    except bounds.SeifertError as exc:
        raise CommandError(EXIT_PARSE, f"Seifert data: {exc}") from None
    except FileNotFoundError as exc:
        raise CommandError(EXIT_MISSING, str(exc)) from None


def _trace(c: model.FundamentalComplex) -> engine.SurgeryTrace:
    try:
        return engine.surgery_trace(c)
    except (engine.NonStandardComplex, engine.TowerNotFound) as exc:
        raise CommandError(EXIT_VALIDATION, f"non-standard complex: {exc}") from None
    except engine.ConsistencyError as exc:
        raise CommandError(EXIT_INTERNAL, str(exc)) from None


def cmd_d_invariant(args) -> dict:
    knot = _resolve(args)
    if args.surgery == "+1":
        t = _trace(knot.complex)
        d = t.d
    else:
        t = _trace(engine.mirror(knot.complex))
        d = -t.d
    return {
        "knot": knot.label,
        "surgery": args.surgery,
        "d": d,
        "translate_l_achieving_min": t.translate,
        "grading_trace": [{"translate": l, "nonzero": nz, "grading": g} for l, nz, g in t.trace],
    }


def cmd_bound(args) -> dict:
    knot = _resolve(args)
    if knot.sigma is None:
        raise CommandError(EXIT_MISSING, f"no Seifert matrix for {knot.label}; pass --seifert")
    d_plus = _trace(knot.complex).d
    d_minus = -_trace(engine.mirror(knot.complex)).d
    n = args.n if args.manifold == "ncp2" else 0
    report = bounds.bound_report(knot.label, knot.sigma, d_plus, d_minus, args.manifold, n)
    return {**report.as_dict(), "manifold": args.manifold, "n": n}


def cmd_reproduce_thm3(args) -> tuple[dict, list[dict]]:
    if args.n < 0 or args.k_max < 0:
        raise CommandError(EXIT_VALIDATION, "need n >= 0 and k_max >= 0")
    sigma_942 = bounds.signature(bounds.parse_seifert(_fixture("seifert.txt", args))["9_42"])
    rows = []
    for k in range(1, args.k_max + 1):
        sigma = bounds.signature_connected_sum([sigma_942] * (args.n + k))
        lower = bounds.cp2_bound(sigma, bounds.nine_42_power_d_plus(args.n + k), args.n)
        rows.append({"n": args.n, "k": k, "lower": lower, "upper": k, "equal": lower == k})
    payload = {"n": args.n, "k_max": args.k_max, "rows": rows, "all_equal": all(r["equal"] for r in rows)}
    return payload, rows


def _fixture(name: str, args) -> str:
    from .fixtures import read_fixture

    try:
        return read_fixture(name, args.fixtures_dir)
    except FileNotFoundError as exc:
        raise CommandError(EXIT_MISSING, str(exc)) from None


def cmd_audit(args) -> dict:
    if args.trials < 0:
        raise CommandError(EXIT_VALIDATION, "trials must be nonnegative")
    return lattice.run_audit(args.seed, args.trials)


def cmd_validate(args) -> dict:
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise CommandError(EXIT_MISSING, str(exc)) from None
    try:
        c = model.parse_complex(text)
    except model.ComplexError as exc:
        return {"path": str(path), "valid": False, "standard": False, "error_code": exc.code, "error": str(exc)}
    r = engine.validate_standard(c)
    return {
        "path": str(path),
        "valid": True,
        "standard": r.standard,
        "generators": len(c),
        "arrows": len(c.arrows),
        "homology_dim": r.homology_dim,
        "generator": _chain_json(r.generator),
        "grading": r.grading,
        "column_dim": r.column_dim,
        "column_generator": _chain_json(r.column_generator),
        "column_grading": r.column_grading,
        "row_dim": r.row_dim,
        "row_generator": _chain_json(r.row_generator),
        "row_grading": r.row_grading,
        "problems": list(r.problems),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floer-gamma", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--fixtures-dir", default=None, help="directory holding seifert.txt and *.cfk")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("d-invariant", parents=[common], help="correction term of +1 or -1 surgery")
    p.add_argument("--knot", required=True)
    p.add_argument("--surgery", choices=["+1", "-1"], default="+1")
    p.set_defaults(func=cmd_d_invariant)

    p = sub.add_parser("bound", parents=[common], help="lower bound for the non-orientable genus")
    p.add_argument("--knot", required=True)
    p.add_argument("--seifert", default=None, help="Seifert fixture file for the knot")
    p.add_argument("--manifold", choices=["s4", "ncp2"], default="s4")
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("reproduce-thm3", parents=[common], help="genus table for sums of 9_42")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k-max", type=int, default=3)
    p.set_defaults(func=cmd_reproduce_thm3)

    p = sub.add_parser("audit", parents=[common], help="randomized audit of the lattice arithmetic")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("validate", parents=[common], help="check a complex file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = build_parser().parse_args(argv)
    if args.command in ("d-invariant", "bound"):
        args.seifert = getattr(args, "seifert", None)
    try:
        result = args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    payload, rows = result if isinstance(result, tuple) else (result, None)
    if args.command == "audit" and rows is None:
        rows = [{k: v for k, v in payload.items() if k != "failures"}]
    out.write(_render(payload, args.format, rows))
    if args.command == "reproduce-thm3" and not payload["all_equal"]:
        return EXIT_INTERNAL
    if args.command == "audit" and not payload["passed"]:
        return EXIT_INTERNAL
    if args.command == "validate":
        if not payload["valid"]:
            return EXIT_PARSE if payload["error_code"] == "syntax" else EXIT_VALIDATION
        if not payload["standard"]:
            return EXIT_VALIDATION
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
