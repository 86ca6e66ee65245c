"""Command-line front end.

Exit codes: 0 when every claim checked holds, 1 when a check produced a
counterexample, 2 for bad input, 3 for an internal contract violation or
an exhausted resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Optional, Sequence

from .binalg import (
    BasisSet,
    buchberger_close,
    groebner_witness,
    load_basis,
    minimality_violation,
    reduced_basis,
    to_lines,
)
from .closedform import Kind, assemble
from .errors import ContractViolation, CurveGBError, InputError, ParseError, ResourceLimit
from .ladder import grid_point, normal_form_ladder, state_monomial
from .order import Monomial, OrderSpec, ascending, descending, parse, render
from .semigroup import CurveInput, compute_parameters, validate_input
from .sweep import almost_arithmetic_instances, odd_shift_instances, odd_shift_report, verify_instance
from .toric import defining_ideal_gb

SCHEMA = 1
EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

_GREEK = {"upsilon": "υ", "lambda": "λ", "mu": "μ", "nu": "ν", "epsilon": "ε",
          "q_prime": "q′", "r_prime": "r′"}


def max_basis_size() -> Optional[int]:
    raw = os.environ.get("CURVE_GB_MAX_BASIS")
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"CURVE_GB_MAX_BASIS must be an integer, got {raw!r}")
    if value <= 0:
        raise InputError("CURVE_GB_MAX_BASIS must be positive")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ParseError(f"expected a range like 5..25, got {text!r}")


def _curve(args) -> CurveInput:
    return validate_input(_int_list(args.arith), args.mn)


def _spec(curve: CurveInput, order: str) -> OrderSpec:
    return ascending(curve.weights) if order == "asc" else descending(curve.weights)


def _input_echo(curve: CurveInput) -> dict:
    return {"arith": list(curve.m), "mn": curve.mn}


def _format_params(d: dict) -> str:
    order = ["u", "upsilon", "w", "z", "lambda", "mu", "nu", "q", "r", "q_prime", "r_prime",
             "q_z", "r_z", "epsilon", "g_u", "g_z"]
    parts = [f"{_GREEK.get(k, k)}={d[k]}" for k in order if k in d]
    for name in ("I", "J"):
        members = d[name]
        parts.append(f"{name}=" + ("∅" if not members else "{" + ",".join(map(str, members)) + "}"))
    return " ".join(parts)


def _witness_dict(basis: BasisSet, w) -> dict:
    return {
        "pair": [basis.label(w.i), basis.label(w.j)],
        "spoly": w.spoly.render(),
        "remainder": w.remainder.render(),
    }


# ---------------------------------------------------------------------------
# commands; each returns (exit code, report dict, human-readable lines)

def cmd_params(args):
    curve = _curve(args)
    params = compute_parameters(curve)
    d = params.as_dict()
    report = {"input": _input_echo(curve), "parameters": d}
    return EXIT_OK, report, [f"{curve}: {_format_params(d)}"]


def _named(args):
    curve = _curve(args)
    params = compute_parameters(curve)
    named = assemble(params, Kind(args.kind), _spec(curve, args.order))
    return curve, params, named.basis


def cmd_basis(args):
    curve, params, basis = _named(args)
    lines = to_lines(basis)
    report = {"input": _input_echo(curve), "parameters": params.as_dict(),
              "basis": {"kind": args.kind, "order": args.order, "size": len(basis),
                        "elements": lines}}
    return EXIT_OK, report, lines


def cmd_check(args):
    curve, params, basis = _named(args)
    witness = groebner_witness(basis)
    result = {"kind": args.kind, "order": args.order, "size": len(basis),
              "is_groebner": witness is None}
    if witness is not None:
        result["witness"] = _witness_dict(basis, witness)
        text = [f"NOT_GB witness S({basis.label(witness.i)}, {basis.label(witness.j)})"
                f" = {witness.spoly.render()} -> {witness.remainder.render()}"]
        code = EXIT_COUNTEREXAMPLE
    else:
        v = minimality_violation(basis, check=False)
        result["is_minimal"] = v is None
        if v is None:
            text = ["GB MINIMAL"]
        else:
            result["minimality_violation"] = [basis.label(v.divisor), basis.label(v.multiple)]
            text = [f"GB NOT_MINIMAL lead of {basis.label(v.divisor)} divides lead of "
                    f"{basis.label(v.multiple)}"]
        code = EXIT_OK
    report = {"input": _input_echo(curve), "parameters": params.as_dict(), "results": [result]}
    return code, report, text


def cmd_compare(args):
    curve = _curve(args)
    params = compute_parameters(curve)
    spec = ascending(curve.weights)
    cap = max_basis_size()
    if args.basis_file:
        with open(args.basis_file, encoding="utf-8") as fh:
            candidate = load_basis(fh.read(), spec)
        source = args.basis_file
    else:
        candidate = assemble(params, Kind(args.kind), spec).basis
        source = args.kind
    ours = reduced_basis(buchberger_close(candidate, max_size=cap), check=False)
    oracle = defining_ideal_gb(curve, max_size=cap)
    mine, theirs = to_lines(ours), to_lines(oracle)
    equal = mine == theirs
    result = {"source": source, "size": len(ours), "oracle_size": len(oracle), "equal": equal}
    if equal:
        text = [f"EQUAL ({len(ours)} elements)"]
    else:
        mismatch = _first_mismatch(ours, oracle)
        result["first_mismatch"] = mismatch
        text = [f"DIFFER first mismatch: {mismatch['element']} (only in {mismatch['only_in']})"]
    report = {"input": _input_echo(curve), "parameters": params.as_dict(), "comparison": result}
    return (EXIT_OK if equal else EXIT_COUNTEREXAMPLE), report, text


def _first_mismatch(ours: BasisSet, oracle: BasisSet) -> dict:
    spec = ours.spec
    key = lambda f: (spec.key(f.lead), spec.key(f.tail))
    a = sorted(ours.elements, key=key, reverse=True)
    b = sorted(oracle.elements, key=key, reverse=True)
    for k in range(max(len(a), len(b))):
        x = a[k] if k < len(a) else None
        y = b[k] if k < len(b) else None
        if x != y:
            # report whichever of the two is larger in the order
            if y is None or (x is not None and key(x) > key(y)):
                return {"index": k, "element": x.render(), "only_in": "candidate"}
            return {"index": k, "element": y.render(), "only_in": "oracle"}
    raise ContractViolation("bases differ but no mismatch was found")


def _instances(args) -> list[CurveInput]:
    if args.family == "odd-shift":
        lo, hi = _range(args.m0)
        return list(odd_shift_instances(lo, hi))
    return list(almost_arithmetic_instances(args.max_m0, args.max_p, args.max_mn,
                                            max_step=args.max_step, min_m0=args.min_m0))


def _sweep_one(curve: CurveInput, family: str, ladder: int, pairs: int, seed: int, cap):
    if family == "odd-shift":
        return odd_shift_report(curve)
    return verify_instance(curve, ladder_samples=ladder, pair_samples=pairs, seed=seed, max_size=cap)


def cmd_sweep(args):
    if args.family is None and not args.all:
        raise InputError("sweep needs --family odd-shift or --all")
    family = args.family or "all"
    curves = _instances(args)
    work = partial(_sweep_one, family=family, ladder=args.ladder_samples, pairs=args.pair_samples,
                   seed=args.seed, cap=max_basis_size())
    if args.jobs > 1 and len(curves) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(work, curves, chunksize=8))
    else:
        reports = [work(c) for c in curves]
    failed = [r for r in reports if not r.ok]
    summary = {"family": family, "instances": len(reports), "failures": len(failed)}
    report = {"summary": summary, "results": [r.as_dict() for r in reports]}
    text = []
    for r in reports:
        if args.verbose or not r.ok:
            status = "ok" if r.ok else "FAIL " + "; ".join(r.failures)
            text.append(f"{r.curve}: {status}")
    text.append(f"{len(reports)} instances, {len(failed)} failures")
    return (EXIT_OK if not failed else EXIT_COUNTEREXAMPLE), report, text


def cmd_nf(args):
    curve = _curve(args)
    params = compute_parameters(curve)
    alpha = parse(args.monomial, curve.n + 1)
    if args.engine == "ladder":
        state = normal_form_ladder(params, alpha)
        result_mono = state_monomial(params, state)
        trace = list(state.trace)
        extra = {"state": {"h": state.h, "s": state.s, "l": state.l, "d": state.d},
                 "grid_point": list(grid_point(params, state))}
    else:
        basis = assemble(params, Kind.PHI).basis
        result_mono, trace = _generic_trace(alpha, basis)
        extra = {}
    result = {"engine": args.engine, "monomial": render(alpha), "normal_form": render(result_mono),
              "trace": trace, **extra}
    line = render(result_mono)
    if args.explain:
        line += " [" + ", ".join(trace) + "]"
    report = {"input": _input_echo(curve), "results": [result]}
    return EXIT_OK, report, [line]


def _generic_trace(m: Monomial, basis: BasisSet):
    """Division by the first applicable element, recording its label."""
    trace = []
    while True:
        for k, f in enumerate(basis.elements):
            if all(a <= b for a, b in zip(f.lead, m)):
                trace.append(basis.label(k))
                m = tuple(x - y + z for x, y, z in zip(m, f.lead, f.tail))
                break
        else:
            return m, trace


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvegb",
                                     description="Groebner bases of almost arithmetic monomial curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def curve_args(p):
        p.add_argument("--arith", required=True, help="arithmetic part, e.g. 7,8")
        p.add_argument("--mn", required=True, type=int, help="the free generator")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def kind_args(p, default=None):
        p.add_argument("--kind", choices=[k.value for k in Kind], default=default,
                       required=default is None)
        p.add_argument("--order", choices=["asc", "desc"], default="asc")

    p = sub.add_parser("params", help="print the curve parameters")
    curve_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("basis", help="print a named generating set")
    curve_args(p)
    kind_args(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("check", help="Groebner and minimality verdict for a named set")
    curve_args(p)
    kind_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", help="compare a reduced basis with the elimination oracle")
    curve_args(p)
    p.add_argument("--kind", choices=[k.value for k in Kind], default="phi")
    p.add_argument("--basis-file", help="JSON list or one 'lead - tail' per line")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="verify a family of inputs")
    p.add_argument("--family", choices=["odd-shift"])
    p.add_argument("--m0", default="5..25", help="range for the odd-shift family")
    p.add_argument("--all", action="store_true", help="every valid input within the bounds")
    p.add_argument("--min-m0", type=int, default=2)
    p.add_argument("--max-m0", type=int, default=30)
    p.add_argument("--max-p", type=int, default=4)
    p.add_argument("--max-mn", type=int, default=60)
    p.add_argument("--max-step", type=int, default=1, help="largest common difference")
    p.add_argument("--ladder-samples", type=int, default=500)
    p.add_argument("--pair-samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="one line per instance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("nf", help="normal form of a monomial modulo Phi")
    curve_args(p)
    p.add_argument("monomial", help="e.g. x1^5 or x0*x2^3, or 1")
    p.add_argument("--engine", choices=["ladder", "generic"], default="generic")
    p.add_argument("--explain", action="store_true", help="show the reduction trace")
    p.set_defaults(func=cmd_nf)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code, report, lines = args.func(args)
    except InputError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ContractViolation, ResourceLimit) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CurveGBError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        report = {"schema": SCHEMA, "command": args.command, **report,
                  "elapsed_ms": round(1000 * (time.perf_counter() - start), 3)}
        print(json.dumps(report, sort_keys=True, ensure_ascii=False))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
