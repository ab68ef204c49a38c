"""Command-line entry point.  Every subcommand prints a RunReport as JSON (or text)."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .constructions import (QuotientError, VandermondeError, VandermondeParams, assemble_lift, lift_solve,
                            sample_stable, search_h1_jump, search_obstructed, vandermonde_rep, write_corpus)
from .deformation import (StabilityRequired, build_CX, check_les_consistency, check_perfect_obstruction,
                          cohomology, expected_dimension)
from .exactmat import InputError, RatMatrix, format_rational, parse_rational
from .oracle import OracleBudgetExceeded
from .quiver import ADHMRep, DimVector, EnhancedRep, NotARepresentation, relation_residuals
from .stability import (ChamberError, ChamberLocation, chamber_of, chamber_verdict, destabilizing_witness,
                        is_delta_stable, make_param, verify_wall_witness)
from .suite import SuiteConfig, overall_status, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    status: str = "pass"
    timing_ms: int = 0

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "results": self.results,
                "status": self.status, "timing_ms": self.timing_ms}

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.status == "fail" else EXIT_PASS


class CliInputError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliInputError("unreadable-file", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError("invalid-json", f"invalid JSON in {path}: {exc}") from None


def _load_rep(path: str) -> EnhancedRep:
    return EnhancedRep.from_dict(_read_json(path))


def _dims(args) -> DimVector:
    try:
        return DimVector(args.r, args.c, args.cprime)
    except ValueError as exc:
        raise CliInputError("invalid-dims", str(exc)) from None


def _h_list(h) -> list[int]:
    return [int(x) for x in h]


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> RunReport:
    X = _load_rep(args.file)
    res = relation_residuals(X)
    failing = res.failing()
    results = {"dims": X.dims.to_dict(), "shapes_ok": True,
               "relations": {name: name not in failing for name in ("R1", "R2", "R3", "R4", "R5")}}
    if failing:
        results["residuals"] = {name: getattr(res, name).to_dict() for name in failing}
    return RunReport("check", {"file": args.file}, results, "fail" if failing else "pass")


def cmd_stability(args) -> RunReport:
    X = _load_rep(args.file)
    theta, theta_prime = parse_rational(args.theta), parse_rational(args.theta_prime)
    inputs = {"file": args.file, "theta": format_rational(theta), "theta_prime": format_rational(theta_prime)}
    p = make_param(theta, theta_prime, X.dims)
    where = chamber_of(p)
    if where is not ChamberLocation.DELTA:
        raise ChamberError(f"criterion only valid in chamber Delta (parameter lies in {where.name})")
    res = relation_residuals(X)
    if not res.is_zero():
        return RunReport("stability", inputs, {"chamber": where.name, "relations_fail": res.failing()}, "fail")
    verdict = chamber_verdict(X)
    results = {"chamber": where.name, "theta_inf": format_rational(p.theta_inf), **verdict.to_dict()}
    w = destabilizing_witness(X, p)
    if w is not None:
        results["destabilizer"] = w.to_dict(p)
    # the witness search must agree with the verdict
    consistent = (w is None) == verdict.stable
    results["witness_consistent"] = consistent
    return RunReport("stability", inputs, results, "pass" if consistent else "fail")


def cmd_cohomology(args) -> RunReport:
    X = _load_rep(args.file)
    inputs = {"file": args.file, "deep": args.deep}
    res = relation_residuals(X)
    if not res.is_zero():
        return RunReport("cohomology", inputs, {"relations_fail": res.failing()}, "fail")
    C = build_CX(X)
    rep = cohomology(C)
    results = {"degree_dims": list(C.degree_dims), "simplified": X.cprime == 1,
               **rep.to_dict(expected_dimension(X.dims) if X.cprime >= 1 else None)}
    status = "pass"
    try:
        obs = check_perfect_obstruction(X)
        results["obstruction"] = obs.to_dict()
        if not obs.perfect:
            status = "fail"
    except StabilityRequired as exc:
        results["obstruction"] = {"skipped": str(exc)}
    if args.deep:
        les = check_les_consistency(X, deep=True)
        results["les"] = les.to_dict()
        if not les.passed:
            status = "fail"
    return RunReport("cohomology", inputs, results, status)


def cmd_walls(args) -> RunReport:
    dims = _dims(args)
    if dims.cprime < 1:
        raise CliInputError("invalid-dims", "wall witnesses need c' >= 1")
    results, ok = {}, True
    for which in ("minus", "plus"):
        if which == "plus" and dims.cprime > dims.c:
            results[which] = {"skipped": "X+ needs c' <= c"}
            continue
        rep = verify_wall_witness(which, dims)
        results[which] = rep.to_dict()
        ok = ok and rep.passed
    return RunReport("walls", dims.to_dict(), results, "pass" if ok else "fail")


def cmd_lift(args) -> RunReport:
    base = ADHMRep.from_dict(_read_json(args.base_file))
    Ap = RatMatrix.from_dict(_read_json(args.aprime_file), "Aprime")
    Bp = RatMatrix.from_dict(_read_json(args.bprime_file), "Bprime")
    inputs = {"base_file": args.base_file, "aprime_file": args.aprime_file, "bprime_file": args.bprime_file,
              "samples": args.samples, "seed": args.seed}
    if Ap.rows != Ap.cols or Bp.shape != Ap.shape:
        raise CliInputError("shape-mismatch", "shape mismatch: A' and B' must be square of equal size")
    try:
        sol = lift_solve(base, Ap, Bp)
    except NotARepresentation as exc:
        return RunReport("lift", inputs, {"error": str(exc)}, "fail")
    except ValueError as exc:
        raise CliInputError("invalid-input", str(exc)) from None
    rng = random.Random(args.seed)
    residual_ok = stable = 0
    example = None
    for _ in range(args.samples):
        Y = assemble_lift(sol.sample(rng))
        if relation_residuals(Y).is_zero():
            residual_ok += 1
            if is_delta_stable(Y):
                stable += 1
                if example is None:
                    example = Y.to_dict()
    results = {"unknowns": sol.unknowns, "equations": sol.equations, "solution_dimension": sol.dimension,
               "samples": args.samples, "residuals_zero": residual_ok, "delta_stable": stable}
    if example is not None:
        results["stable_example"] = example
    return RunReport("lift", inputs, results, "pass" if residual_ok == args.samples else "fail")


def cmd_vandermonde(args) -> RunReport:
    lambdas = tuple(parse_rational(x.strip()) for x in args.lambdas.split(",") if x.strip())
    inputs = {"r": args.r, "c": args.c, "lambdas": [format_rational(x) for x in lambdas]}
    X = vandermonde_rep(VandermondeParams(args.r, args.c, lambdas))
    verdict = chamber_verdict(X)
    rep = cohomology(build_CX(X))
    expected = expected_dimension(X.dims)
    ok = (relation_residuals(X).is_zero() and verdict.stable and rep.h[2] == 0 and rep.h[1] == expected)
    results = {"stable": verdict.stable, "h": _h_list(rep.h), "expected_dimension": expected,
               "unobstructed": rep.h[2] == 0}
    return RunReport("vandermonde", inputs, results, "pass" if ok else "fail")


def cmd_suite(args) -> RunReport:
    cfg = SuiteConfig(seed=args.seed, max_r=args.max_r, max_c=args.max_c, deep=args.deep,
                      max_attempts=args.max_attempts)
    only = set(args.only) if args.only else None
    checks = run_suite(cfg, only)
    inputs = {"max_r": cfg.max_r, "max_c": cfg.max_c, "seed": cfg.seed, "deep": cfg.deep,
              "max_attempts": cfg.max_attempts}
    results = {"checks": [c.to_dict() for c in sorted(checks, key=lambda c: c.criterion)]}
    return RunReport("suite", inputs, results, overall_status(checks))


def cmd_search_obstructed(args) -> RunReport:
    dims = _dims(args)
    if dims.cprime < 1 or dims.cprime > dims.c:
        raise CliInputError("invalid-dims", "search needs 1 <= c' <= c")
    inputs = {**dims.to_dict(), "attempts": args.max_attempts, "seed": args.seed}
    results: dict = {}
    found = search_obstructed(dims, args.seed, args.max_attempts)
    if found is None:
        results["obstructed"] = None
    else:
        X, rep = found
        results["obstructed"] = {"h": _h_list(rep.h), "representation": X.to_dict()}
    jump = search_h1_jump(dims, args.seed, args.max_attempts)
    if jump is None:
        results["h1_jump"] = None
    else:
        results["h1_jump"] = [{"h": _h_list(rep.h), "representation": X.to_dict()} for X, rep in jump]
    return RunReport("search-obstructed", inputs, results, "pass" if found is not None else "partial")


def cmd_sample(args) -> RunReport:
    dims = _dims(args)
    reps = sample_stable(dims, args.seed, args.max_attempts, count=args.count)
    write_corpus(args.out, reps, dims, args.seed)
    inputs = {**dims.to_dict(), "seed": args.seed, "attempts": args.max_attempts, "count": args.count,
              "out": args.out}
    status = "pass" if len(reps) >= args.count else "partial"
    return RunReport("sample", inputs, {"written": len(reps)}, status)


# ---------------------------------------------------------------------------
# plumbing


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            lines.append(f"{pad}{json.dumps(obj)}")
        else:
            for v in obj:
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def emit(payload: dict, text: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if text:
        stream.write("\n".join(_render_text(payload)) + "\n")
    else:
        stream.write(json.dumps(payload) + "\n")


def _common(max_attempts: int) -> argparse.ArgumentParser:
    # a fresh parent per subcommand: argparse shares parent actions, so defaults would leak
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-attempts", type=int, default=max_attempts)
    common.add_argument("--deep", action="store_true", help="term-by-term exactness of the long exact sequence")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="enhadhm", description="Exact computations for enhanced ADHM data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, max_attempts=1000):
        p = sub.add_parser(name, parents=[_common(max_attempts)], help=help_text)
        p.set_defaults(func=fn)
        return p

    def add_dims(p):
        p.add_argument("r", type=int)
        p.add_argument("c", type=int)
        p.add_argument("cprime", type=int)

    add("check", cmd_check, "validate relations and shapes").add_argument("file")
    p = add("stability", cmd_stability, "stability verdict in the chamber")
    p.add_argument("file")
    p.add_argument("theta", nargs="?", default="-2")
    p.add_argument("theta_prime", nargs="?", default="1")
    add("cohomology", cmd_cohomology, "cohomology of the deformation complex").add_argument("file")
    add_dims(add("walls", cmd_walls, "wall witnesses X- and X+"))
    p = add("lift", cmd_lift, "solve the lifting system over an ADHM base")
    p.add_argument("base_file")
    p.add_argument("aprime_file")
    p.add_argument("bprime_file")
    p.add_argument("--samples", type=int, default=10)
    p = add("vandermonde", cmd_vandermonde, "Vandermonde representation")
    p.add_argument("r", type=int)
    p.add_argument("c", type=int)
    p.add_argument("lambdas", help='comma separated eigenvalues, e.g. "1,2,3"')
    p = add("suite", cmd_suite, "run the acceptance battery")
    p.add_argument("max_r", type=int, nargs="?", default=4)
    p.add_argument("max_c", type=int, nargs="?", default=6)
    p.add_argument("--only", type=int, action="append", help="run only this check number (repeatable)")
    add_dims(add("search-obstructed", cmd_search_obstructed, "random search for obstructed points", 200))
    p = add("sample", cmd_sample, "write a JSON-lines corpus of stable representations", 100)
    add_dims(p)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--out", required=True)
    return parser


_ERROR_CODES = {VandermondeError: "vandermonde-hypothesis", ChamberError: "outside-chamber",
                OracleBudgetExceeded: "budget-exceeded", QuotientError: "quotient-undefined"}
_INPUT_ERRORS = (InputError, CliInputError, VandermondeError, ChamberError, OracleBudgetExceeded, QuotientError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    text = args.pretty or args.format == "text"
    t0 = time.perf_counter()
    try:
        report = args.func(args)
    except _INPUT_ERRORS as exc:
        code = getattr(exc, "code", None) or _ERROR_CODES.get(type(exc), "invalid-input")
        message = getattr(exc, "message", None) or str(exc)
        emit({"command": args.command, "status": "error", "error": {"code": code, "message": message}}, text)
        return EXIT_INPUT
    except NotARepresentation as exc:
        emit({"command": args.command, "status": "fail", "error": {"code": "not-a-representation",
                                                                   "message": str(exc)}}, text)
        return EXIT_FAIL
    report.timing_ms = int((time.perf_counter() - t0) * 1000)
    emit(report.to_dict(), text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
