"""Command-line interface: ring and polynomial arithmetic, code reports and
the verification lab.

Exit codes: 0 success, 1 domain error or theorem counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import replace

from . import __version__, kernels
from .code import build_code
from .duality import dual_report
from .errors import NotAGeneratorError, SkewCodeError, UsageError
from .lab import SUITES, LabConfig, open_problem_rows, run_lab
from .poly import SkewRing, right_divide
from .quotient import QuotientContext, reduce, reduce_diamond
from .ring import AutomorphismPair, RingSpec, automorphism_order

OPEN_PROBLEM_COLUMNS = (
    "q", "rho", "theta", "l", "s", "lambda1", "lambda2", "g",
    "applicable", "generates", "dual_dim", "candidate_span_dim",
)


def _json_arg(text: str, what: str):
    """Inline JSON, or a path to a JSON file."""
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _ring(args) -> RingSpec:
    text = args.ring.strip()
    return RingSpec.from_json(_json_arg(text, "--ring") if text.startswith("{") else text)


def _skew(args) -> SkewRing:
    ring = _ring(args)
    return SkewRing(ring, AutomorphismPair(args.rho, args.theta))


def _context(args) -> QuotientContext:
    if args.context:
        return QuotientContext.from_json(_json_arg(args.context, "--context"))
    if args.l is None or args.s is None:
        raise UsageError("give --context, or --l and --s with the ring options")
    ring = _ring(args)
    return QuotientContext.create(ring, args.rho, args.theta, args.l, args.s, ring(args.lambda1), ring(args.lambda2))


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json or text is None:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------


def cmd_ring_info(args) -> int:
    ring = _ring(args)
    autos = AutomorphismPair(args.rho, args.theta)
    autos.validate(ring)
    info = {
        "ring": str(ring),
        "spec": ring.to_json(),
        "size": ring.size,
        "characteristic": ring.characteristic,
        "is_field": ring.is_field,
        "units": len(ring.units()),
        "rho_power": args.rho,
        "theta_power": args.theta,
        "rho_order": automorphism_order(ring, args.rho),
        "theta_order": automorphism_order(ring, args.theta),
        "fixed_by_rho_theta": [str(e) for e in ring.elements() if autos.is_fixed(e, "rho", "theta")],
    }
    if ring.size <= 16:
        info["elements"] = [str(e) for e in ring.elements()]
    lines = [f"{k}: {v}" for k, v in info.items() if k != "spec"]
    _emit(info, args.json, "\n".join(lines))
    return 0


def cmd_poly_mul(args) -> int:
    skew = _skew(args)
    f, g = skew.parse(args.f), skew.parse(args.g)
    prod = f * g
    _emit({"f": f.to_text(), "g": g.to_text(), "product": prod.to_text()}, args.json, prod.to_text())
    return 0


def cmd_poly_div(args) -> int:
    skew = _skew(args)
    f1, f2 = skew.parse(args.f1), skew.parse(args.f2)
    h, g = right_divide(f1, f2)
    out = {"dividend": f1.to_text(), "divisor": f2.to_text(), "quotient": h.to_text(), "remainder": g.to_text()}
    _emit(out, args.json, f"quotient: {h.to_text()}\nremainder: {g.to_text()}")
    return 0


def cmd_reduce(args) -> int:
    ctx = _context(args)
    f = ctx.skew.parse(args.f)
    if args.diamond:
        r = reduce_diamond(ctx, f)
        out = {"context": ctx.to_json(), "quotient": "diamond", "f": f.to_text(), "remainder": r.to_text()}
        _emit(out, args.json, r.to_text())
        return 0
    r = reduce(ctx, f)
    fmt = ctx.ring.format_code
    out = {
        "context": ctx.to_json(),
        "quotient": "circle",
        "f": f.to_text(),
        "residue": str(r),
        "array": [[fmt(int(c)) for c in row] for row in r.codes],
    }
    _emit(out, args.json, str(r))
    return 0


def cmd_code_build(args) -> int:
    ctx = _context(args)
    code = build_code(ctx, ctx.skew.parse(args.g))
    print(json.dumps(code.to_json(with_distance=args.distance), indent=2))
    return 0


def cmd_code_dual(args) -> int:
    ctx = _context(args)
    code = build_code(ctx, ctx.skew.parse(args.g))
    out = {"context": ctx.to_json(), "g": code.g.to_text(), "h": code.h.to_text()}
    out.update(dual_report(code).to_json())
    print(json.dumps(out, indent=2))
    return 0


def _lab_config(args, suites) -> LabConfig:
    cfg = LabConfig.from_json(_json_arg(args.config, "--config")) if args.config else LabConfig()
    changes = {}
    if args.seed is not None:
        changes["seed"] = args.seed
    if suites is not None:
        changes["suites"] = tuple(suites)
    return replace(cfg, **changes)


def cmd_open_problem(args) -> int:
    cfg = _lab_config(args, ["open-problem"])
    rows = open_problem_rows(run_lab(cfg, jobs=args.jobs))
    if args.json:
        print(json.dumps({"seed": cfg.seed, "rows": rows}, indent=2))
        return 0
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=OPEN_PROBLEM_COLUMNS, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    if args.all and args.suite:
        raise UsageError("--all and --suite are exclusive")
    if args.list:
        for name, spec in SUITES.items():
            print(f"{name:28s} {spec.kind:12s} {spec.claim}")
        return 0
    if args.suite:
        unknown = [s for s in args.suite if s not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s) {unknown}; see 'verify --list'")
        suites = args.suite
    elif args.all:
        suites = list(SUITES)
    else:
        suites = None  # whatever the config selects
    cfg = _lab_config(args, suites)
    report = run_lab(cfg, jobs=args.jobs)
    doc = report.to_json(timing=args.timing)
    text = json.dumps(doc, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        for r in report.results:
            status = "FAIL" if r.failed else ("obs " if r.kind == "observation" else "ok  ")
            where = f" [{r.configuration}]" if r.configuration else ""
            extra = f" {r.seconds:.2f}s" if args.timing else ""
            print(f"{status} {r.suite}{where}: {r.instances} instances, {r.counterexample_count} counterexamples{extra}")
            for ce in r.counterexamples[:1]:
                print(f"       e.g. {ce}")
        failed = sorted({r.suite for r in report.results if r.failed})
        print(f"seed {cfg.seed}: {'all suites passed' if report.ok else 'counterexamples in ' + ', '.join(failed)}")
    return report.exit_code


# -- parser -----------------------------------------------------------------------


def _ring_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ring", default="gf4", help="ring name (gf4, gf9, z4, gf2^3) or RingSpec JSON")
    p.add_argument("--rho", type=int, default=0, help="rho = Frobenius^RHO")
    p.add_argument("--theta", type=int, default=0, help="theta = Frobenius^THETA")


def _context_options(p: argparse.ArgumentParser) -> None:
    _ring_options(p)
    p.add_argument("--context", help="quotient context JSON (inline or file)")
    p.add_argument("--l", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--lambda1", default="1")
    p.add_argument("--lambda2", default="1")


def _lab_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="LabConfig JSON (inline or file)")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewcode", description=" ".join(__doc__.split("\n\n")[0].split()))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({kernels.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ring-info", help="describe a coefficient ring and automorphism pair")
    _ring_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("poly-mul", help="star product f * g")
    _ring_options(p)
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly_mul)

    p = sub.add_parser("poly-div", help="right division of f1 by a monic f2")
    _ring_options(p)
    p.add_argument("f1")
    p.add_argument("f2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly_div)

    p = sub.add_parser("reduce", help="reduce f into the quotient by x^l - lambda1, y^s - lambda2")
    _context_options(p)
    p.add_argument("f")
    p.add_argument("--diamond", action="store_true", help="reduce by the product modulus instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("code-build", help="JSON report of the code generated by g")
    _context_options(p)
    p.add_argument("g")
    p.add_argument("--distance", action="store_true", help="include the minimum distance")
    p.set_defaults(func=cmd_code_build)

    p = sub.add_parser("code-dual", help="JSON report on the dual of the code generated by g")
    _context_options(p)
    p.add_argument("g")
    p.set_defaults(func=cmd_code_dual)

    p = sub.add_parser("open-problem", help="table: does x^k y^t * psi(h) generate the dual?")
    _lab_options(p)
    p.add_argument("--json", action="store_true", help="JSON instead of CSV")
    p.set_defaults(func=cmd_open_problem)

    p = sub.add_parser("verify", help="run verification suites")
    _lab_options(p)
    p.add_argument("--all", action="store_true", help="every suite")
    p.add_argument("--suite", action="append", help="a suite name (repeatable)")
    p.add_argument("--list", action="store_true", help="list suites and exit")
    p.add_argument("--timing", action="store_true", help="report wall time (output is then not reproducible)")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--output", help="also write the JSON report to this file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version, or a bad flag
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stdout = open(os.devnull, "w")
        return 0
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"skewcode: usage error: {exc}", file=sys.stderr)
        return 2
    except NotAGeneratorError as exc:
        detail = {"error": type(exc).__name__, "message": str(exc)}
        if exc.remainder is not None:
            detail["remainder"] = exc.remainder.to_text()
        print(json.dumps(detail), file=sys.stderr)
        return 1
    except SkewCodeError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
