"""Command-line interface: ``multrec {solve,eval,verify,roots,bench}``.

Exit codes: 0 success, 2 parse/validation error, 3 numeric failure (or a
failed ``verify``), 4 an exact query exceeded the bit budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .core import oracle_exponents, oracle_iterate
from .engine import exponents_at, exponents_at_mod
from .errors import (MultrecError, OverflowBudgetExceeded, ParseError,
                     RootFindingFailed, SingularSystem, ToleranceInvalid,
                     UnsupportedOrder, ValidationError)
from .evaluator import evaluate_exact, evaluate_log_magnitude, evaluate_numeric
from .gaussian import DEFAULT_BIT_BUDGET, GaussianRational, fraction_text
from .spectral import (characteristic_roots, closed_form_exponents,
                       reference_branch, reference_exponents,
                       solve_coefficients)
from .spec_io import (Query, loads_document, parse_recursion, render_solution,
                      solution_to_dict)
from .spec_io.render import fmt_complex

EXIT_OK, EXIT_PARSE, EXIT_NUMERIC, EXIT_BUDGET = 0, 2, 3, 4

SPECTRAL_TOL = 1e-9
NUMERIC_TOL = 1e-8


class CliFailure(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _f17(x: float) -> str:
    return format(x, ".17g")


def _fmt_value(v, decimal: bool) -> str:
    if isinstance(v, GaussianRational) and not decimal:
        return str(v)
    z = complex(v)
    if z.imag == 0:
        return _f17(z.real)
    sign = "-" if z.imag < 0 else "+"
    return f"{_f17(z.real)}{sign}{_f17(abs(z.imag))}i"


def _json_value(v, decimal: bool):
    if isinstance(v, GaussianRational) and not decimal:
        return {"re": fraction_text(v.re), "im": fraction_text(v.im)}
    z = complex(v)
    return {"re": z.real, "im": z.imag}


def _load(args):
    sources = [x for x in (args.expr, args.file) if x is not None]
    if len(sources) != 1:
        raise CliFailure("give exactly one input: a file or -e/--expr", EXIT_PARSE)
    if args.expr is not None:
        return parse_recursion(args.expr)
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliFailure(f"cannot read {args.file}: {exc}", EXIT_PARSE) from exc
    if text.lstrip().startswith("{"):
        return loads_document(text)
    return parse_recursion(text)


def _solution(spec, args):
    rs = characteristic_roots(spec, tol=args.tol, cluster=args.cluster)
    return solve_coefficients(spec, rs, cluster=args.cluster)


def _parse_steps(text: str):
    steps = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            steps.extend(range(int(lo), int(hi) + 1))
        else:
            steps.append(int(part))
    if any(s < 0 for s in steps):
        raise ValueError("steps must be nonnegative")
    return steps


# -- subcommands ------------------------------------------------------------

def cmd_solve(args, out):
    doc = _load(args)
    sol = _solution(doc.spec, args)
    if args.format == "json":
        out.write(json.dumps(solution_to_dict(sol, doc.spec), indent=2) + "\n")
    else:
        out.write(render_solution(sol, doc.spec) + "\n")
    return EXIT_OK


def cmd_roots(args, out):
    doc = _load(args)
    rs = characteristic_roots(doc.spec, tol=args.tol, cluster=args.cluster)
    if args.format == "json":
        out.write(json.dumps({
            "roots": [{"re": y.real, "im": y.imag, "multiplicity": m} for y, m in rs],
            "residual": rs.residual}, indent=2) + "\n")
    else:
        for y, m in rs:
            out.write(f"{fmt_complex(y, snap=False)}\tmultiplicity {m}\n")
        out.write(f"residual {rs.residual:.3e}\n")
    return EXIT_OK


def _queries(doc, args):
    if args.steps is not None:
        try:
            steps = _parse_steps(args.steps)
        except ValueError as exc:
            raise CliFailure(f"bad --steps: {exc}", EXIT_PARSE) from exc
        path = args.path or ("exact" if doc.spec.is_exact else "numeric")
        return [Query(s, path) for s in steps]
    if doc.queries:
        return list(doc.queries)
    raise CliFailure("no queries: pass --steps or put 'queries' in the document",
                     EXIT_PARSE)


def cmd_eval(args, out):
    doc = _load(args)
    spec = doc.spec
    queries = _queries(doc, args)
    records = []
    code = EXIT_OK
    solution = None
    for q in queries:
        rec = {"s": q.s}
        if args.mod is not None:
            vec = exponents_at_mod(spec, q.s, args.mod)
            rec.update(path=f"mod {args.mod}", gamma=vec.gamma, alphas=list(vec.alphas))
            records.append(rec)
            continue
        if spec.initial_values is None:
            raise CliFailure("eval needs initial values z(0..p-1)", EXIT_PARSE)
        try:
            if q.path == "exact":
                res = evaluate_exact(spec, q.s, bit_budget=args.bit_budget)
            elif q.path == "numeric":
                res = evaluate_numeric(spec, q.s)
            else:
                if solution is None:
                    solution = _solution(spec, args)
                res = evaluate_log_magnitude(spec, solution, q.s)
        except OverflowBudgetExceeded as exc:
            rec.update(path=q.path, error=str(exc))
            records.append(rec)
            code = EXIT_BUDGET
            continue
        rec.update(path=res.path, value=res.value, diagnostics=res.diagnostics)
        records.append(rec)

    if args.format == "json":
        payload = []
        for rec in records:
            rec = dict(rec)
            if "value" in rec:
                v = rec["value"]
                rec["value"] = v if isinstance(v, float) else _json_value(v, args.decimal)
            payload.append(rec)
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for rec in records:
            head = f"s={rec['s']}\tpath={rec['path']}"
            if "error" in rec:
                out.write(f"{head}\terror={rec['error']}\n")
            elif "alphas" in rec:
                alphas = " ".join(f"alpha_{n}={a}" for n, a in enumerate(rec["alphas"]))
                out.write(f"{head}\tgamma={rec['gamma']} {alphas}\n")
            elif rec["path"] == "spectral-log-magnitude":
                out.write(f"{head}\tln|z|={_f17(rec['value'])}\n")
            else:
                extra = "".join(f"\t{k}={v}" for k, v in rec["diagnostics"].items()
                                if k in ("bits", "overflow"))
                out.write(f"{head}\tvalue={_fmt_value(rec['value'], args.decimal)}{extra}\n")
    return code


def _rel(x, y) -> float:
    return abs(complex(x) - complex(y)) / max(1.0, abs(complex(y)))


def run_verify(spec, bound, tol=1e-12, cluster=1e-8, bit_budget=DEFAULT_BIT_BUDGET):
    """Cross-check every path up to ``bound``; returns ``[(name, ok, message)]``."""
    checks = []

    ref = oracle_exponents(spec, bound, bit_budget=None)
    ok = all(exponents_at(spec, s, bit_budget=None) == ref[s] for s in range(bound + 1))
    checks.append(("fast doubling vs iteration", ok,
                   "identical" if ok else "MISMATCH"))

    if spec.order <= 2:
        branch = reference_branch(spec)
        ok = all(reference_exponents(spec, s) == ref[s] for s in range(bound + 1))
        checks.append(("reference formulas", ok,
                       f"exact match ({branch})" if ok else f"MISMATCH ({branch})"))

    try:
        sol = solve_coefficients(spec, characteristic_roots(spec, tol=tol, cluster=cluster),
                                 cluster=cluster)
        drift = 0.0
        for s in range(bound + 1):
            ce = closed_form_exponents(sol, s)
            drift = max(drift, _rel(ce.gamma, ref[s].gamma),
                        *(_rel(a, b) for a, b in zip(ce.alphas, ref[s].alphas)))
        ok = drift < SPECTRAL_TOL
        checks.append(("spectral drift", ok,
                       f"{drift:.3e} {'<' if ok else '>='} {SPECTRAL_TOL:g}"))
    except (RootFindingFailed, SingularSystem) as exc:
        checks.append(("spectral drift", False, f"spectral solve failed: {exc}"))

    if spec.initial_values is not None and spec.is_exact:
        try:
            zs = oracle_iterate(spec, bound, bit_budget=bit_budget)
            note = ""
        except OverflowBudgetExceeded as exc:
            zs = exc.partial
            note = f" up to s={len(zs) - 1} (bit budget reached)"
        ok = True
        for s, z in enumerate(zs):
            try:
                ok = ok and evaluate_exact(spec, s, bit_budget=bit_budget).value == z
            except OverflowBudgetExceeded:
                ok = False
        checks.append(("oracle vs exact", ok,
                       ("identical" if ok else "MISMATCH") + note))
        worst = 0.0
        for s, z in enumerate(zs):
            if z.bit_size() < 1000:
                num = evaluate_numeric(spec, s).value
                worst = max(worst, abs(num - complex(z)) / abs(complex(z)))
        ok = worst < NUMERIC_TOL
        checks.append(("numeric vs exact", ok,
                       f"max relative difference {worst:.3e}"))
    return checks


def cmd_verify(args, out):
    doc = _load(args)
    checks = run_verify(doc.spec, args.bound, args.tol, args.cluster, args.bit_budget)
    if args.format == "json":
        out.write(json.dumps([{"check": n, "ok": ok, "detail": m} for n, ok, m in checks],
                             indent=2) + "\n")
    else:
        for name, ok, msg in checks:
            out.write(f"[{'PASS' if ok else 'FAIL'}] {name}: {msg}\n")
    return EXIT_OK if all(ok for _, ok, _ in checks) else EXIT_NUMERIC


def _timeit(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def cmd_bench(args, out):
    from .core import make_spec
    exps = [2, -1, 1, 2, -2, 1, 1, 2][:args.order]
    spec = make_spec(exps)
    m = 2**61 - 1
    rows = []
    naive_s = min(args.naive_max, 10**4)
    t, naive = _timeit(lambda: oracle_exponents(spec, naive_s, bit_budget=None)[-1])
    rows.append(("iterate (naive)", naive_s, t))
    t, fast = _timeit(lambda: exponents_at(spec, naive_s, bit_budget=None))
    rows.append(("fast doubling exact", naive_s, t))
    if fast != naive:
        raise CliFailure("bench spot-check failed: doubling != iteration", EXIT_NUMERIC)
    for s in (10**3, args.exact_s):
        t, vec = _timeit(lambda s=s: exponents_at(spec, s, bit_budget=None))
        rows.append(("fast doubling exact", s, t))
        if exponents_at_mod(spec, s, m) != vec.mod(m):
            raise CliFailure("bench spot-check failed: modular != exact", EXIT_NUMERIC)
    for s in (10**9, 10**18):
        t, _ = _timeit(lambda s=s: exponents_at_mod(spec, s, m), repeat=5)
        rows.append((f"fast doubling mod 2^61-1", s, t))
    if args.format == "json":
        out.write(json.dumps({"exponents": exps, "rows": [
            {"method": r[0], "s": r[1], "seconds": r[2]} for r in rows]}, indent=2) + "\n")
    else:
        out.write(f"recursion exponents a = {exps}\n")
        out.write(f"{'method':<28}{'s':>22}{'seconds':>14}\n")
        for name, s, t in rows:
            out.write(f"{name:<28}{s:>22}{t:>14.6f}\n")
    return EXIT_OK


# -- plumbing -----------------------------------------------------------------

def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _modulus(text):
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("modulus must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multrec",
        description="Closed-form solver for z(s+p) = c * prod z(s+l)^a_l.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("file", nargs="?", help="DSL or JSON problem file")
            p.add_argument("-e", "--expr", help="inline DSL text")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--tol", type=_positive_float, default=1e-12,
                       help="root residual tolerance")
        p.add_argument("--cluster", type=_positive_float, default=1e-8,
                       help="root clustering threshold (relative)")
        p.add_argument("--bit-budget", type=int, default=DEFAULT_BIT_BUDGET)
        p.add_argument("--decimal", action="store_true",
                       help="print exact values as decimals")
        return p

    common(sub.add_parser("solve", help="print the spectral closed form"))
    common(sub.add_parser("roots", help="characteristic roots"))
    ev = common(sub.add_parser("eval", help="values of z(s)"))
    ev.add_argument("--steps", help="e.g. '0..4' or '3,10,20'")
    ev.add_argument("--path", choices=("exact", "numeric", "logmag"))
    ev.add_argument("--mod", type=_modulus,
                    help="print exponents mod M instead of values")
    ve = common(sub.add_parser("verify", help="cross-check all solution paths"))
    ve.add_argument("--bound", type=int, default=40)
    be = common(sub.add_parser("bench", help="timings"), needs_input=False)
    be.add_argument("--order", type=int, default=3, choices=range(1, 9))
    be.add_argument("--exact-s", type=int, default=10**5)
    be.add_argument("--naive-max", type=int, default=10**4)
    return parser


COMMANDS = {"solve": cmd_solve, "eval": cmd_eval, "verify": cmd_verify,
            "roots": cmd_roots, "bench": cmd_bench}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CliFailure as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except (ParseError, ValidationError, ToleranceInvalid, UnsupportedOrder) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except OverflowBudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (MultrecError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERIC



def main_entry():
    sys.exit(main())
