"""Command-line interface.

::

    extlaguerre check --f 1,0,1 --g classic
    extlaguerre ak --f -1,0,1 --g classic --exact
    extlaguerre emit --g quartic4 --k 4 --format latex
    extlaguerre scan --jet cos --g classic --grid -3:3:50 --K 8 --out scan.csv
    extlaguerre roots --g quartic4

Polynomials are given as ascending coefficient lists (``1,0,1`` is
``1 + z^2``) or as expressions in ``z``.  Exit status: 0 success or InLP,
1 NotInLP, 2 usage or validation error, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from functools import partial
from typing import Sequence

import mpmath
from mpmath import mp

from .checker import Status, decide_lp, grid_scan, scan_verdict
from .errors import (
    CertificationFailed,
    ExtLaguerreError,
    InternalInconsistency,
    NoConvergence,
)
from .exactpoly import RationalPoly, as_rational
from .groots import DEFAULT_PRECISION, GeneratorSpec, preset, validate_g
from .jets import JET_GENERATORS, make_jet, poly_jet
from .operators import (
    ak_exact_poly,
    ak_partition_numeric,
    ak_series_numeric,
    emit_symbolic,
    ln_direct,
    ln_exact,
)

EXIT_OK, EXIT_NOT_IN_LP, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

# flags whose value may look like an option ("-1,0,1", "-2:2:9")
_VALUE_FLAGS = ("--f", "--g", "--x", "--grid", "--jet-params")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _merge_values(argv: Sequence[str]) -> list[str]:
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_poly(text: str) -> RationalPoly:
    """``"1,0,1"`` (ascending) or an expression such as ``"z^2+1"``."""
    text = text.strip()
    if "z" in text or "(" in text:
        return RationalPoly.parse(text)
    try:
        return RationalPoly([as_rational(c) for c in text.split(",")])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse coefficient list {text!r}: {exc}") from None


def parse_generator(text: str, relaxed: bool, bits: int) -> GeneratorSpec:
    key = text.strip().lower()
    if key in ("classic", "quartic4", "example3") or key.startswith("cyclo:"):
        g, implied = preset(key)
        relaxed = relaxed or implied
    else:
        g = parse_poly(text)
    return validate_g(g, relaxed=relaxed, precision_bits=bits)


def parse_grid(text: str) -> list[float]:
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise UsageError(f"--grid expects lo:hi:n, got {text!r}") from None
    if n < 1:
        raise UsageError("--grid needs n >= 1")
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _fmt_q(q) -> str:
    return str(Fraction(q))


def _fmt_float(v) -> str:
    # repr is locale independent and round-trips
    return repr(float(v))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--g", default="classic", help="preset name or ascending coefficients")
    common.add_argument("--relaxed", action="store_true", help="allow odd coefficients in g")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="working bits")
    common.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
    common.add_argument("--out", help="write results to this file instead of stdout")

    source = _Parser(add_help=False)
    source.add_argument("--f", help="polynomial f (ascending coefficients or expression)")
    source.add_argument("--jet", choices=sorted(JET_GENERATORS), help="named jet generator")
    source.add_argument("--jet-params", default="{}", help="JSON parameters of the jet")

    parser = _Parser(prog="extlaguerre", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common, source], help="decide membership")
    p.add_argument("--grid", default="-5:5:101", help="grid for jet sources")
    p.add_argument("--K", type=int, default=8, help="largest index for jet scans")

    p = sub.add_parser("ak", parents=[common, source], help="coefficient functions A_k")
    p.add_argument("--exact", action="store_true", help="exact polynomials (needs --f)")
    p.add_argument("--x", help="evaluation point for numeric routes")
    p.add_argument("--K", type=int, help="largest index")

    p = sub.add_parser("laguerre", parents=[common, source], help="the L_n operator")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--x", help="evaluation point (required for jets)")

    p = sub.add_parser("emit", parents=[common], help="symbolic A_k")
    p.add_argument("--k", type=int, help="single index")
    p.add_argument("--K", type=int, help="emit indices 0..K")

    p = sub.add_parser("scan", parents=[common, source], help="grid scan to CSV")
    p.add_argument("--grid", default="-5:5:101")
    p.add_argument("--K", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)

    sub.add_parser("roots", parents=[common], help="alphas of a generator")
    return parser


def _jet_params(args) -> dict:
    try:
        params = json.loads(args.jet_params)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--jet-params is not valid JSON: {exc}") from None
    if not isinstance(params, dict):
        raise UsageError("--jet-params must be a JSON object")
    return params


def _source(args):
    """``(f, jet_factory)``: exactly one of them is set."""
    if (args.f is None) == (args.jet is None):
        raise UsageError("give exactly one of --f and --jet")
    if args.f is not None:
        f = parse_poly(args.f)
        return f, partial(poly_jet, f)
    params = _jet_params(args)
    name = args.jet
    return None, partial(make_jet, name, params, precision_bits=args.precision)


def _emit(payload, args, text: str, out) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text + ("" if text.endswith("\n") else "\n"))


def _power_text(f: RationalPoly, M: int) -> str:
    return str(f) if M == 1 else f"({f})^{M}"


def cmd_check(args, out) -> int:
    gen = parse_generator(args.g, args.relaxed, args.precision)
    f, jet = _source(args)
    if f is None:
        rows = grid_scan(jet, gen, parse_grid(args.grid), args.K)
        summary = scan_verdict(rows).scan_summary
        text = (
            f"NumericOnly points={summary['points']} violations={summary['violations']}"
            f" min={_fmt_float(summary['min'])}"
        )
        payload = {"command": "check", "status": "NumericOnly", "scan": summary}
        _emit(payload, args, text, out)
        return EXIT_OK
    verdict = decide_lp(f, gen)
    payload = {
        "command": "check",
        "status": str(verdict.status),
        "oracle_agreement": verdict.oracle_agreement,
    }
    if verdict.witness is None:
        text = "InLP"
    else:
        w = verdict.witness
        text = f"NotInLP k={w.k} x={_fmt_q(w.x_star)} value={_fmt_q(w.value)}"
        payload["witness"] = {"k": w.k, "x": _fmt_q(w.x_star), "value": _fmt_q(w.value)}
    text += "\noracle: " + ("agrees" if verdict.oracle_agreement else "DISAGREES")
    _emit(payload, args, text, out)
    return EXIT_OK if verdict.status is Status.IN_LP else EXIT_NOT_IN_LP


def cmd_ak(args, out) -> int:
    gen = parse_generator(args.g, args.relaxed, args.precision)
    if args.exact:
        if args.f is None:
            raise UsageError("--exact needs --f")
        f = parse_poly(args.f)
        coeffs = ak_exact_poly(f, gen)
        K = len(coeffs) - 1 if args.K is None else min(args.K, len(coeffs) - 1)
        step = 2 if gen.admissible else 1
        idx = list(range(0, K + 1, step))
        shown = [_power_text(f, gen.M) if k == 0 else str(coeffs[k]) for k in idx]
        text = "; ".join(f"A_{k}={s}" for k, s in zip(idx, shown))
        payload = {
            "command": "ak",
            "exact": True,
            "coefficients": [{"k": k, "poly": str(coeffs[k])} for k in idx],
        }
        _emit(payload, args, text, out)
        return EXIT_OK
    if args.x is None:
        raise UsageError("numeric ak needs --x (or use --exact with --f)")
    f, jet_of = _source(args)
    K = 4 if args.K is None else args.K
    x = as_rational(args.x)
    jet = jet_of(x, K)
    r1 = ak_series_numeric(jet, gen, K)
    r2 = ak_partition_numeric(jet, gen, K)
    routes = {"R1": r1.values, "R2": r2.values}
    if f is not None:
        exact = ak_exact_poly(f, gen)
        routes["R3"] = [
            float(exact[k](x)) if k < len(exact) else 0.0 for k in range(K + 1)
        ]
    scale = max(1.0, *(abs(v) for vals in routes.values() for v in vals))
    dev = max(
        abs(a - b) / scale
        for i, va in enumerate(routes.values())
        for vb in list(routes.values())[i + 1:]
        for a, b in zip(va, vb)
    )
    lines = [
        f"A_{k} " + " ".join(f"{name}={_fmt_float(vals[k])}" for name, vals in routes.items())
        for k in range(K + 1)
    ]
    lines.append(f"agreement max_rel_dev={dev:.3e}")
    payload = {
        "command": "ak",
        "exact": False,
        "x": _fmt_q(x),
        "routes": {name: [float(v) for v in vals] for name, vals in routes.items()},
        "max_rel_dev": dev,
    }
    _emit(payload, args, "\n".join(lines), out)
    return EXIT_OK


def cmd_laguerre(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    f, jet_of = _source(args)
    if args.x is None:
        if f is None:
            raise UsageError("laguerre with --jet needs --x")
        value = str(ln_exact(f, args.n))
    else:
        x = as_rational(args.x)
        with mp.workprec(args.precision):
            v = ln_direct(jet_of(x, 2 * args.n), args.n)
        value = _fmt_q(v) if isinstance(v, Fraction) else mpmath.nstr(v, 20)
    payload = {"command": "laguerre", "n": args.n, "value": value}
    _emit(payload, args, f"L_{args.n}={value}", out)
    return EXIT_OK


def cmd_emit(args, out) -> int:
    gen = parse_generator(args.g, args.relaxed, args.precision)
    if (args.k is None) == (args.K is None):
        raise UsageError("give exactly one of --k and --K")
    ks = [args.k] if args.k is not None else list(range(args.K + 1))
    if any(k < 0 for k in ks):
        raise UsageError("indices must be nonnegative")
    exprs = [emit_symbolic(gen, k) for k in ks]
    render = (lambda s: s.to_latex()) if args.format == "latex" else (lambda s: s.to_text())
    if len(exprs) == 1:
        text = render(exprs[0])
    else:
        text = "\n".join(f"A_{s.k} = {render(s)}" for s in exprs)
    payload = {
        "command": "emit",
        "expressions": [
            {
                "k": s.k,
                "text": s.to_text(),
                "latex": s.to_latex(),
                "terms": [
                    {"coefficient": _fmt_q(t.coefficient), "orders": list(t.orders), "f_power": t.f_power}
                    for t in s.terms
                ],
            }
            for s in exprs
        ],
    }
    _emit(payload, args, text, out)
    return EXIT_OK


def scan_csv(rows, K: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["x"] + [f"A_{k}" for k in range(0, K + 1, 2)] + ["min"])
    for r in rows:
        writer.writerow([_fmt_float(r.x)] + [_fmt_float(v) for v in r.values] + [_fmt_float(r.minimum)])
    return buf.getvalue()


def cmd_scan(args, out) -> int:
    gen = parse_generator(args.g, args.relaxed, args.precision)
    _, jet_of = _source(args)
    if args.K < 0:
        raise UsageError("--K must be nonnegative")
    rows = grid_scan(jet_of, gen, parse_grid(args.grid), args.K, workers=args.workers)
    if args.format == "json":
        payload = {
            "command": "scan",
            "K": args.K,
            "rows": [
                {"x": r.x, "values": list(r.values), "min": r.minimum, "violation": r.violation}
                for r in rows
            ],
            "summary": scan_verdict(rows).scan_summary,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(scan_csv(rows, args.K))
    return EXIT_OK


def cmd_roots(args, out) -> int:
    gen = parse_generator(args.g, args.relaxed, args.precision)
    digits = max(15, int(gen.precision_bits * 0.30103) - 2)
    with mp.workprec(gen.precision_bits):
        shown = [mpmath.nstr(a, digits) for a in gen.roots]
        pairs = [[mpmath.nstr(a.real, digits), mpmath.nstr(a.imag, digits)] for a in gen.roots]
    text = "\n".join(f"alpha_{j}={s}" for j, s in enumerate(shown, 1))
    payload = {"command": "roots", "g": str(gen.g), "admissible": gen.admissible, "alphas": pairs}
    _emit(payload, args, text, out)
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "ak": cmd_ak,
    "laguerre": cmd_laguerre,
    "emit": cmd_emit,
    "scan": cmd_scan,
    "roots": cmd_roots,
}


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run one command; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_values(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    out = stdout
    if args.out:
        out = io.StringIO()
    try:
        code = COMMANDS[args.command](args, out)
    except UsageError as exc:
        stderr.write(f"extlaguerre: error: {exc}\n")
        return EXIT_USAGE
    except InternalInconsistency as exc:
        stderr.write(f"extlaguerre: internal error: {exc}\n")
        return EXIT_INTERNAL
    except (NoConvergence, CertificationFailed) as exc:
        stderr.write(f"extlaguerre: numeric failure: {exc}\n")
        return EXIT_INTERNAL
    except (ExtLaguerreError, ValueError, ZeroDivisionError) as exc:
        stderr.write(f"extlaguerre: error: {exc}\n")
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            fh.write(out.getvalue())
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
