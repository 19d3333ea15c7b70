"""Command-line front end.

    deszeta values -r 2 -w 4
    deszeta coeffs -r 3 --format csv
    deszeta eval 4+0.3i 0
    deszeta verify shuffle-exact --out reports.json

Exit codes: 0 success, 2 usage error, 3 evaluator error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

import mpmath
from mpmath import mp

from .coeff_table import expand_G
from .desing_values import zeta_des_value
from .errors import EvaluationError, UnknownSuite
from .exact_core import compositions
from .numeric_eval import EvalOptions, parse_complex, zeta_des_mixed, zeta_des_numeric
from .relations import SUITES, TOLERANCE_SCALE, reports_to_json, run_suite

__all__ = ["CliConfig", "main", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_EVAL, EXIT_VERIFY = 0, 2, 3, 4
FORMATS = ("json", "csv", "table")
MAX_VALUES_DEPTH, MAX_VALUES_WEIGHT, MAX_COEFF_DEPTH = 4, 12, 6


@dataclass(frozen=True)
class CliConfig:
    precision_bits: int = 128
    cutoff: int = 50
    tolerance_scale: float = TOLERANCE_SCALE
    format: str = "table"
    out: Optional[str] = None
    seed: int = 42

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.precision_bits < 53:
            raise ValueError("precision must be at least 53 bits")
        if self.cutoff < 1:
            raise ValueError("cutoff must be positive")
        if not self.tolerance_scale > 0:
            raise ValueError("tolerance scale must be positive")

    def eval_options(self) -> EvalOptions:
        return EvalOptions(precision_bits=self.precision_bits, series_cutoff=self.cutoff)


_NEGATIVE_LITERAL = re.compile(r"^-(?:\d|\.\d|[ij]$)")


class _UsageError(Exception):
    pass


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # registered on the root and on every subcommand so flags work in either position
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--precision", type=int, default=d if suppress else 128,
                   help="working precision in bits (>= 53)")
    g.add_argument("--cutoff", type=int, default=d if suppress else 50,
                   help="switch point from direct summation to asymptotic tails")
    g.add_argument("--format", choices=FORMATS, default=d if suppress else "table")
    g.add_argument("--out", default=d, help="write output to this file instead of stdout")
    g.add_argument("--seed", type=int, default=d if suppress else 42)
    g.add_argument("--tolerance-scale", type=float, default=d if suppress else TOLERANCE_SCALE,
                   help="multiplier on combined error estimates in numeric checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deszeta", parents=[_global_flags(False)],
                                     description="Desingularized multiple zeta values and relation checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    p = sub.add_parser("values", parents=common, help="exact values at non-positive integers")
    p.add_argument("-r", "--depth", type=int, required=True)
    p.add_argument("-w", "--max-weight", type=int, required=True)

    p = sub.add_parser("coeffs", parents=common, help="coefficient table of depth r")
    p.add_argument("-r", "--depth", type=int, required=True)

    p = sub.add_parser("eval", parents=common, help="evaluate at complex points, e.g. 4+0.3i 0")
    p.add_argument("s", nargs="+", help="complex literals a+bi")
    # let "-0.5+1i" and "-i" through as positionals, like plain negative numbers
    p._negative_number_matcher = _NEGATIVE_LITERAL

    p = sub.add_parser("verify", parents=common, help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    try:
        return CliConfig(precision_bits=ns.precision, cutoff=ns.cutoff,
                         tolerance_scale=ns.tolerance_scale, format=ns.format,
                         out=ns.out, seed=ns.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _render(cfg: CliConfig, payload, header, rows) -> str:
    if cfg.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    if cfg.format == "csv":
        return _csv(header, rows)
    return _table(header, rows)


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_values(cfg: CliConfig, r: int, max_weight: int) -> int:
    if not 1 <= r <= MAX_VALUES_DEPTH:
        raise _UsageError(f"depth must be between 1 and {MAX_VALUES_DEPTH}")
    if not 0 <= max_weight <= MAX_VALUES_WEIGHT:
        raise _UsageError(f"max weight must be between 0 and {MAX_VALUES_WEIGHT}")
    rows = []
    payload = []
    for w in range(max_weight + 1):
        for k in compositions(w, r):
            v = str(zeta_des_value(k))
            payload.append({"k": list(k), "value": v})
            rows.append([*k, v])
    header = [f"k{i + 1}" for i in range(r)] + ["value"]
    _emit(cfg, _render(cfg, payload, header, rows))
    return EXIT_OK


def cmd_coeffs(cfg: CliConfig, r: int) -> int:
    if not 1 <= r <= MAX_COEFF_DEPTH:
        raise _UsageError(f"depth must be between 1 and {MAX_COEFF_DEPTH}")
    table = expand_G(r)
    rows = [[*l, *m, a] for (l, m), a in table]
    header = [f"l{i + 1}" for i in range(r)] + [f"m{i + 1}" for i in range(r)] + ["a"]
    _emit(cfg, _render(cfg, table.to_json(), header, rows))
    return EXIT_OK


def _nonpositive_integer(z: mpmath.mpc) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == mpmath.floor(z.real)


def cmd_eval(cfg: CliConfig, args: Sequence[str]) -> int:
    opts = cfg.eval_options()
    with mp.workprec(opts.precision_bits):
        try:
            s = [parse_complex(a) for a in args]
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        if _nonpositive_integer(s[-1]):
            method = "mixed"
            res = zeta_des_mixed(s[:-1], int(-s[-1].real), opts)
        else:
            method = "combination"
            res = zeta_des_numeric(s, opts)
        digits = opts.digits
        re_, im_ = mpmath.nstr(res.value.real, digits), mpmath.nstr(res.value.imag, digits)
        err = mpmath.nstr(res.err_estimate, 6)
        payload = {"s": list(args), "method": method,
                   "value": {"re": re_, "im": im_, "err": err}}
        text = _render(cfg, payload, ["re", "im", "err", "method"], [[re_, im_, err, method]])
        if cfg.format == "table":
            text = f"{mpmath.nstr(res.value, digits)}  ± {err}  ({method})\n"
    _emit(cfg, text)
    return EXIT_OK


def cmd_verify(cfg: CliConfig, suite: str) -> int:
    if suite not in SUITES:
        raise _UsageError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}")
    opts = cfg.eval_options()
    try:
        reports = run_suite(suite, opts, seed=cfg.seed, tolerance_scale=cfg.tolerance_scale)
    except UnknownSuite as exc:
        raise _UsageError(str(exc)) from None
    digits = opts.digits
    if cfg.format == "json":
        text = reports_to_json(reports, digits)
    else:
        rows = []
        for r in reports:
            d = r.to_dict(digits)
            rows.append([d["relation"], json.dumps(d["params"], separators=(",", ":")),
                         d["residual"], d["tolerance"], d["verdict"]])
        header = ["relation", "params", "residual", "tolerance", "verdict"]
        text = _csv(header, rows) if cfg.format == "csv" else _table(header, rows)
        if cfg.format == "table":
            counts = {v: sum(r.verdict == v for r in reports) for v in ("pass", "fail", "unsupported")}
            text += f"{suite}: " + ", ".join(f"{n} {v}" for v, n in counts.items()) + "\n"
    _emit(cfg, text)
    return EXIT_VERIFY if any(r.verdict == "fail" for r in reports) else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(ns)
        if ns.command == "values":
            return cmd_values(cfg, ns.depth, ns.max_weight)
        if ns.command == "coeffs":
            return cmd_coeffs(cfg, ns.depth)
        if ns.command == "eval":
            return cmd_eval(cfg, ns.s)
        return cmd_verify(cfg, ns.suite)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"deszeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EvaluationError as exc:
        print(f"deszeta: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
