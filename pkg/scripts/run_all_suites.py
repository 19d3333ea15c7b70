"""Run every verification suite and write one JSON report per suite.

    python scripts/run_all_suites.py --out-dir results/ --seed 42
"""
from __future__ import annotations

import argparse
import pathlib
import time

from deszeta.numeric_eval import EvalOptions
from deszeta.relations import SUITES, reports_to_json, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("results"))
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--precision", type=int, default=128)
    ap.add_argument("--suite", action="append", choices=sorted(SUITES),
                    help="restrict to these suites (repeatable)")
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    opts = EvalOptions(precision_bits=args.precision)
    failed = 0
    for name in args.suite or sorted(SUITES):
        t0 = time.perf_counter()
        reports = run_suite(name, opts, seed=args.seed)
        (args.out_dir / f"{name}.json").write_text(reports_to_json(reports, opts.digits))
        counts = {v: sum(r.verdict == v for r in reports) for v in ("pass", "fail", "unsupported")}
        failed += counts["fail"]
        print(f"{name:14s} {counts['pass']:5d} pass {counts['fail']:3d} fail "
              f"{counts['unsupported']:3d} unsupported  {time.perf_counter() - t0:6.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
