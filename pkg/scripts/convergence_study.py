"""Sensitivity of the numeric routes to their tuning knobs.

Compares the contour and limit routes with the finite-combination value while
varying the contour step, the truncation height and the set of c nodes.

    python scripts/convergence_study.py
"""
from __future__ import annotations

import mpmath

from deszeta.numeric_eval import (
    EvalOptions,
    limit_representation,
    mellin_barnes_split,
    zeta_des_numeric,
)


def contour_scan(s=(3, 3), a=-1.5) -> None:
    ref = zeta_des_numeric(s).value
    print(f"contour route at s={s}, a={a}")
    for h in (0.4, 0.2, 0.1, 0.05):
        for T in (20.0, 40.0):
            opts = EvalOptions(contour_step=h, contour_truncation=T, quad_tol=1e-6)
            try:
                r = mellin_barnes_split(s, a, opts)
                print(f"  h={h:<5} T={T:<5} |diff|={mpmath.nstr(abs(r.value - ref), 3):>10}  "
                      f"est={mpmath.nstr(r.err, 3)}")
            except Exception as exc:  # report and keep scanning
                print(f"  h={h:<5} T={T:<5} {type(exc).__name__}")


def limit_scan(s=(4, 4)) -> None:
    ref = zeta_des_numeric(s).value
    print(f"limit route at s={s}")
    node_sets = {
        "4 nodes +-0.05,+-0.1": (0.9, 0.95, 1.05, 1.1),
        "6 nodes (default)": (0.9, 0.95, 0.975, 1.025, 1.05, 1.1),
        "8 nodes": (0.9, 0.925, 0.95, 0.975, 1.025, 1.05, 1.075, 1.1),
    }
    for label, cs in node_sets.items():
        r = limit_representation(s, cs)
        print(f"  {label:24s} |diff|={mpmath.nstr(abs(r.value - ref), 3):>10}  est={mpmath.nstr(r.err, 3)}")


if __name__ == "__main__":
    contour_scan()
    limit_scan()
