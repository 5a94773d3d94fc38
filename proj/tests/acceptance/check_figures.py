#!/usr/bin/env python3
"""Checks sweep CSVs written by the fracwave CLI, reading nothing but the files.

usage: check_figures.py DIR

DIR must hold fig1.csv (kinematic, alpha 0.75), fig2.csv (kinematic, alpha 0.5),
fig3.csv (KdV, alpha 1) and fig4.csv (KdV, alpha 0.5).
"""

import csv
import math
import sys
from pathlib import Path

HEADER = ["k", "re_omega", "im_omega", "re_vp", "im_vp", "re_vg", "im_vg", "branch_flag"]


def load(path):
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    if rows[0] != HEADER:
        raise ValueError(f"{path.name}: unexpected header {rows[0]}")
    return [dict(zip(HEADER, map(float, r))) for r in rows[1:]]


def check_ratio(rows, alpha):
    # v_g / v_p as complex numbers
    worst = 0.0
    for r in rows:
        ratio = complex(r["re_vg"], r["im_vg"]) / complex(r["re_vp"], r["im_vp"])
        worst = max(worst, abs(ratio - 1.0 / alpha) * alpha)
    return worst <= 1e-13, f"max |v_g/v_p - 1/alpha| alpha = {worst:.3g}"


def check_classical_kdv(rows):
    worst = 0.0
    for r in rows:
        k = r["k"]
        for got, want in ((r["re_vp"], 1 - k * k), (r["re_vg"], 1 - 3 * k * k)):
            worst = max(worst, abs(got - want) / max(1.0, abs(want)))
        worst = max(worst, abs(r["im_vp"]), abs(r["im_vg"]), abs(r["im_omega"]))
    return worst <= 1e-14, f"max deviation from 1-k^2, 1-3k^2 = {worst:.3g}"


def check_imaginary(rows):
    worst = 0.0
    for r in rows:
        for re, im in ((r["re_vp"], r["im_vp"]), (r["re_vg"], r["im_vg"])):
            worst = max(worst, abs(re) / math.hypot(re, im))
    return worst <= 1e-12, f"max |Re v| / |v| = {worst:.3g}"


def main():
    if len(sys.argv) != 2:
        print(__doc__)
        return 2
    d = Path(sys.argv[1])
    checks = [
        ("fig1 kinematic alpha=0.75 ratio", lambda: check_ratio(load(d / "fig1.csv"), 0.75), 200),
        ("fig2 kinematic alpha=0.5 real parts", lambda: check_imaginary(load(d / "fig2.csv")), 200),
        ("fig3 classical KdV", lambda: check_classical_kdv(load(d / "fig3.csv")), 100),
        ("fig4 KdV alpha=0.5 real parts", lambda: check_imaginary(load(d / "fig4.csv")), 100),
    ]
    ok = True
    for name, run, _ in checks:
        try:
            passed, detail = run()
        except (OSError, ValueError, ZeroDivisionError) as e:
            passed, detail = False, str(e)
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        ok &= passed
    for name, _, n in checks:
        path = d / (name.split()[0] + ".csv")
        if path.exists() and len(load(path)) != n:
            print(f"FAIL {path.name}: expected {n} rows")
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
