#!/usr/bin/env python3
"""Reproduce the phase-portrait regimes of the reference family
(c, beta, r) = (1, 4, 10/9): a stable focus just above the critical
toxin rate theta0 = 4/9 and invariant closed curves below it.

Writes one CSV (and SVG) per theta into an output directory.

Usage: reproduce_figures.py [outdir]
"""

import pathlib
import sys

from planktonmap.cli import main

THETAS = [0.45, 0.444, 0.44, 0.40]
FAMILY = ["--c", "1", "--beta", "4", "--r", "1.1111111111111112"]


def run(outdir: pathlib.Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for theta in THETAS:
        stem = outdir / f"orbit_theta_{theta}"
        code = main([
            "simulate", *FAMILY,
            "--theta", str(theta),
            "--initial-u", "0.6", "--initial-v", "0.75",
            "--n", "10000", "--transient", "5000",
            "--out", f"{stem}.csv", "--svg", f"{stem}.svg",
        ])
        if code != 0:
            raise SystemExit(code)
        print(f"theta={theta}: wrote {stem}.csv and {stem}.svg")

    code = main([
        "sweep", *FAMILY,
        "--theta-min", "0.40", "--theta-max", "0.46", "--theta-step", "0.005",
        "--initial-u", "0.6", "--initial-v", "0.75",
        "--n", "10000", "--transient", "5000",
        "--out", str(outdir / "sweep.csv"),
    ])
    if code != 0:
        raise SystemExit(code)
    print(f"wrote {outdir / 'sweep.csv'}")


if __name__ == "__main__":
    run(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figures_out"))
