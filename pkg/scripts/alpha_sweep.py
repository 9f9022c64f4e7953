#!/usr/bin/env python3
"""Radius of starlikeness of order alpha for each class, as CSV.

    python3 scripts/alpha_sweep.py --points 21 > sweep.csv
"""

import argparse
import csv
import sys

import numpy as np

from starradii import SeedClass, alpha_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=11, help="number of alpha values in [0, 0.95]")
    ap.add_argument("--max-alpha", type=float, default=0.95)
    args = ap.parse_args()
    alphas = np.linspace(0.0, args.max_alpha, args.points)
    sweeps = {cls: alpha_sweep(cls, alphas) for cls in SeedClass}

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["alpha"] + [cls.value for cls in SeedClass])
    for i, a in enumerate(alphas):
        out.writerow([f"{a:.4f}"] + [f"{sweeps[cls][i].value:.10f}" for cls in SeedClass])


if __name__ == "__main__":
    main()
