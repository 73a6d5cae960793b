#!/usr/bin/env python3
"""Print the full bifurcation report for a parameter family.

Usage: critical_report.py C BETA R [SEARCH_MIN SEARCH_MAX]
"""

import sys

from planktonmap.cli import main

if __name__ == "__main__":
    if len(sys.argv) not in (4, 6):
        raise SystemExit(__doc__)
    c, beta, r = sys.argv[1:4]
    lo, hi = (sys.argv[4], sys.argv[5]) if len(sys.argv) == 6 else ("0.02", "3")
    raise SystemExit(main([
        "ns", "--c", c, "--beta", beta, "--r", r,
        "--search-min", lo, "--search-max", hi,
    ]))
