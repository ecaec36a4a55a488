"""Compare the exhaustive star oracle with the closed-form bound."""

import argparse
import sys
import time

from transversal.extremal import star_bound
from transversal.oracle import DEFAULT_ORACLE_BUDGET, oracle_star_max

DEFAULT_PAIRS = "3:2,4:2,5:2,6:2,7:2,4:3,5:3,6:3,7:3,5:4,6:4,6:5"


def parse_pairs(text):
    return [tuple(int(x) for x in item.split(":")) for item in text.split(",") if item]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", default=DEFAULT_PAIRS, help="comma-separated n:delta pairs")
    ap.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    args = ap.parse_args(argv)

    print(f"{'n':>3} {'delta':>5} {'oracle':>6} {'bound':>5} {'classes':>8} {'nodes':>8} {'secs':>7}  status")
    failed = False
    for n, d in parse_pairs(args.pairs):
        t0 = time.perf_counter()
        rep = oracle_star_max(n, d, budget=args.budget)
        bound = star_bound(n, d)
        if not rep.complete:
            status = "truncated"
        elif rep.value == bound:
            status = "agree"
        else:
            status = "DISAGREE"
            failed = True
        print(
            f"{n:>3} {d:>5} {rep.value:>6} {bound:>5} {rep.classes:>8} {rep.nodes:>8} "
            f"{time.perf_counter() - t0:>7.2f}  {status}"
        )
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
