"""Confirm the tree bound in both directions by complete enumeration."""

import argparse
import sys
import time

from transversal.oracle import DEFAULT_ORACLE_BUDGET, oracle_tree_threshold

DEFAULT_PAIRS = "2:4,3:3,4:4,3:6"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", default=DEFAULT_PAIRS, help="comma-separated n:m pairs")
    ap.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    args = ap.parse_args(argv)

    failed = False
    for item in args.pairs.split(","):
        n, m = (int(x) for x in item.split(":"))
        t0 = time.perf_counter()
        rep = oracle_tree_threshold(n, m, budget=args.budget)
        if not rep.complete:
            status = "truncated"
        elif rep.confirmed:
            status = "confirmed"
        else:
            status = "REFUTED"
            failed = True
        print(
            f"n={n} m={m} bound={rep.bound} free classes by size={list(rep.free_classes_by_size)} "
            f"nodes={rep.nodes} {time.perf_counter() - t0:.2f}s {status}"
        )
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
