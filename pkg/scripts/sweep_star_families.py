"""Build every extremal star family on a (n, Δ) grid and verify it.

Prints one JSON line per family and a summary line on stderr.
"""

import argparse
import json
import sys
import time

from transversal.certify import is_member_A
from transversal.extremal import construct_star_family, decompose_params, star_bound
from transversal.model import build_aux_digraph
from transversal.rainbow_star import find_rainbow_star


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--delta-min", type=int, default=2)
    ap.add_argument("--delta-max", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=40)
    args = ap.parse_args(argv)

    start = time.perf_counter()
    bad = 0
    total = 0
    for d in range(args.delta_min, args.delta_max + 1):
        for n in range(d + 1, args.n_max + 1):
            P = decompose_params(n, d)
            fam = construct_star_family(n, d)
            dg = build_aux_digraph(fam)
            rep = is_member_A(fam, n, d)
            row = {
                "n": n,
                "delta": d,
                "params": P.to_json(),
                "regime": P.regime,
                "bound": star_bound(n, d),
                "stars": len(fam),
                "centers": len(dg.centers),
                "center_arcs": len(dg.center_arcs),
                "free": find_rainbow_star(fam, d) is None,
                "member": rep.member,
            }
            ok = row["free"] and row["member"] and row["stars"] == row["bound"]
            bad += not ok
            total += 1
            print(json.dumps(row))
    print(f"{total} families, {bad} failures, {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
