"""Random tree collections through both decomposition strategies.

Reports how many instances were free, how many stranded a color, and any
failed invariant.
"""

import argparse
import random
import sys
from collections import Counter

from transversal.extremal import random_spanning_tree
from transversal.model import GraphCollection
from transversal.rainbow_tree import STRATEGIES, check_decomposition, decompose, has_rainbow_tree_of_order


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=1000)
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--max-vertices", type=int, default=18)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    tally = Counter()
    failures = []
    for idx in range(args.instances):
        n = rng.randint(2, args.max_order)
        m = rng.randint(n, args.max_vertices)
        graphs = [random_spanning_tree(rng.sample(range(m), n), rng) for _ in range(rng.randint(1, m + 2))]
        coll = GraphCollection.from_edge_lists(m, graphs)
        free = not has_rainbow_tree_of_order(coll, n)[0]
        tally["free" if free else "not free"] += 1
        for strategy in STRATEGIES:
            d = decompose(coll, strategy)
            tally[f"{strategy} stranded"] += bool(d.stranded)
            bad = [c.name for c in check_decomposition(d, coll, free=free) if not c.passed]
            if bad:
                failures.append((idx, strategy, bad))
    for key, value in sorted(tally.items()):
        print(f"{key}: {value}")
    print(f"failures: {len(failures)}")
    for f in failures[:10]:
        print(f"  {f}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
