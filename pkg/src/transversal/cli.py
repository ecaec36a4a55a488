"""Command-line entry point.  JSON on stdout, diagnostics on stderr.

Exit codes: 0 affirmative/success, 1 negative verdict, 2 usage or input
error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .certify import is_member_A, is_member_B
from .errors import BudgetExceeded, TransversalError
from .extremal import (
    TREE_KINDS,
    VARIANTS,
    construct_star_family,
    construct_tree_family,
    decompose_params,
    star_bound,
    tree_bound,
)
from .model import collection_to_json, dumps_json, load_collection, validate_witness
from .oracle import DEFAULT_ORACLE_BUDGET, oracle_star_max, oracle_tree_threshold, saturation_check
from .rainbow_star import find_rainbow_star
from .rainbow_tree import (
    DEFAULT_NODE_BUDGET,
    STRATEGIES,
    check_decomposition,
    compute_R,
    decompose,
    has_rainbow_tree_of_order,
)

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _read(path: str):
    if path == "-":
        return load_collection(sys.stdin.buffer)
    with open(path, "rb") as fh:
        return load_collection(fh)


def _bound(args):
    if args.kind == "star":
        return {"bound": star_bound(args.n, args.delta), "params": decompose_params(args.n, args.delta).to_json()}, OK
    return {"bound": tree_bound(args.n, args.m)}, OK


def _construct(args):
    if args.kind == "star":
        c = construct_star_family(args.n, args.delta, args.variant, args.centers)
    else:
        c = construct_tree_family(args.n, args.m, args.tree_kind, args.seed)
    return collection_to_json(c), OK


def _check(args):
    coll = _read(args.file)
    if args.kind == "rainbow-star":
        w = find_rainbow_star(coll, args.delta)
        return {"free": w is None, "witness": w and w.to_json()}, OK if w is None else NEGATIVE
    found, w = has_rainbow_tree_of_order(coll, args.order, budget=args.budget)
    return {"free": not found, "witness": w and w.to_json()}, NEGATIVE if found else OK


def _decompose(args):
    coll = _read(args.file)
    d = decompose(coll, args.strategy, budget=args.budget)
    rs = {r.phase: r for r in compute_R(d, coll)}
    phases = []
    for i, p in enumerate(d.phases, start=1):
        phases.append(
            {
                "U": sorted(p.vertices),
                "S": sorted(p.colors),
                "tree": p.tree.to_json(),
                "r": rs[i].r if i in rs else None,
                "R": list(rs[i].colors) if i in rs else None,
            }
        )
    checks = check_decomposition(d, coll, free=False)
    out = {
        "strategy": d.strategy,
        "s": d.s,
        "t": d.t,
        "m": d.vertex_count,
        "phases": phases,
        "stranded": sorted(d.stranded),
        "checks": [c.to_json() for c in checks],
    }
    return out, OK


def _certify(args):
    coll = _read(args.file)
    rep = is_member_A(coll, args.n, args.delta) if args.kind == "a" else is_member_B(coll, args.n, args.m)
    return rep.to_json(), OK if rep.member else NEGATIVE


def _oracle(args):
    if args.kind == "star":
        rep = oracle_star_max(args.n, args.delta, budget=args.budget)
        out = rep.to_json()
        out["bound"] = star_bound(args.n, args.delta)
        out["agrees"] = rep.complete and rep.value == out["bound"]
        out["witness"] = collection_to_json(rep.witness)
        if not rep.complete:
            return out, BUDGET
        return out, OK if out["agrees"] else NEGATIVE
    rep = oracle_tree_threshold(args.n, args.m, budget=args.budget)
    if not rep.complete:
        return rep.to_json(), BUDGET
    out = rep.to_json()
    if rep.counterexample is not None:
        out["counterexample"] = collection_to_json(rep.counterexample)
    return out, OK if rep.confirmed else NEGATIVE


def _saturate(args):
    rep = saturation_check(_read(args.file), args.delta)
    return rep.to_json(), OK if rep.saturated else NEGATIVE


def _version(args):
    return {"version": __version__}, OK


def selftest() -> list[tuple[str, bool]]:
    """Fast end-to-end invariant checks."""
    results = []
    results.append(("bound(11,4)=13", star_bound(11, 4) == 13))
    results.append(("params(10,4)", decompose_params(10, 4).to_json() == {"a": 1, "b": 3, "k1": 1, "k2": 2}))
    for delta in (2, 3, 4):
        for n in range(delta + 1, 3 * delta + 2):
            fam = construct_star_family(n, delta)
            ok = (
                len(fam) == star_bound(n, delta)
                and find_rainbow_star(fam, delta) is None
                and is_member_A(fam, n, delta).member
            )
            results.append((f"star-family({n},{delta})", ok))
    for n, delta in ((3, 2), (4, 3)):
        rep = oracle_star_max(n, delta)
        results.append((f"oracle-star({n},{delta})", rep.complete and rep.value == star_bound(n, delta)))
    for n, m in ((3, 3), (4, 4)):
        results.append((f"oracle-tree({n},{m})", oracle_tree_threshold(n, m).confirmed))
        fam = construct_tree_family(n, m, "pruefer", seed=0)
        d = decompose(fam)
        results.append((f"decompose-B({n},{m})", all(c.passed for c in check_decomposition(d, fam, free=True))))
    fam = construct_star_family(8, 3)
    w = find_rainbow_star(fam.with_graph(fam.graphs[0]).with_graph(fam.graphs[0]), 3)
    results.append(("witness-valid", w is not None and validate_witness(fam.with_graph(fam.graphs[0]).with_graph(fam.graphs[0]), w)))
    return results


def _selftest(args):
    results = selftest()
    ok = all(r for _, r in results)
    return {"selftest": "pass" if ok else "fail", "checks": [{"id": k, "pass": v} for k, v in results]}, OK if ok else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="transversal", description=__doc__.splitlines()[0])
    ap.add_argument("--pretty", action="store_true", help="indent JSON output")
    # Leaf parsers accept --pretty too, without resetting a global one.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    bound = sub.add_parser("bound", help="extremal sizes")
    bsub = bound.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    b = bsub.add_parser("star", parents=[common])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--delta", type=int, required=True)
    b = bsub.add_parser("tree", parents=[common])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    bound.set_defaults(func=_bound)

    cons = sub.add_parser("construct", help="extremal families in the wire format")
    csub = cons.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    c = csub.add_parser("star", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--variant", choices=VARIANTS, default="auto")
    c.add_argument("--centers", choices=("floor", "ceil"), default="floor",
                   help="center count for even n when n <= 2*delta-2")
    c = csub.add_parser("tree", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--kind", dest="tree_kind", choices=TREE_KINDS, default="path")
    c.add_argument("--seed", type=int, default=None)
    cons.set_defaults(func=_construct)

    chk = sub.add_parser("check", help="rainbow star/tree freeness")
    ksub = chk.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    k = ksub.add_parser("rainbow-star", parents=[common])
    k.add_argument("--delta", type=int, required=True)
    k.add_argument("file")
    k = ksub.add_parser("rainbow-tree", parents=[common])
    k.add_argument("--order", type=int, required=True)
    k.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    k.add_argument("file")
    chk.set_defaults(func=_check)

    dec = sub.add_parser("decompose", parents=[common], help="phase decomposition of a tree collection")
    dec.add_argument("--strategy", choices=STRATEGIES, default="exact")
    dec.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    dec.add_argument("file")
    dec.set_defaults(func=_decompose)

    cert = sub.add_parser("certify", help="extremal-class membership")
    esub = cert.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    e = esub.add_parser("a", parents=[common])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("file")
    e = esub.add_parser("b", parents=[common])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("file")
    cert.set_defaults(func=_certify)

    orc = sub.add_parser("oracle", help="brute-force confirmation of the bounds")
    osub = orc.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    o = osub.add_parser("star", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--delta", type=int, required=True)
    o.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    o = osub.add_parser("tree", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    orc.set_defaults(func=_oracle)

    sat = sub.add_parser("saturate", parents=[common], help="every added star creates a rainbow star")
    sat.add_argument("--delta", type=int, required=True)
    sat.add_argument("file")
    sat.set_defaults(func=_saturate)

    sub.add_parser("version", parents=[common]).set_defaults(func=_version)
    sub.add_parser("selftest", parents=[common]).set_defaults(func=_selftest)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        payload, code = args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(dumps_json({"error": "budget exceeded", "nodes": exc.nodes}, args.pretty))
        return BUDGET
    except (TransversalError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    print(dumps_json(payload, args.pretty))
    return code


def main() -> None:
    raise SystemExit(run())
