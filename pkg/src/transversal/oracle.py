"""Brute-force ground truth at desk scale.

Everything here avoids the matching detector and the branch-and-bound tree
search, so it can check them: rainbow stars are found by backtracking over
color/leaf choices and rainbow trees by enumerating edge choices.  Families
are enumerated one isomorphism class at a time through ``canonical_form``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import ParameterError, PreconditionError
from .extremal import construct_tree_family, pruefer_decode, star_bound, tree_bound
from .model import GraphCollection, StarGraph, is_tree, star_collection, stars_of
from .rainbow_star import find_rainbow_star

MAX_CANON_VERTICES = 12
DEFAULT_ORACLE_BUDGET = 2_000_000

# ---------------------------------------------------------------- canonical form


@dataclass(frozen=True, order=True)
class CanonicalForm:
    key: tuple


def _refine(colors: dict[int, int], signature) -> dict[int, int]:
    while True:
        sigs = {v: signature(v, colors) for v in colors}
        ranks = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        new = {v: ranks[s] for v, s in sigs.items()}
        if len(ranks) == len(set(colors.values())):
            return new
        colors = new


def canonical_form(collection: GraphCollection, mode: str = "vertices") -> CanonicalForm:
    """Relabeling-invariant key: the least relabeled encoding over the
    labelings reached by color refinement with individualization.

    ``mode="vertices_and_colors"`` also forgets the order of the graphs.
    """
    if mode not in ("vertices", "vertices_and_colors"):
        raise ValueError(f"unknown mode {mode!r}")
    n = collection.vertex_count
    if n > MAX_CANON_VERTICES:
        raise ParameterError(f"canonical form is limited to {MAX_CANON_VERTICES} vertices, got {n}")
    inc = collection.incidence
    active = [v for v in collection.vertices if inc[v]]

    if mode == "vertices":
        def signature(v, colors):
            return colors[v], tuple(sorted((c, colors[w]) for c, ws in inc[v].items() for w in ws))
    else:
        def signature(v, colors):
            return colors[v], tuple(sorted(tuple(sorted(colors[w] for w in ws)) for ws in inc[v].values()))

    def encode(colors: dict[int, int]) -> tuple:
        pos = dict(colors)
        graphs = [
            tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g))
            for g in collection.graphs
        ]
        if mode == "vertices_and_colors":
            graphs.sort()
        return (n, tuple(graphs))

    best = None

    def search(colors):
        nonlocal best
        colors = _refine(colors, signature)
        cells: dict[int, list[int]] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = min(((len(vs), c) for c, vs in cells.items() if len(vs) > 1), default=None)
        if target is None:
            key = encode(colors)
            if best is None or key < best:
                best = key
            return
        for v in cells[target[1]]:
            split = {u: 2 * c + (0 if u == v else 1) for u, c in colors.items()}
            search(split)

    search({v: 0 for v in active})
    return CanonicalForm(best if best is not None else encode({}))


# ---------------------------------------------------------------- brute-force detectors


def has_rainbow_star_bruteforce(collection: GraphCollection, delta: int, centers=None) -> bool:
    """Backtrack over (color, leaf) choices at each candidate center."""
    inc = collection.incidence
    for v in collection.vertices if centers is None else centers:
        options = list(inc[v].values())
        if len(options) < delta:
            continue

        def pick(i: int, taken: frozenset, need: int) -> bool:
            if need == 0:
                return True
            if len(options) - i < need:
                return False
            for w in options[i]:
                if w not in taken and pick(i + 1, taken | {w}, need - 1):
                    return True
            return pick(i + 1, taken, need)

        if pick(0, frozenset(), delta):
            return True
    return False


def has_rainbow_tree_bruteforce(collection: GraphCollection, order: int) -> bool:
    """Try every choice of ``order - 1`` colors and one edge from each."""
    if order <= 1:
        return True
    graphs = [g for g in collection.graphs if g]
    for combo in combinations(range(len(graphs)), order - 1):
        for edges in product(*(graphs[c] for c in combo)):
            if len(set(edges)) == len(edges) and is_tree(list(edges)):
                return True
    return False


# ---------------------------------------------------------------- star oracle


@dataclass(frozen=True)
class StarOracleReport:
    n: int
    delta: int
    value: int
    witness: GraphCollection
    complete: bool
    nodes: int
    classes: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "max": self.value,
            "complete": self.complete,
            "lower_bound_only": not self.complete,
            "nodes": self.nodes,
            "classes": self.classes,
        }


def all_stars(n: int, delta: int) -> list[StarGraph]:
    return [
        StarGraph(c, frozenset(ls))
        for c in range(n)
        for ls in combinations([v for v in range(n) if v != c], delta)
    ]


def _degree_precheck(stars: list[StarGraph], delta: int) -> bool:
    """Necessary conditions for freeness: leaf in-degree <= delta-1 and
    ``|S_u| <= delta - d_u - 1`` at each center."""
    centers = {s.center for s in stars}
    arcs = {(s.center, y) for s in stars for y in s.leaves}
    indeg: dict[int, int] = {}
    for _, y in arcs:
        indeg[y] = indeg.get(y, 0) + 1
    count: dict[int, int] = {}
    for s in stars:
        count[s.center] = count.get(s.center, 0) + 1
    for u in centers:
        if count[u] > delta - indeg.get(u, 0) - 1:
            return False
    return all(d <= delta - 1 for y, d in indeg.items() if y not in centers)


def oracle_star_max(
    n: int, delta: int, budget: int = DEFAULT_ORACLE_BUDGET, prune: bool = True
) -> StarOracleReport:
    """Largest rainbow K_{1,delta}-free multiset of K_{1,delta} stars on ``n``
    labeled vertices, by search over isomorphism classes of free multisets.

    Freeness is hereditary, so growing one star at a time from the empty
    family reaches every free family.  With ``prune``: at most ``delta-1``
    copies of one star (``delta`` copies already match copy ``i`` to leaf
    ``i``), the per-center and per-leaf degree bounds, and the size cap
    ``n(delta-1) - |C| delta`` against the best family found.
    """
    if delta < 2 or n < 2:
        raise ParameterError("need delta >= 2 and n >= 2")
    candidates = all_stars(n, delta)
    seen: set[CanonicalForm] = set()
    best: list[StarGraph] = []
    nodes = 0
    complete = True
    stack: list[list[StarGraph]] = [[]]
    while stack:
        family = stack.pop()
        nodes += 1
        if nodes > budget:
            complete = False
            break
        if len(family) > len(best):
            best = family
        if prune:
            centers = {s.center for s in family}
            if n * (delta - 1) - len(centers) * delta <= len(best):
                continue
        for s in candidates:
            if prune and family.count(s) >= delta - 1:
                continue
            grown = family + [s]
            if prune and not _degree_precheck(grown, delta):
                continue
            coll = star_collection(n, grown)
            if has_rainbow_star_bruteforce(coll, delta, sorted(s.vertices())):
                continue
            key = canonical_form(coll, "vertices_and_colors")
            if key in seen:
                continue
            seen.add(key)
            stack.append(grown)
    return StarOracleReport(n, delta, len(best), star_collection(n, best), complete, nodes, len(seen))


# ---------------------------------------------------------------- tree oracle


def labeled_trees(n: int, m: int) -> list[tuple[tuple[int, int], ...]]:
    """Every labeled tree of order ``n`` on the vertex set ``range(m)``."""
    out = []
    for labels in combinations(range(m), n):
        labels = list(labels)
        if n == 2:
            out.append((tuple(labels),))
            continue
        for code in product(range(n), repeat=n - 2):
            out.append(tuple(sorted(pruefer_decode(list(code), labels))))
    return out


@dataclass(frozen=True)
class TreeOracleReport:
    n: int
    m: int
    bound: int
    construction_size: int
    construction_free: bool
    free_classes_by_size: tuple[int, ...]
    counterexample: GraphCollection | None
    complete: bool
    nodes: int

    @property
    def tight_below(self) -> bool:
        return self.construction_size == self.bound and self.construction_free

    @property
    def confirmed_above(self) -> bool:
        return self.complete and self.counterexample is None

    @property
    def confirmed(self) -> bool:
        return self.tight_below and self.confirmed_above

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "bound": self.bound,
            "construction_size": self.construction_size,
            "construction_free": self.construction_free,
            "free_classes_by_size": list(self.free_classes_by_size),
            "counterexample": None,
            "complete": self.complete,
            "lower_bound_only": not self.complete,
            "confirmed": self.confirmed,
            "nodes": self.nodes,
        }


def oracle_tree_threshold(n: int, m: int, budget: int = DEFAULT_ORACLE_BUDGET) -> TreeOracleReport:
    """Check the tree bound in both directions.

    Below: the block construction has ``bound`` trees and no rainbow tree of
    order ``n``.  Above: every multiset of ``bound + 1`` trees of order ``n``
    on ``m`` vertices has one.  Free multisets are grown one tree at a time
    and kept one per isomorphism class; no free class may survive to size
    ``bound + 1``.
    """
    bound = tree_bound(n, m)
    family = construct_tree_family(n, m, "path")
    construction_free = not has_rainbow_tree_bruteforce(family, n)
    trees = labeled_trees(n, m)
    level = [GraphCollection(m)]
    sizes = [1]
    nodes = 0
    complete = True
    counterexample = None
    for _ in range(bound + 1):
        seen: dict[CanonicalForm, GraphCollection] = {}
        for rep in level:
            for tr in trees:
                nodes += 1
                if nodes > budget:
                    complete = False
                    break
                grown = rep.with_graph(tr)
                if has_rainbow_tree_bruteforce(grown, n):
                    continue
                seen.setdefault(canonical_form(grown, "vertices_and_colors"), grown)
            if not complete:
                break
        if not complete:
            break
        level = [seen[k] for k in sorted(seen)]
        sizes.append(len(level))
    if complete and len(sizes) == bound + 2 and sizes[-1]:
        counterexample = level[0]
    return TreeOracleReport(
        n, m, bound, len(family), construction_free, tuple(sizes), counterexample, complete, nodes
    )


# ---------------------------------------------------------------- saturation


@dataclass(frozen=True)
class SaturationReport:
    candidates: int
    counterexamples: tuple[StarGraph, ...] = field(default=())

    @property
    def saturated(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "saturated": self.saturated,
            "candidates": self.candidates,
            "counterexamples": [
                {"center": s.center, "leaves": sorted(s.leaves)} for s in self.counterexamples
            ],
        }


def saturation_check(
    collection: GraphCollection, delta: int, require_extremal: bool = True
) -> SaturationReport:
    """Add each K_{1,delta} on the vertex set in turn; report additions that
    leave the family rainbow-free."""
    stars_of(collection, delta)
    n = collection.vertex_count
    if find_rainbow_star(collection, delta) is not None:
        raise PreconditionError("collection already contains a rainbow star")
    if require_extremal:
        bound = star_bound(n, delta)
        if len(collection) != bound:
            raise PreconditionError(f"collection has {len(collection)} stars, extremal size is {bound}")
    bad = []
    candidates = all_stars(n, delta)
    for s in candidates:
        grown = collection.with_graph(s.edges())
        if find_rainbow_star(grown, delta, s.vertices()) is None:
            bad.append(s)
    return SaturationReport(len(candidates), tuple(bad))
