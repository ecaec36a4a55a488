"""Rainbow star detection.

The largest rainbow star centered at ``v`` is a maximum matching between the
colors that have an edge at ``v`` and the neighbors of ``v``: color ``i`` may
take neighbor ``w`` when ``vw`` is an edge of graph ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CollectionError, PreconditionError
from .matching import lex_min_matching, max_matching_size
from .model import (
    GraphCollection,
    RainbowWitness,
    build_aux_digraph,
    normalize_edge,
    stars_of,
)
from .report import Check


def _star_matching(collection: GraphCollection, v: int):
    if not 0 <= v < collection.vertex_count:
        raise CollectionError(f"invalid vertex id {v}")
    by_color = collection.incidence[v]
    colors = sorted(by_color)
    neighbors = sorted({w for ns in by_color.values() for w in ns})
    slot = {w: j for j, w in enumerate(neighbors)}
    adj = [[slot[w] for w in by_color[c]] for c in colors]
    return colors, neighbors, adj


def _witness(v, colors, neighbors, adj, size) -> RainbowWitness:
    pairs = lex_min_matching(adj, len(neighbors), size)
    return RainbowWitness("star", tuple((normalize_edge(v, neighbors[j]), colors[i]) for i, j in pairs))


def star_capacity(collection: GraphCollection, v: int) -> int:
    """Size of the largest rainbow star centered at ``v``."""
    colors, neighbors, adj = _star_matching(collection, v)
    return max_matching_size(adj, len(neighbors))


def max_rainbow_star_at(collection: GraphCollection, v: int) -> tuple[int, RainbowWitness | None]:
    """Capacity at ``v`` and a witness of that size.

    Among maximum rainbow stars the witness takes the lowest color indices,
    each with the lowest available leaf.
    """
    colors, neighbors, adj = _star_matching(collection, v)
    size = max_matching_size(adj, len(neighbors))
    if not size:
        return 0, None
    return size, _witness(v, colors, neighbors, adj, size)


def star_capacities(collection: GraphCollection) -> dict[int, int]:
    """Largest rainbow star size centered at each vertex."""
    return {v: star_capacity(collection, v) for v in collection.vertices}


def find_rainbow_star(collection: GraphCollection, delta: int, vertices=None) -> RainbowWitness | None:
    """A rainbow K_{1,delta}, or None when the collection is rainbow K_{1,delta}-free.

    Only the given ``vertices`` are tried as centers when supplied.
    """
    if delta < 2:
        raise ValueError("delta must be at least 2")
    for v in collection.vertices if vertices is None else sorted(vertices):
        if len(collection.incidence[v]) < delta:
            continue
        colors, neighbors, adj = _star_matching(collection, v)
        if max_matching_size(adj, len(neighbors)) >= delta:
            return _witness(v, colors, neighbors, adj, delta)
    return None


@dataclass(frozen=True)
class StarClaimReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def check_claim_star1(collection: GraphCollection, delta: int) -> StarClaimReport:
    """Degree bounds every rainbow K_{1,delta}-free star family satisfies.

    For each center ``u``: ``|S_u| <= delta - d_u - 1`` where ``d_u`` is the
    in-degree of ``u`` among centers; for each leaf ``v``:
    ``indeg(v) <= delta - 1``; globally ``|S| <= n(delta-1) - |C| delta``.
    """
    stars = stars_of(collection, delta)
    if find_rainbow_star(collection, delta) is not None:
        raise PreconditionError("collection contains a rainbow star")
    dg = build_aux_digraph(collection)
    n = collection.vertex_count
    checks = []
    for u in sorted(dg.centers):
        count = sum(1 for s in stars if s.center == u)
        limit = delta - dg.d(u) - 1
        checks.append(Check(f"center-{u}", count <= limit, f"|S_u|={count}, delta-d_u-1={limit}"))
    for v in sorted(dg.leaves_set):
        checks.append(Check(f"leaf-{v}", dg.in_deg[v] <= delta - 1, f"indeg={dg.in_deg[v]}"))
    cap = n * (delta - 1) - len(dg.centers) * delta
    checks.append(Check("size-cap", len(stars) <= cap, f"|S|={len(stars)}, n(delta-1)-|C|delta={cap}"))
    return StarClaimReport(tuple(checks))
