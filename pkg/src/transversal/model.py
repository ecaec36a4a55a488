"""Graph collections on a shared vertex set, stars, witnesses and the
center/leaf digraph of a star collection.

Vertices are the integers ``0 .. vertex_count - 1``.  Edges are stored as
``(u, v)`` with ``u < v``; each graph keeps the insertion order of its edges so
that serialization is reproducible.  The position of a graph in
``GraphCollection.graphs`` is its color.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable, Sequence, Union

from .errors import CollectionError, NotAStarError, NotATreeError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GraphCollection:
    vertex_count: int
    graphs: tuple[tuple[Edge, ...], ...] = ()

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or isinstance(self.vertex_count, bool):
            raise CollectionError(f"vertex count must be an integer, got {self.vertex_count!r}")
        if self.vertex_count < 1:
            raise CollectionError(f"vertex count must be positive, got {self.vertex_count}")
        graphs = []
        for color, edges in enumerate(self.graphs):
            seen = set()
            normalized = []
            for edge in edges:
                if len(edge) != 2:
                    raise CollectionError(f"graph {color}: edge {edge!r} is not a pair")
                u, v = edge
                for x in (u, v):
                    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.vertex_count:
                        raise CollectionError(f"graph {color}: invalid vertex id {x!r}")
                if u == v:
                    raise CollectionError(f"graph {color}: self-loop at vertex {u}")
                e = normalize_edge(u, v)
                if e in seen:
                    raise CollectionError(f"graph {color}: duplicate edge {list(e)}")
                seen.add(e)
                normalized.append(e)
            graphs.append(tuple(normalized))
        object.__setattr__(self, "graphs", tuple(graphs))

    @classmethod
    def from_edge_lists(cls, vertex_count: int, edge_lists: Iterable[Iterable[Sequence[int]]]) -> GraphCollection:
        return cls(vertex_count, tuple(tuple(tuple(e) for e in edges) for edges in edge_lists))

    def __len__(self) -> int:
        return len(self.graphs)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def with_graph(self, edges: Iterable[Edge]) -> GraphCollection:
        return GraphCollection(self.vertex_count, self.graphs + (tuple(edges),))

    def without_graph(self, color: int) -> GraphCollection:
        return GraphCollection(self.vertex_count, self.graphs[:color] + self.graphs[color + 1:])

    @cached_property
    def edge_sets(self) -> tuple[frozenset[Edge], ...]:
        return tuple(frozenset(g) for g in self.graphs)

    @cached_property
    def supports(self) -> tuple[frozenset[int], ...]:
        """Vertex set spanned by the edges of each graph."""
        return tuple(frozenset(x for e in g for x in e) for g in self.graphs)

    @cached_property
    def incidence(self) -> tuple[dict[int, tuple[int, ...]], ...]:
        """Per vertex: sorted ``(color, neighbor)`` pairs over all graphs, as
        ``incidence[v][color] -> neighbors``."""
        table: list[dict[int, list[int]]] = [defaultdict(list) for _ in self.vertices]
        for color, g in enumerate(self.graphs):
            for u, v in g:
                table[u][color].append(v)
                table[v][color].append(u)
        return tuple({c: tuple(sorted(ns)) for c, ns in sorted(t.items())} for t in table)

    def has_edge(self, color: int, edge: Edge) -> bool:
        return normalize_edge(*edge) in self.edge_sets[color]


def loads_collection(text: Union[str, bytes]) -> GraphCollection:
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CollectionError(f"parse error: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data or "graphs" not in data:
        raise CollectionError('expected an object with "vertices" and "graphs"')
    graphs = data["graphs"]
    if not isinstance(graphs, list):
        raise CollectionError('"graphs" must be a list')
    edge_lists = []
    for color, g in enumerate(graphs):
        if not isinstance(g, dict) or not isinstance(g.get("edges"), list):
            raise CollectionError(f'graph {color}: expected an object with an "edges" list')
        # A "center" hint is accepted for forward compatibility; stars with
        # at least two edges determine their center, single-edge stars are
        # rejected wherever a star is required.
        center = g.get("center")
        if center is not None and (not isinstance(center, int) or not 0 <= center < data["vertices"]):
            raise CollectionError(f"graph {color}: invalid center {center!r}")
        for e in g["edges"]:
            if not isinstance(e, list) or len(e) != 2:
                raise CollectionError(f"graph {color}: edge {e!r} is not a pair")
        edge_lists.append([tuple(e) for e in g["edges"]])
    return GraphCollection.from_edge_lists(data["vertices"], edge_lists)


def load_collection(source: Union[IO, str, bytes]) -> GraphCollection:
    """Read a collection from a file object or a JSON document."""
    if hasattr(source, "read"):
        source = source.read()
    return loads_collection(source)


def collection_to_json(collection: GraphCollection) -> dict:
    return {
        "vertices": collection.vertex_count,
        "graphs": [{"edges": [list(e) for e in g]} for g in collection.graphs],
    }


def dumps_json(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def dump_collection(collection: GraphCollection, pretty: bool = False) -> str:
    return dumps_json(collection_to_json(collection), pretty)


# ---------------------------------------------------------------- stars


@dataclass(frozen=True)
class StarGraph:
    center: int
    leaves: frozenset[int]

    def __post_init__(self):
        if not self.leaves:
            raise NotAStarError("a star needs at least one leaf")
        if self.center in self.leaves:
            raise NotAStarError(f"center {self.center} is also a leaf")

    @property
    def size(self) -> int:
        return len(self.leaves)

    def edges(self) -> tuple[Edge, ...]:
        return tuple(normalize_edge(self.center, y) for y in sorted(self.leaves))

    def vertices(self) -> frozenset[int]:
        return self.leaves | {self.center}


def star_from_edges(edges: Sequence[Edge]) -> StarGraph:
    """Interpret an edge list as a star with at least two edges."""
    if len(edges) < 2:
        raise NotAStarError(
            f"graph with {len(edges)} edge(s) is not a star with a determined center"
        )
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    if len(common) != 1:
        raise NotAStarError(f"edges {[list(e) for e in edges]} do not share a unique center")
    (center,) = common
    return StarGraph(center, frozenset(u if v == center else v for u, v in edges))


def stars_of(collection: GraphCollection, delta: int | None = None) -> tuple[StarGraph, ...]:
    stars = []
    for color, g in enumerate(collection.graphs):
        try:
            s = star_from_edges(g)
        except NotAStarError as exc:
            raise NotAStarError(f"graph {color}: {exc}") from None
        if delta is not None and s.size != delta:
            raise NotAStarError(f"graph {color}: star has {s.size} leaves, expected {delta}")
        stars.append(s)
    return tuple(stars)


def star_collection(vertex_count: int, stars: Iterable[StarGraph]) -> GraphCollection:
    return GraphCollection(vertex_count, tuple(s.edges() for s in stars))


def star_multiset_at(collection: GraphCollection, u: int) -> list[StarGraph]:
    """All stars of a star collection centered at ``u``, in color order."""
    return [s for s in stars_of(collection) if s.center == u]


@dataclass(frozen=True)
class AuxDigraph:
    """Digraph with an arc ``(x, y)`` for each edge ``xy`` of a star centered at ``x``.

    ``center_in_deg[u]`` is the in-degree of a center ``u`` inside the digraph
    induced by the centers; since no arc leaves a non-center this equals its
    full in-degree.
    """

    vertex_count: int
    arcs: frozenset[tuple[int, int]]
    centers: frozenset[int]
    leaves_set: frozenset[int]
    in_deg: tuple[int, ...]
    out_deg: tuple[int, ...]
    center_in_deg: dict[int, int] = field(repr=False)

    @property
    def center_arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset(a for a in self.arcs if a[1] in self.centers)

    def d(self, u: int) -> int:
        return self.center_in_deg[u]

    def center_out_deg(self, u: int) -> int:
        return sum(1 for x, y in self.arcs if x == u and y in self.centers)

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(x for x, y in self.arcs if y == v)


def build_aux_digraph(collection: GraphCollection) -> AuxDigraph:
    stars = stars_of(collection)
    n = collection.vertex_count
    arcs = frozenset((s.center, y) for s in stars for y in s.leaves)
    centers = frozenset(s.center for s in stars)
    in_deg = [0] * n
    out_deg = [0] * n
    for x, y in arcs:
        out_deg[x] += 1
        in_deg[y] += 1
    return AuxDigraph(
        vertex_count=n,
        arcs=arcs,
        centers=centers,
        leaves_set=frozenset(range(n)) - centers,
        in_deg=tuple(in_deg),
        out_deg=tuple(out_deg),
        center_in_deg={u: sum(1 for x, y in arcs if y == u and x in centers) for u in sorted(centers)},
    )


# ---------------------------------------------------------------- trees


def is_tree(edges: Sequence[Edge]) -> bool:
    if not edges:
        return False
    verts = {x for e in edges for x in e}
    if len(edges) != len(verts) - 1:
        return False
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def require_trees(collection: GraphCollection, order: int | None = None) -> None:
    for color, g in enumerate(collection.graphs):
        if not is_tree(g):
            raise NotATreeError(f"graph {color} is not a tree")
        if order is not None and len(g) + 1 != order:
            raise NotATreeError(f"graph {color} has order {len(g) + 1}, expected {order}")


# ---------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class RainbowWitness:
    """A rainbow star or tree as ``((edge, color), ...)``.

    Star witnesses are listed by color; tree witnesses in growth order, so
    every prefix is itself a tree.  A tree witness with no edges is the
    single vertex ``root``.
    """

    kind: str
    edges: tuple[tuple[Edge, int], ...]
    root: int | None = None

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(c for _, c in self.edges)

    @property
    def vertices(self) -> frozenset[int]:
        vs = {x for e, _ in self.edges for x in e}
        if self.root is not None:
            vs.add(self.root)
        return frozenset(vs)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def truncated(self, edge_count: int) -> RainbowWitness:
        return RainbowWitness(self.kind, self.edges[:edge_count], self.root)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "edges": [{"edge": list(e), "color": c} for e, c in self.edges]}
        if self.kind == "tree":
            out["vertices"] = sorted(self.vertices)
        return out


def validate_witness(collection: GraphCollection, witness: RainbowWitness) -> bool:
    colors = [c for _, c in witness.edges]
    if len(set(colors)) != len(colors):
        return False
    for e, c in witness.edges:
        if not 0 <= c < len(collection) or not collection.has_edge(c, e):
            return False
    edges = [normalize_edge(*e) for e, _ in witness.edges]
    if len(set(edges)) != len(edges):
        return False
    if witness.kind == "star":
        if not edges:
            return False
        if len(edges) == 1:
            return True
        try:
            star_from_edges(edges)
        except NotAStarError:
            return False
        return True
    if witness.kind == "tree":
        if not edges:
            return witness.root is not None and 0 <= witness.root < collection.vertex_count
        return is_tree(edges) and (witness.root is None or witness.root in witness.vertices)
    return False
