"""Rainbow trees in collections of graphs, and the phase decomposition of a
tree collection into rainbow trees.

Every search grows trees by boundary edges, so tree witnesses list their
edges in growth order and each prefix is a tree.  Ties are broken by lowest
color, then lexicographically smallest edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceeded, ClaimViolation, NotATreeError, PreconditionError
from .matching import max_matching_size
from .model import Edge, GraphCollection, RainbowWitness, normalize_edge, require_trees
from .report import Check

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = DEFAULT_NODE_BUDGET


class _View:
    """Edges of the allowed colors with both endpoints at allowed vertices."""

    def __init__(self, collection: GraphCollection, forbidden_colors, forbidden_vertices):
        forbidden_vertices = frozenset(forbidden_vertices)
        forbidden_colors = frozenset(forbidden_colors)
        self.vertices = [v for v in collection.vertices if v not in forbidden_vertices]
        self.colors = []
        self.edges: dict[int, list[Edge]] = {}
        for c, g in enumerate(collection.graphs):
            if c in forbidden_colors:
                continue
            es = sorted(e for e in g if e[0] not in forbidden_vertices and e[1] not in forbidden_vertices)
            if es:
                self.colors.append(c)
                self.edges[c] = es
        # nbr[c][x]: sorted neighbors of x in color c.
        self.nbr: dict[int, dict[int, list[int]]] = {}
        for c in self.colors:
            table: dict[int, list[int]] = {}
            for u, v in self.edges[c]:
                table.setdefault(u, []).append(v)
                table.setdefault(v, []).append(u)
            self.nbr[c] = {x: sorted(ys) for x, ys in table.items()}

    def components(self, floor: int = 0) -> list[tuple[frozenset[int], frozenset[int]]]:
        """Connected components of the union graph on vertices ``>= floor``,
        each with the set of colors having an edge inside it."""
        adj: dict[int, set[int]] = {v: set() for v in self.vertices if v >= floor}
        for c in self.colors:
            for u, v in self.edges[c]:
                if u >= floor and v >= floor:
                    adj[u].add(v)
                    adj[v].add(u)
        seen, out = set(), []
        for v in adj:
            if v in seen:
                continue
            comp, stack = {v}, [v]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            cols = frozenset(
                c for c in self.colors if any(u in comp and v in comp for u, v in self.edges[c])
            )
            out.append((frozenset(comp), cols))
        return out


def _boundary_edge(view: _View, color: int, inside: set[int]) -> Edge | None:
    for u, v in view.edges.get(color, ()):
        if (u in inside) != (v in inside):
            return (u, v)
    return None


def find_maximal_rainbow_tree(
    collection: GraphCollection,
    forbidden_colors: Iterable[int] = (),
    forbidden_vertices: Iterable[int] = (),
) -> RainbowWitness:
    """Greedy rainbow tree that no single unused-color boundary edge extends."""
    view = _View(collection, forbidden_colors, forbidden_vertices)
    if not view.vertices:
        raise PreconditionError("no vertices available")
    if not view.colors:
        return RainbowWitness("tree", (), root=view.vertices[0])
    c0 = view.colors[0]
    first = view.edges[c0][0]
    seq = [(first, c0)]
    inside = set(first)
    unused = view.colors[1:]
    grown = True
    while grown:
        grown = False
        for c in unused:
            e = _boundary_edge(view, c, inside)
            if e is not None:
                seq.append((e, c))
                inside.update(e)
                unused = [x for x in unused if x != c]
                grown = True
                break
    return RainbowWitness("tree", tuple(seq))


class _Search:
    def __init__(self, view: _View, best: RainbowWitness, target: float, budget: int):
        self.view = view
        self.best = best
        self.target = target
        self.budget = budget
        self.nodes = 0
        self.seen: set[tuple[int, int]] = set()
        self.cap = 0

    def done(self) -> bool:
        return self.best.order >= self.target or self.best.order >= self.cap

    def bound(self, inside: set[int], used: set[int], floor: int) -> int:
        """Order cap for any extension: each new vertex needs its own
        unused color with an edge at that vertex, reachable from the tree."""
        view = self.view
        free = [c for c in view.colors if c not in used]
        reach = set(inside)
        frontier = list(inside)
        while frontier:
            x = frontier.pop()
            for c in free:
                for y in view.nbr[c].get(x, ()):
                    if y >= floor and y not in reach:
                        reach.add(y)
                        frontier.append(y)
        new = sorted(reach - inside)
        if not new:
            return len(inside)
        touching = {}
        for c in free:
            hits = [i for i, y in enumerate(new) if any(z in reach for z in view.nbr[c].get(y, ()))]
            if hits:
                touching[c] = hits
        quick = len(inside) + min(len(new), len(touching))
        if quick <= self.best.order:
            return quick
        return len(inside) + max_matching_size(list(touching.values()), len(new))

    def run(self, root: int) -> None:
        self._dfs(root, {root}, 1 << root, set(), 0, [])

    def _dfs(self, root, inside, smask, used, umask, seq) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"rainbow tree search exceeded its budget of {self.budget} nodes", self.nodes
            )
        if len(inside) > self.best.order:
            self.best = RainbowWitness("tree", tuple(seq), root=None if seq else root)
            if self.done():
                return
        if self.bound(inside, used, root) <= self.best.order:
            return
        view = self.view
        for c in view.colors:
            if c in used:
                continue
            tried = set()
            for x in sorted(inside):
                for y in view.nbr[c].get(x, ()):
                    if y < root or y in inside or y in tried:
                        continue
                    tried.add(y)
                    key = (smask | (1 << y), umask | (1 << c))
                    if key in self.seen:
                        continue
                    self.seen.add(key)
                    inside.add(y)
                    used.add(c)
                    seq.append((normalize_edge(x, y), c))
                    self._dfs(root, inside, key[0], used, key[1], seq)
                    seq.pop()
                    used.discard(c)
                    inside.discard(y)
                    if self.done():
                        return


def find_max_rainbow_tree(
    collection: GraphCollection,
    limit_order: int | None = None,
    *,
    forbidden_colors: Iterable[int] = (),
    forbidden_vertices: Iterable[int] = (),
    budget: int = DEFAULT_NODE_BUDGET,
) -> RainbowWitness:
    """Rainbow tree of maximum order by branch and bound.

    Trees are enumerated from their smallest vertex, states are
    ``(vertex set, color set)`` pairs visited once, and branches are cut by a
    matching bound on how many more vertices unused colors can attach.  The
    search stops early once ``limit_order`` is reached.  Raises
    ``BudgetExceeded`` rather than returning a non-maximum tree.
    """
    forbidden_colors = frozenset(forbidden_colors)
    forbidden_vertices = frozenset(forbidden_vertices)
    best = find_maximal_rainbow_tree(collection, forbidden_colors, forbidden_vertices)
    view = _View(collection, forbidden_colors, forbidden_vertices)
    search = _Search(view, best, float("inf") if limit_order is None else limit_order, budget)
    search.cap = max(
        (min(len(comp), len(cols) + 1) for comp, cols in view.components()), default=1
    )
    if search.done():
        return search.best
    for root in view.vertices:
        comps = [cc for cc in view.components(root) if root in cc[0]]
        comp, cols = comps[0] if comps else (frozenset([root]), frozenset())
        if min(len(comp), len(cols) + 1) <= search.best.order:
            continue
        search.run(root)
        if search.done():
            break
    return search.best


def has_rainbow_tree_of_order(
    collection: GraphCollection, n: int, budget: int = DEFAULT_NODE_BUDGET
) -> tuple[bool, RainbowWitness | None]:
    if n <= 1:
        return True, RainbowWitness("tree", (), root=0)
    best = find_max_rainbow_tree(collection, limit_order=n, budget=budget)
    if best.order >= n:
        return True, best.truncated(n - 1)
    return False, None


# ---------------------------------------------------------------- decomposition


@dataclass(frozen=True)
class Phase:
    tree: RainbowWitness

    @property
    def vertices(self) -> frozenset[int]:
        return self.tree.vertices

    @property
    def colors(self) -> frozenset[int]:
        return self.tree.colors


@dataclass(frozen=True)
class Decomposition:
    """Phases ``(F_i, U_i, S_i)``; ``stranded`` lists colors no phase consumed.

    A color is stranded only when an earlier phase tree swallowed the whole
    vertex set of that graph, which needs a phase of order at least the tree
    order; it never happens for collections without a rainbow tree of that
    order.
    """

    strategy: str
    vertex_count: int
    graph_count: int
    phases: tuple[Phase, ...]
    stranded: frozenset[int] = frozenset()

    @property
    def s(self) -> int:
        return len(self.phases)

    @property
    def t(self) -> int:
        return self.graph_count

    def sizes(self) -> list[int]:
        return [len(p.vertices) for p in self.phases]


def _tree_order(collection: GraphCollection) -> int | None:
    require_trees(collection)
    orders = {len(g) + 1 for g in collection.graphs}
    if len(orders) > 1:
        raise NotATreeError(f"trees have mixed orders {sorted(orders)}")
    return orders.pop() if orders else None


STRATEGIES = ("exact", "greedy")


def decompose(
    collection: GraphCollection, strategy: str = "exact", budget: int = DEFAULT_NODE_BUDGET
) -> Decomposition:
    """Peel off a maximum (``exact``) or maximal (``greedy``) rainbow tree of
    the untouched graphs on the remaining vertices until no vertex is left."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    _tree_order(collection)
    used_colors: set[int] = set()
    used_vertices: set[int] = set()
    phases = []
    while len(used_vertices) < collection.vertex_count:
        if strategy == "exact":
            F = find_max_rainbow_tree(
                collection, forbidden_colors=used_colors, forbidden_vertices=used_vertices, budget=budget
            )
        else:
            F = find_maximal_rainbow_tree(collection, used_colors, used_vertices)
        phases.append(Phase(F))
        used_colors |= F.colors
        used_vertices |= F.vertices
    stranded = frozenset(range(len(collection))) - used_colors
    return Decomposition(strategy, collection.vertex_count, len(collection), tuple(phases), stranded)


@dataclass(frozen=True)
class RSet:
    """Earlier-phase colors whose graphs meet ``U_i`` (``phase`` is 1-based)."""

    phase: int
    colors: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.colors)


def _check_matches(decomposition: Decomposition, collection: GraphCollection) -> None:
    if decomposition.vertex_count != collection.vertex_count or decomposition.graph_count != len(collection):
        raise ValueError("decomposition does not belong to this collection")
    for p in decomposition.phases:
        for e, c in p.tree.edges:
            if not 0 <= c < len(collection) or not collection.has_edge(c, e):
                raise ValueError(f"phase edge {list(e)} is not in graph {c}")


def compute_R(
    decomposition: Decomposition, collection: GraphCollection, check_claims: bool = False
) -> list[RSet]:
    """``R_i`` for phases ``i >= 2``.

    With ``check_claims`` (for collections without a rainbow tree of the
    common tree order ``n``) raises ``ClaimViolation`` unless
    ``|U_i| + r_i <= n - 1`` for every ``i >= 2`` and
    ``sum r_i >= sum_{i < s} (|U_i| - 1)``.
    """
    _check_matches(decomposition, collection)
    out = []
    earlier: set[int] = set()
    phases = decomposition.phases
    for i, p in enumerate(phases):
        if i:
            hit = tuple(sorted(c for c in earlier if collection.supports[c] & p.vertices))
            out.append(RSet(i + 1, hit))
        earlier |= p.colors
    if check_claims and phases:
        n = _tree_order(collection)
        if n is not None:
            for rs in out:
                size = len(phases[rs.phase - 1].vertices)
                if size + rs.r > n - 1:
                    raise ClaimViolation(f"phase {rs.phase}: |U_i| + r_i = {size + rs.r} > n - 1 = {n - 1}")
            lhs = sum(rs.r for rs in out)
            rhs = sum(len(p.vertices) - 1 for p in phases[:-1])
            if lhs < rhs:
                raise ClaimViolation(f"sum of r_i = {lhs} < sum of (|U_i| - 1) over i < s = {rhs}")
    return out


def extend_through_R(
    decomposition: Decomposition,
    collection: GraphCollection,
    phase: int,
    bridge: tuple[Edge, int],
) -> RainbowWitness:
    """Grow ``F_i`` plus the bridging edge by one boundary edge from each
    other graph of ``R_i``; the result has order ``|U_i| + r_i``.

    ``phase`` is 1-based and at least 2; ``bridge`` is ``(edge, color)`` with
    the color in ``R_i`` and exactly one endpoint in ``U_i``.
    """
    if not 2 <= phase <= decomposition.s:
        raise ValueError(f"phase must be in 2..{decomposition.s}, got {phase}")
    rset = compute_R(decomposition, collection)[phase - 2]
    F = decomposition.phases[phase - 1].tree
    U = F.vertices
    edge, color = bridge
    edge = normalize_edge(*edge)
    if color not in rset.colors:
        raise PreconditionError(f"color {color} is not in R_{phase} = {list(rset.colors)}")
    if not collection.has_edge(color, edge):
        raise PreconditionError(f"edge {list(edge)} is not in graph {color}")
    if (edge[0] in U) == (edge[1] in U):
        raise PreconditionError(f"edge {list(edge)} does not have exactly one endpoint in U_{phase}")
    view = _View(collection, (), ())
    seq = list(F.edges) + [(edge, color)]
    inside = set(U) | set(edge)
    for c in rset.colors:
        if c == color:
            continue
        e = _boundary_edge(view, c, inside)
        if e is None:
            raise PreconditionError(
                f"graph {c} has no boundary edge at order {len(inside)}; "
                "the collection is not free of rainbow trees of its tree order"
            )
        seq.append((e, c))
        inside.update(e)
    root = F.root if not F.edges else None
    return RainbowWitness("tree", tuple(seq), root=root)


def check_decomposition(
    decomposition: Decomposition, collection: GraphCollection, free: bool
) -> list[Check]:
    """Structural checks of a decomposition.

    Always: ``U_i`` partition V, the ``S_i`` are disjoint and together with the
    stranded colors cover all colors, ``|S_i| = |U_i| - 1``,
    ``t - |stranded| = m - s``, untouched graphs avoid earlier phases, and a
    stranded color implies a phase of order ``>= n``.  With ``free`` (no
    rainbow tree of order n): no stranded colors, ``|U_i| <= n - 1``, the R-set
    inequalities, ``|U_s| = 1``, and ``s >= 2m/n``.
    """
    _check_matches(decomposition, collection)
    n = _tree_order(collection)
    m = collection.vertex_count
    phases = decomposition.phases
    sizes = decomposition.sizes()
    checks = []
    allv = [v for p in phases for v in p.vertices]
    checks.append(Check("U-partition", len(allv) == m and set(allv) == set(range(m)), f"|U_i|={sizes}"))
    allc = [c for p in phases for c in p.colors]
    cover = set(allc) | decomposition.stranded
    checks.append(
        Check(
            "S-partition",
            len(allc) == len(set(allc)) and cover == set(range(len(collection))) and not (set(allc) & decomposition.stranded),
            f"consumed {sorted(allc)}, stranded {sorted(decomposition.stranded)}",
        )
    )
    checks.append(
        Check("S-size", all(len(p.colors) == len(p.vertices) - 1 for p in phases), "|S_i| = |U_i| - 1")
    )
    balance = decomposition.t - len(decomposition.stranded)
    checks.append(Check("t=m-s", balance == m - decomposition.s, f"t-stranded={balance}, m-s={m - decomposition.s}"))
    leaks = []
    removed: set[int] = set()
    consumed: set[int] = set()
    for i, p in enumerate(phases):
        removed |= p.vertices
        consumed |= p.colors
        for c in range(len(collection)):
            if c in consumed or c in decomposition.stranded:
                continue
            if collection.supports[c] & removed:
                leaks.append((i + 1, c))
    checks.append(Check("isolation", not leaks, f"(phase, color) leaks: {leaks}"))
    if decomposition.stranded and n is not None:
        checks.append(
            Check("stranded-explained", max(sizes) >= n, f"stranded colors with max phase order {max(sizes)}")
        )
    if not free or n is None:
        return checks
    checks.append(Check("no-stranded", not decomposition.stranded, f"stranded {sorted(decomposition.stranded)}"))
    checks.append(Check("U<=n-1", max(sizes) <= n - 1, f"max |U_i| = {max(sizes)}"))
    rsets = compute_R(decomposition, collection)
    over = [(rs.phase, sizes[rs.phase - 1] + rs.r) for rs in rsets if sizes[rs.phase - 1] + rs.r > n - 1]
    checks.append(Check("U+r<=n-1", not over, f"violations (phase, |U_i|+r_i): {over}"))
    lhs = sum(rs.r for rs in rsets)
    rhs = sum(x - 1 for x in sizes[:-1])
    checks.append(Check("sum-r", lhs >= rhs, f"sum r_i={lhs}, sum_(i<s)(|U_i|-1)={rhs}"))
    checks.append(Check("U_s=1", sizes[-1] == 1, f"|U_s|={sizes[-1]}"))
    checks.append(Check("s>=2m/n", decomposition.s * n >= 2 * m, f"s={decomposition.s}, 2m/n={2 * m / n:g}"))
    return checks
