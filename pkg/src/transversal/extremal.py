"""Exact extremal sizes and the families attaining them.

Star families: the largest rainbow K_{1,Δ}-free collection of K_{1,Δ} stars on
``n`` vertices, expressed through ``n = a(2Δ-1) + b`` and
``b(Δ-1) = k1(2Δ-1) + k2``.  Tree families: at most ``m(n-2)/n`` trees of
order ``n`` on ``m`` vertices avoid a rainbow tree of order ``n``.

Star constructions put the centers on ``0 .. p-1`` and the remaining leaves on
``p .. n-1``.  With 1-based names ``x_i -> i - 1`` and ``y_j -> p + j - 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParameterError
from .model import GraphCollection, StarGraph, star_collection


@dataclass(frozen=True)
class StarParams:
    n: int
    delta: int
    a: int
    b: int
    k1: int
    k2: int

    @property
    def regime(self) -> str:
        """``"i"``, ``"ii"``, ``"iii"`` (k2 = Δ) or ``"iv"`` (a = 0)."""
        if self.a == 0:
            return "iv"
        if self.k2 < self.delta:
            return "i"
        if self.k2 > self.delta:
            return "ii"
        return "iii"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "k1": self.k1, "k2": self.k2}


def _check_star_args(n: int, delta: int) -> None:
    if delta < 2:
        raise ParameterError(f"delta must be at least 2, got {delta}")
    if n <= delta:
        raise ParameterError(f"need n >= delta + 1, got n={n}, delta={delta}")


def decompose_params(n: int, delta: int) -> StarParams:
    _check_star_args(n, delta)
    a, b = divmod(n, 2 * delta - 1)
    k1, k2 = divmod(b * (delta - 1), 2 * delta - 1)
    return StarParams(n, delta, a, b, k1, k2)


def star_bound(n: int, delta: int) -> int:
    P = decompose_params(n, delta)
    if P.a == 0:
        return (n - 1) ** 2 // 4
    base = P.a * (delta - 1) ** 2 + P.k1 * (delta - 1)
    if P.k2 <= delta:
        return base
    return base + P.k2 - delta


@dataclass(frozen=True)
class CLLayout:
    p: int
    q: int

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def centers(self) -> range:
        return range(self.p)

    @property
    def leaves(self) -> range:
        return range(self.p, self.p + self.q)

    def x(self, i: int) -> int:
        return i - 1

    def y(self, j: int) -> int:
        """Leaf ``y_j`` with the 1-based index read modulo ``q`` (residue 0 is ``y_q``)."""
        return self.p + (j - 1) % self.q


VARIANTS = ("auto", "case1", "case2", "case3")


def _resolve_variant(P: StarParams, variant: str) -> str:
    if variant not in VARIANTS:
        raise ParameterError(f"unknown variant {variant!r}")
    if P.a == 0:
        allowed = {"case3"}
    elif P.k2 < P.delta:
        allowed = {"case1"}
    elif P.k2 > P.delta:
        allowed = {"case2"}
    elif P.delta == 2:
        # The case-2 shape needs Δ-2 >= 1 copies at x_2; at Δ = 2 only case 1 exists.
        allowed = {"case1"}
    else:
        allowed = {"case1", "case2"}
    if variant == "auto":
        return min(allowed)
    if variant not in allowed:
        raise ParameterError(
            f"variant {variant} does not apply to n={P.n}, delta={P.delta} "
            f"(a={P.a}, k2={P.k2}); use one of {sorted(allowed)}"
        )
    return variant


def star_family_layout(n: int, delta: int, variant: str = "auto", centers: str = "floor") -> CLLayout:
    P = decompose_params(n, delta)
    case = _resolve_variant(P, variant)
    if case == "case1":
        p = P.a * (delta - 1) + P.k1
    elif case == "case2":
        p = P.a * (delta - 1) + P.k1 + 1
    else:
        if centers not in ("floor", "ceil"):
            raise ParameterError(f"centers must be 'floor' or 'ceil', got {centers!r}")
        # Odd n has a single admissible center count.
        p = (n - 1) // 2 if centers == "floor" else n // 2
    return CLLayout(p, n - p)


def construct_star_family(
    n: int, delta: int, variant: str = "auto", centers: str = "floor"
) -> GraphCollection:
    """An extremal rainbow K_{1,Δ}-free family of exactly ``star_bound(n, Δ)`` stars.

    ``centers`` picks ``|C| = floor((n-1)/2)`` or ``ceil((n-1)/2)`` for even
    ``n`` in the ``n <= 2Δ-2`` regime and is ignored otherwise.
    """
    P = decompose_params(n, delta)
    case = _resolve_variant(P, variant)
    layout = star_family_layout(n, delta, case, centers)
    p, q, d = layout.p, layout.q, delta
    x, y = layout.x, layout.y
    stars: list[StarGraph] = []

    def add(center: int, leaves, copies: int) -> None:
        leaves = frozenset(leaves)
        assert len(leaves) == d, (center, sorted(leaves))
        stars.extend([StarGraph(center, leaves)] * copies)

    if case == "case1":
        for i in range(1, p + 1):
            add(x(i), (y(j) for j in range((i - 1) * d + 1, i * d + 1)), d - 1)
    elif case == "case2":
        k2 = P.k2
        head = k2 - d + 1
        add(x(1), [y(j) for j in range(1, head + 1)] + [x(j) for j in range(2, 2 * d - k2 + 1)], d - 1)
        # The leaf windows continue right after y_head and wrap modulo q, so
        # the (p-1)d + head arcs into L cover every leaf exactly d-1 times.
        for i in range(2, p + 1):
            start = head + (i - 2) * d + 1
            copies = d - 2 if i <= 2 * d - k2 else d - 1
            add(x(i), (y(j) for j in range(start, start + d)), copies)
    else:
        # Each center also points at the next delta-q centers, cyclically mod p.
        shared = [layout.leaves[j] for j in range(q)]
        for i in range(1, p + 1):
            extra = [((i - 1 + j) % p) for j in range(1, d - q + 1)]
            add(x(i), shared + extra, q - 1)

    family = star_collection(n, stars)
    assert len(family) == star_bound(n, delta), (n, delta, len(family))
    return family


# ---------------------------------------------------------------- trees


def _check_tree_args(n: int, m: int) -> None:
    if n < 2:
        raise ParameterError(f"tree order must be at least 2, got {n}")
    if n > m:
        raise ParameterError(f"tree order {n} exceeds vertex count {m}")
    if m % n:
        raise ParameterError(f"tree order {n} does not divide vertex count {m}")


def tree_bound(n: int, m: int) -> int:
    _check_tree_args(n, m)
    return m * (n - 2) // n


def pruefer_decode(sequence: list[int], labels: list[int]) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``labels`` with Prüfer code ``sequence``
    (entries index into ``labels``)."""
    k = len(labels)
    if len(sequence) != k - 2:
        raise ValueError(f"Prüfer code for {k} labels must have length {k - 2}")
    degree = [1] * k
    for s in sequence:
        degree[s] += 1
    edges = []
    for s in sequence:
        leaf = next(i for i in range(k) if degree[i] == 1)
        edges.append((labels[leaf], labels[s]))
        degree[leaf] -= 1
        degree[s] -= 1
    u, v = (i for i in range(k) if degree[i] == 1)
    edges.append((labels[u], labels[v]))
    return [tuple(sorted(e)) for e in edges]


def random_spanning_tree(labels: list[int], rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labeled spanning tree on ``labels``."""
    if len(labels) == 2:
        return [tuple(sorted(labels))]
    return pruefer_decode([rng.randrange(len(labels)) for _ in range(len(labels) - 2)], labels)


TREE_KINDS = ("path", "star", "pruefer")


def construct_tree_family(n: int, m: int, kind: str = "path", seed: int | None = None) -> GraphCollection:
    """A member of the extremal tree class: ``m/n`` blocks ``[i n, (i+1) n)``,
    each carrying ``n - 2`` spanning trees of the block."""
    _check_tree_args(n, m)
    if kind not in TREE_KINDS:
        raise ParameterError(f"unknown tree kind {kind!r}")
    if kind == "pruefer" and seed is None:
        raise ParameterError("pruefer trees need an explicit seed")
    rng = random.Random(seed)
    graphs = []
    for block in range(m // n):
        labels = list(range(block * n, (block + 1) * n))
        for _ in range(n - 2):
            if kind == "path":
                edges = list(zip(labels, labels[1:]))
            elif kind == "star":
                edges = [(labels[0], v) for v in labels[1:]]
            else:
                edges = random_spanning_tree(labels, rng)
            graphs.append(tuple(edges))
    return GraphCollection(m, tuple(graphs))
