"""Membership tests for the extremal star class and the extremal tree class.

Star-class cases, with (a, b, k1, k2) recomputed from (n, Δ):

* ``i``   (a >= 1, k2 < Δ): Δ-1 stars per center, all leaves outside C,
  leaf in-degrees at most Δ-1.
* ``ii``  (a >= 1, k2 > Δ): one more center, ``2Δ-1-k2`` arcs among centers,
  center ``u`` carries ``Δ-1-d_u`` copies of one star, leaf in-degrees
  exactly Δ-1.
* ``iii`` (k2 = Δ): ``i`` or ``ii``.
* ``iv``  (a = 0): ``floor((n-1)^2/4)`` stars, center count by parity, the
  center digraph is ``(Δ-|L|)``-out-regular, every star contains L.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import NotAStarError, ParameterError, PreconditionError
from .extremal import decompose_params, star_bound
from .model import GraphCollection, build_aux_digraph, require_trees, stars_of
from .rainbow_star import find_rainbow_star
from .report import Check


@dataclass(frozen=True)
class CertificateReport:
    verdict: str
    matched_case: str
    checks: tuple[Check, ...]

    @property
    def member(self) -> bool:
        return self.verdict == "member"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "matched_case": self.matched_case,
            "checks": [c.to_json() for c in self.checks],
        }


def _case_i(collection, stars, dg, P) -> list[Check]:
    d = P.delta
    by_center = Counter(s.center for s in stars)
    want_size = P.a * (d - 1) ** 2 + P.k1 * (d - 1)
    want_c = P.a * (d - 1) + P.k1
    checks = [
        Check("i.size", len(stars) == want_size, f"|S|={len(stars)}, expected {want_size}"),
        Check("i.centers", len(dg.centers) == want_c, f"|C|={len(dg.centers)}, expected {want_c}"),
    ]
    bad = [u for u in sorted(dg.centers) if by_center[u] != d - 1]
    checks.append(Check("i.copies", not bad, f"centers without exactly {d - 1} stars: {bad}"))
    inner = [s.center for s in stars if s.leaves & dg.centers]
    checks.append(Check("i.leaves-in-L", not inner, f"stars with a center as leaf at: {sorted(set(inner))}"))
    high = [v for v in sorted(dg.leaves_set) if dg.in_deg[v] > d - 1]
    checks.append(Check("i.leaf-indegree", not high, f"leaves with in-degree > {d - 1}: {high}"))
    return checks


def _same_star_copies(stars, dg, delta, prefix) -> list[Check]:
    groups: dict[int, list] = {}
    for s in stars:
        groups.setdefault(s.center, []).append(s.leaves)
    mixed = [u for u, ls in sorted(groups.items()) if len(set(ls)) > 1]
    wrong = [u for u, ls in sorted(groups.items()) if len(ls) != delta - 1 - dg.d(u)]
    return [
        Check(f"{prefix}.identical-copies", not mixed, f"centers with differing stars: {mixed}"),
        Check(f"{prefix}.copy-count", not wrong, f"centers with |S_u| != delta-1-d_u: {wrong}"),
    ]


def _case_ii(collection, stars, dg, P) -> list[Check]:
    d = P.delta
    want_size = P.a * (d - 1) ** 2 + P.k1 * (d - 1) + P.k2 - d
    want_c = P.a * (d - 1) + P.k1 + 1
    want_arcs = 2 * d - 1 - P.k2
    arcs = len(dg.center_arcs)
    checks = [
        Check("ii.size", len(stars) == want_size, f"|S|={len(stars)}, expected {want_size}"),
        Check("ii.centers", len(dg.centers) == want_c, f"|C|={len(dg.centers)}, expected {want_c}"),
        Check("ii.center-arcs", arcs == want_arcs, f"|A(D[C])|={arcs}, expected {want_arcs}"),
    ]
    checks += _same_star_copies(stars, dg, d, "ii")
    off = [v for v in sorted(dg.leaves_set) if dg.in_deg[v] != d - 1]
    checks.append(Check("ii.leaf-indegree", not off, f"leaves with in-degree != {d - 1}: {off}"))
    return checks


def _case_iv(collection, stars, dg, P) -> list[Check]:
    n, d = P.n, P.delta
    want_size = (n - 1) ** 2 // 4
    c = len(dg.centers)
    allowed_c = {(n - 1) // 2} if n % 2 else {(n - 1) // 2, n // 2}
    L = dg.leaves_set
    checks = [
        Check("iv.size", len(stars) == want_size, f"|S|={len(stars)}, expected {want_size}"),
        Check("iv.centers", c in allowed_c, f"|C|={c}, allowed {sorted(allowed_c)}"),
    ]
    irregular = [u for u in sorted(dg.centers) if dg.center_out_deg(u) != d - len(L)]
    checks.append(
        Check("iv.out-regular", not irregular, f"centers with out-degree in D[C] != {d - len(L)}: {irregular}")
    )
    wide = [u for u in sorted(dg.centers) if dg.out_deg[u] != d]
    checks.append(Check("iv.out-degree", not wide, f"centers with out-degree in D != {d}: {wide}"))
    checks += _same_star_copies(stars, dg, d, "iv")
    missing = sorted({s.center for s in stars if not L <= s.leaves})
    checks.append(Check("iv.contains-L", not missing, f"centers whose stars miss part of L: {missing}"))
    return checks


def is_member_A(collection: GraphCollection, n: int, delta: int) -> CertificateReport:
    """Decide membership in the extremal rainbow K_{1,Δ}-free star class."""
    P = decompose_params(n, delta)
    if collection.vertex_count != n:
        raise ParameterError(f"collection has {collection.vertex_count} vertices, expected {n}")
    stars = stars_of(collection, delta)
    dg = build_aux_digraph(collection)
    regime = P.regime
    if regime == "iv":
        checks = _case_iv(collection, stars, dg, P)
        ok = all(c.passed for c in checks)
    elif regime == "i":
        checks = _case_i(collection, stars, dg, P)
        ok = all(c.passed for c in checks)
    elif regime == "ii":
        checks = _case_ii(collection, stars, dg, P)
        ok = all(c.passed for c in checks)
    else:
        ci = _case_i(collection, stars, dg, P)
        cii = _case_ii(collection, stars, dg, P)
        ok_i = all(c.passed for c in ci)
        ok_ii = all(c.passed for c in cii)
        ok = ok_i or ok_ii
        checks = ci + cii + [Check("iii.either", ok, f"(i) {'passes' if ok_i else 'fails'}, (ii) {'passes' if ok_ii else 'fails'}")]
    return CertificateReport("member" if ok else "non-member", regime if ok else "none", tuple(checks))


def is_member_B(collection: GraphCollection, n: int, m: int) -> CertificateReport:
    """Decide membership in the extremal class of order-``n`` tree collections on ``m`` vertices."""
    if m % n or n < 2 or n > m:
        raise ParameterError(f"need 2 <= n <= m and n | m, got n={n}, m={m}")
    if collection.vertex_count != m:
        raise ParameterError(f"collection has {collection.vertex_count} vertices, expected {m}")
    require_trees(collection, n)
    want = m * (n - 2) // n
    checks = [Check("B.size", len(collection) == want, f"t={len(collection)}, expected {want}")]
    blocks = Counter(collection.supports)
    supports = sorted(blocks, key=sorted)
    overlap = [
        (sorted(A), sorted(B))
        for i, A in enumerate(supports)
        for B in supports[i + 1:]
        if A & B
    ]
    checks.append(Check("B.disjoint-supports", not overlap, f"overlapping supports: {overlap}"))
    if n > 2:
        covered = frozenset().union(*supports) if supports else frozenset()
        checks.append(
            Check("B.cover", len(covered) == m, f"supports cover {len(covered)} of {m} vertices")
        )
    counts = {tuple(sorted(s)): c for s, c in blocks.items() if c != n - 2}
    checks.append(Check("B.block-counts", not counts, f"blocks without exactly {n - 2} trees: {counts}"))
    ok = all(c.passed for c in checks)
    return CertificateReport("member" if ok else "non-member", "B" if ok else "none", tuple(checks))


@dataclass(frozen=True)
class ExtremalStructureReport:
    center_count: int
    expected_center_counts: tuple[int, ...]
    certificate: CertificateReport

    @property
    def ok(self) -> bool:
        return self.center_count in self.expected_center_counts and self.certificate.member

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "centers": self.center_count,
            "expected_centers": list(self.expected_center_counts),
            "certificate": self.certificate.to_json(),
        }


def check_extremal_structure(collection: GraphCollection, n: int, delta: int) -> ExtremalStructureReport:
    """Center-count trichotomy plus class membership for a maximum free family."""
    P = decompose_params(n, delta)
    try:
        stars_of(collection, delta)
    except NotAStarError as exc:
        raise PreconditionError(str(exc)) from None
    bound = star_bound(n, delta)
    if len(collection) != bound:
        raise PreconditionError(f"collection has {len(collection)} stars, maximum is {bound}")
    if find_rainbow_star(collection, delta) is not None:
        raise PreconditionError("collection contains a rainbow star")
    base = P.a * (delta - 1) + P.k1
    if P.a == 0:
        expected = ((n - 1) // 2,) if n % 2 else ((n - 1) // 2, n // 2)
    elif P.k2 > delta:
        expected = (base + 1,)
    elif P.k2 < delta:
        expected = (base,)
    else:
        expected = (base, base + 1)
    dg = build_aux_digraph(collection)
    return ExtremalStructureReport(len(dg.centers), expected, is_member_A(collection, n, delta))
