"""Hopcroft-Karp maximum bipartite matching.

Left and right vertices are ``0 .. num_left - 1`` and ``0 .. num_right - 1``.
Adjacency lists are scanned in the order given, so callers that pass sorted
lists get a deterministic matching.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

_FREE = -1


def hopcroft_karp(adj: Sequence[Sequence[int]], num_right: int) -> tuple[list[int], list[int]]:
    """Return ``(match_left, match_right)``; unmatched entries are ``-1``."""
    num_left = len(adj)
    match_left = [_FREE] * num_left
    match_right = [_FREE] * num_right
    inf = num_left + 1

    while True:
        # BFS layers from every free left vertex.
        dist = [inf] * num_left
        queue = deque()
        for u in range(num_left):
            if match_left[u] == _FREE:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                m = match_right[w]
                if m == _FREE:
                    found = True
                elif dist[m] == inf:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        if not found:
            return match_left, match_right

        # DFS along layers, iterative to stay clear of the recursion limit.
        pos = [0] * num_left
        for root in range(num_left):
            if match_left[root] != _FREE:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while pos[u] < len(adj[u]):
                    w = adj[u][pos[u]]
                    pos[u] += 1
                    m = match_right[w]
                    if m == _FREE:
                        # Augment along the stack.
                        for x in reversed(stack):
                            prev = match_left[x]
                            match_left[x] = w
                            match_right[w] = x
                            w = prev
                        stack = []
                        advanced = True
                        break
                    if dist[m] == dist[u] + 1:
                        stack.append(m)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()


def max_matching_size(adj: Sequence[Sequence[int]], num_right: int) -> int:
    match_left, _ = hopcroft_karp(adj, num_right)
    return sum(1 for w in match_left if w != _FREE)


def lex_min_matching(adj: Sequence[Sequence[int]], num_right: int, size: int) -> list[tuple[int, int]]:
    """A matching of ``size`` pairs, lexicographically least as a list of
    ``(left, right)`` pairs: lowest left vertices first, each with its lowest
    feasible right vertex.  Empty if no matching of that size exists."""
    taken_right: set[int] = set()
    pairs: list[tuple[int, int]] = []

    def feasible(start: int, need: int) -> bool:
        rest = [[w for w in adj[u] if w not in taken_right] for u in range(start, len(adj))]
        return max_matching_size(rest, num_right) >= need

    if not feasible(0, size):
        return []
    for u in range(len(adj)):
        if len(pairs) == size:
            break
        for w in sorted(adj[u]):
            if w in taken_right:
                continue
            taken_right.add(w)
            if feasible(u + 1, size - len(pairs) - 1):
                pairs.append((u, w))
                break
            taken_right.discard(w)
    return pairs
