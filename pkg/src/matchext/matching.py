"""Maximum matching, perfect-matching extension, and matching enumeration.

The matcher is the classical blossom-contraction augmenting-path algorithm
(O(V^3) style), which is what makes every extendability decision in this
package correct on non-bipartite graphs.  All tie-breaking is by lowest
vertex index, so results are deterministic across runs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .core import Edge, Graph, bits, mask_of

Matching = tuple[Edge, ...]


def _normalize(edges: Iterable[Edge]) -> Matching:
    return tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))


def validate_matching(g: Graph, matching: Iterable[Edge]) -> Matching:
    """Check that ``matching`` is a set of disjoint edges of ``g``."""
    m = _normalize(matching)
    seen = 0
    for u, v in m:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        pair = 1 << u | 1 << v
        if seen & pair:
            raise ValueError(f"matching reuses a vertex of ({u},{v})")
        seen |= pair
    return m


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g``.

    Exposed vertices are processed in increasing order and neighbours
    scanned in increasing order (after a greedy seed with the same order),
    so the returned matching is reproducible.
    """
    n = g.n
    nbr = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in nbr[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    def try_augment(root: int) -> bool:
        # BFS over even-level vertices, contracting blossoms at odd cycles;
        # on reaching an exposed vertex, flip the alternating path in place
        p = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            x = a
            while True:
                x = base[x]
                seen[x] = True
                if match[x] == -1:
                    break
                x = p[match[x]]
            y = b
            while not seen[base[y]]:
                y = p[match[y]]
            return base[y]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = True
                blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while queue:
            v = queue.popleft()
            for u in nbr[v]:
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] != -1 and p[match[u]] != -1):
                    cur = lca(v, u)
                    blossom = [False] * n
                    mark_path(v, cur, u, blossom)
                    mark_path(u, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[u] == -1:
                    p[u] = v
                    if match[u] == -1:
                        while u != -1:
                            pv = p[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[u]] = True
                    queue.append(match[u])
        return False

    for root in range(n):
        if match[root] == -1:
            try_augment(root)
    return _normalize((v, match[v]) for v in range(n) if match[v] > v)


def has_perfect_matching(g: Graph) -> bool:
    """True iff ``g`` has a perfect matching (vacuously true for n = 0)."""
    if g.n % 2:
        return False
    return 2 * len(maximum_matching(g)) == g.n


def extends_to_perfect(g: Graph, matching: Iterable[Edge]) -> Matching | None:
    """Extend ``matching`` to a perfect matching of ``g``, or ``None``.

    The extension deletes the matched vertices and matches the remainder
    from scratch.  Raises ``ValueError`` if ``matching`` is not a valid
    matching of ``g``.
    """
    m = validate_matching(g, matching)
    covered = mask_of(v for e in m for v in e)
    sub, keep = g.without(bits(covered))
    if sub.n % 2:
        return None
    rest = maximum_matching(sub)
    if 2 * len(rest) != sub.n:
        return None
    return _normalize(list(m) + [(keep[a], keep[b]) for a, b in rest])


def enumerate_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """Yield every size-``k`` matching of ``g`` exactly once.

    Matchings appear in lexicographic order of their (sorted) edge-index
    sequences; edges themselves are ordered lexicographically.  ``k = 0``
    yields exactly the empty matching.
    """
    if k < 0 or 2 * k > g.n:
        raise ValueError(f"matching size {k} out of range for order {g.n}")
    edges = g.edges()
    total = len(edges)
    picked: list[Edge] = []

    def rec(start: int, used: int) -> Iterator[Matching]:
        if len(picked) == k:
            yield tuple(picked)
            return
        need = k - len(picked)
        for i in range(start, total - need + 1):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            picked.append(edges[i])
            yield from rec(i + 1, used | 1 << u | 1 << v)
            picked.pop()

    yield from rec(0, 0)


def count_matchings(g: Graph, k: int) -> int:
    """Number of size-``k`` matchings (drains :func:`enumerate_matchings`)."""
    return sum(1 for _ in enumerate_matchings(g, k))
