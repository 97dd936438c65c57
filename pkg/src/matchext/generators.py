"""Constructors for every graph family the toolkit studies.

All label arithmetic is reduced modulo the order, with representatives in
``0..n-1``.  The six numbered witness graphs ``G1..G6`` are fixed edge
lists: two cycles plus a chord set, reconstructed from their published
extension tables and pinned down here by order/size and the extendability
checks in the test suite.
"""

from __future__ import annotations

from .core import DomainError, Edge, Graph

PAPER_GRAPH_IDS = ("G1", "G2", "G3", "G4", "G5", "G6")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def harary(m: int, nu: int) -> Graph:
    """The Harary graph ``H_{m,nu}``: m-connected with ceil(m*nu/2) edges.

    For even ``m = 2r``, vertex ``i`` is joined to ``i-r..i+r`` around the
    cycle.  For odd ``m`` the circulant ``H_{2r,nu}`` gains diagonals:
    ``(i, i + nu/2)`` when ``nu`` is even, and the three-part asymmetric
    diagonal set when ``nu`` is odd.
    """
    if m < 2 or m >= nu:
        raise DomainError(f"harary graph needs 2 <= m < nu, got m={m}, nu={nu}")
    r = m // 2
    edges = [(i, (i + d) % nu) for i in range(nu) for d in range(1, r + 1)]
    if m % 2:
        if nu % 2 == 0:
            edges += [(i, i + nu // 2) for i in range(nu // 2)]
        else:
            edges.append((0, (nu - 1) // 2))
            edges.append((0, (nu + 1) // 2))
            edges += [(i, (i + (nu + 1) // 2) % nu) for i in range(1, (nu - 1) // 2)]
    return Graph.from_edges(nu, edges)


def harary_bipartite(m: int, two_s: int) -> Graph:
    """The balanced bipartite Harary variant ``HB_{m,2s}``.

    Parts are the even and the odd vertices.  An even vertex ``i`` is joined
    to the odd vertices in the window ``i-2r+1 .. i+2r-1`` (``m = 2r``) or
    ``i-2r+1 .. i+2r+1`` (``m = 2r+1``), modulo ``2s``; the result is
    m-regular with ``m*s`` edges.
    """
    if two_s % 2:
        raise DomainError(f"order must be even, got {two_s}")
    s = two_s // 2
    if m < 2 or m > s:
        raise DomainError(f"bipartite harary graph needs 2 <= m <= s, got m={m}, s={s}")
    r = m // 2
    hi = 2 * r - 1 if m % 2 == 0 else 2 * r + 1
    edges = []
    for i in range(0, two_s, 2):
        for j in range(i - 2 * r + 1, i + hi + 1, 2):
            edges.append((i, j % two_s))
    return Graph.from_edges(two_s, edges)


def wheel(nu: int) -> Graph:
    """Hub vertex ``nu-1`` joined to every vertex of the cycle ``0..nu-2``.

    Note the edge count is ``2(nu-1)``, not ``3*nu/2``; the search module is
    what produces minimum-size bicritical witnesses.
    """
    if nu < 4:
        raise DomainError(f"wheel needs at least 4 vertices, got {nu}")
    hub = nu - 1
    edges = [(i, (i + 1) % (nu - 1)) for i in range(nu - 1)]
    edges += [(i, hub) for i in range(nu - 1)]
    return Graph.from_edges(nu, edges)


def cycle_plus_two_chords(nu: int) -> Graph:
    """``C_nu`` plus chords (0,2) and (1,3): the nu+2 edge witness family."""
    if nu < 4 or nu % 2:
        raise DomainError(f"order must be even and >= 4, got {nu}")
    edges = [(i, (i + 1) % nu) for i in range(nu)]
    edges += [(0, 2), (1, 3)]
    return Graph.from_edges(nu, edges)


def double_complete_matching(k: int) -> Graph:
    """Two copies of ``K_{2k}`` joined by the perfect matching ``(i, i+2k)``.

    2k-regular on 4k vertices with ``4k^2`` edges.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    kk = 2 * k
    edges = [(i, j) for i in range(kk) for j in range(i + 1, kk)]
    edges += [(kk + i, kk + j) for i in range(kk) for j in range(i + 1, kk)]
    edges += [(i, i + kk) for i in range(kk)]
    return Graph.from_edges(4 * k, edges)


def dodecahedron() -> Graph:
    """The dodecahedral graph: cubic, 20 vertices, 30 edges, girth 5.

    Built as the generalized Petersen graph GP(10,2): outer 10-cycle
    ``0..9``, spokes to ``10..19``, inner vertices joined at step 2.
    """
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(i, 10 + i) for i in range(10)]
    edges += [(10 + i, 10 + (i + 2) % 10) for i in range(10)]
    return Graph.from_edges(20, edges)


def _two_cycles_plus_chords(n: int, cycle1: list[int], cycle2: list[int],
                            chords: list[Edge]) -> Graph:
    edges = [(cycle1[i], cycle1[(i + 1) % len(cycle1)]) for i in range(len(cycle1))]
    edges += [(cycle2[i], cycle2[(i + 1) % len(cycle2)]) for i in range(len(cycle2))]
    edges += chords
    return Graph.from_edges(n, edges)


def paper_graph(graph_id: str) -> Graph:
    """One of the six fixed extendability witnesses ``G1 .. G6``.

    (order, size) is (10,19), (12,20), (14,21), (16,24), (18,27), (22,33)
    respectively; G3..G6 are 3-regular.  G2 is the unique minimum-size
    2-extendable non-bipartite graph on 12 vertices.
    """
    if graph_id == "G1":
        g = harary_bipartite(3, 10)
        extra = [(0, 8), (2, 4), (1, 9), (3, 5)]
        return Graph.from_edges(10, g.edges() + extra)
    if graph_id == "G2":
        return _two_cycles_plus_chords(
            12, list(range(8)), [8, 9, 10, 11],
            [(0, 8), (2, 9), (4, 10), (6, 11), (1, 11), (3, 8), (5, 9), (7, 10)])
    if graph_id == "G3":
        return _two_cycles_plus_chords(
            14, list(range(8)), list(range(8, 14)),
            [(0, 4), (1, 12), (2, 8), (3, 10), (5, 11), (6, 13), (7, 9)])
    if graph_id == "G4":
        return _two_cycles_plus_chords(
            16, [0, 1, 2, 3], list(range(4, 16)),
            [(0, 4), (1, 7), (2, 10), (3, 13), (5, 9), (8, 12), (11, 15), (6, 14)])
    if graph_id == "G5":
        return _two_cycles_plus_chords(
            18, [0, 1, 2, 3, 4, 5], [6, 13, 7, 14, 8, 15, 9, 16, 10, 17, 11, 12],
            [(0, 6), (1, 7), (2, 8), (3, 9), (4, 10), (5, 11),
             (12, 15), (13, 16), (14, 17)])
    if graph_id == "G6":
        return _two_cycles_plus_chords(
            22, list(range(8)), list(range(8, 22)),
            [(0, 8), (1, 10), (2, 12), (3, 14), (4, 15), (5, 17), (6, 19),
             (7, 21), (9, 16), (11, 18), (13, 20)])
    raise DomainError(f"unknown paper graph id {graph_id!r}; expected one of {PAPER_GRAPH_IDS}")
