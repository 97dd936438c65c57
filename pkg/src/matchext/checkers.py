"""Deciders for matching extendability and factor criticality.

``is_k_extendable`` and ``is_n_factor_critical`` are the definition-based
ground truth: they scan every size-k matching / every size-n deletion set
and ask the matcher for the remainder.  The two criterion-style checks
(neighbourhood surplus for bipartite graphs, odd-component counting for
factor criticality) are independent cross-checks, and the structural
validators turn the known necessary conditions on k-extendable graphs into
an executable report.

Parity and range violations raise :class:`~matchext.core.DomainError`
rather than returning ``False``: an ill-posed question must not be
conflated with a negative answer, or search statistics would be corrupted.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .core import (
    DomainError,
    Graph,
    bipartition,
    bits,
    has_independent_set,
    independence_number,
    is_connected,
    mask_of,
    odd_components,
    vertex_connectivity,
)
from .matching import (
    Matching,
    enumerate_matchings,
    extends_to_perfect,
    maximum_matching,
)


class CheckResult(NamedTuple):
    """Outcome of a universally quantified check plus its counterexample.

    ``witness`` is the lexicographically first failing object (a matching
    for extendability, a vertex tuple for factor criticality, a subset of
    one part for the bipartite surplus test) and ``None`` when ``holds`` is
    true.  For :func:`is_k_extendable`, ``holds=False`` with
    ``witness=None`` signals that no size-k matching exists at all.
    """

    holds: bool
    witness: tuple | None

    def __bool__(self) -> bool:
        return self.holds


def is_k_extendable(g: Graph, k: int) -> CheckResult:
    """Does every size-``k`` matching of ``g`` extend to a perfect matching?

    Requires ``g`` connected, even order, and ``0 <= k <= (n-2)/2``;
    anything else is a domain error.
    """
    if g.n % 2:
        raise DomainError(f"extendability needs even order, got {g.n}")
    if not is_connected(g):
        raise DomainError("extendability is defined for connected graphs")
    if not 0 <= 2 * k <= g.n - 2:
        raise DomainError(f"k must satisfy 0 <= k <= (n-2)/2, got k={k}, n={g.n}")
    seen_one = False
    for m in enumerate_matchings(g, k):
        seen_one = True
        if extends_to_perfect(g, m) is None:
            return CheckResult(False, m)
    if not seen_one:
        return CheckResult(False, None)
    return CheckResult(True, None)


def bipartite_k_extendable(g: Graph, k: int) -> CheckResult:
    """Neighbourhood-surplus criterion for bipartite extendability.

    For connected bipartite ``g`` with parts ``(U, W)``: k-extendable iff
    ``|U| = |W|`` and every nonempty ``X`` of ``U`` with ``|X| <= |U| - k``
    has ``|N(X)| >= |X| + k``.  Scans all subsets of the part containing
    vertex 0, so the part size is capped at 16.  On failure the witness is
    the first violating ``X`` (by size, then lexicographically); a
    ``None`` witness means the parts are unbalanced.
    """
    parts = bipartition(g)
    if parts is None:
        raise DomainError("graph is not bipartite")
    if not is_connected(g):
        raise DomainError("criterion requires a connected graph")
    if not 1 <= 2 * k <= g.n - 2:
        raise DomainError(f"k must satisfy 1 <= k <= (n-2)/2, got k={k}, n={g.n}")
    side = parts[0] if 0 in parts[0] else parts[1]
    if len(side) > 16:
        raise DomainError(f"part size {len(side)} exceeds the subset-scan limit 16")
    if 2 * len(side) != g.n:
        return CheckResult(False, None)
    for size in range(1, len(side) - k + 1):
        for xs in combinations(side, size):
            nbh = 0
            for v in xs:
                nbh |= g.adj[v]
            if nbh.bit_count() < size + k:
                return CheckResult(False, xs)
    return CheckResult(True, None)


def is_n_factor_critical(g: Graph, n: int) -> CheckResult:
    """Does ``g - S`` have a perfect matching for every ``|S| = n``?

    Requires ``0 <= n <= nu - 2`` and ``nu = n (mod 2)``; parity mismatch
    is a domain error.  The witness is the first failing deletion set.
    """
    if not 0 <= n <= g.n - 2:
        raise DomainError(f"n must satisfy 0 <= n <= nu - 2, got n={n}, nu={g.n}")
    if (g.n - n) % 2:
        raise DomainError(f"nu and n must have equal parity, got nu={g.n}, n={n}")
    for removed in combinations(range(g.n), n):
        sub, _ = g.without(removed)
        if 2 * len(maximum_matching(sub)) != sub.n:
            return CheckResult(False, removed)
    return CheckResult(True, None)


def n_factor_critical_tutte(g: Graph, n: int) -> bool:
    """Odd-component criterion: ``o(G - S) <= |S| - n`` for all ``|S| >= n``.

    Independent of the matcher; scans all vertex subsets, so the order is
    capped at 16.  Agrees with :func:`is_n_factor_critical` everywhere.
    """
    if g.n > 16:
        raise DomainError(f"subset scan limited to order 16, got {g.n}")
    if not 0 <= n <= g.n - 2:
        raise DomainError(f"n must satisfy 0 <= n <= nu - 2, got n={n}, nu={g.n}")
    if (g.n - n) % 2:
        raise DomainError(f"nu and n must have equal parity, got nu={g.n}, n={n}")
    adj = g.adj
    full = g.vertex_mask()
    for s_mask in range(1 << g.n):
        size = s_mask.bit_count()
        if size < n:
            continue
        avail = full & ~s_mask
        odd = 0
        while avail:
            comp = avail & -avail
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    m ^= b
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & avail & ~comp
                comp |= frontier
            odd += comp.bit_count() & 1
            avail &= ~comp
        if odd > size - n:
            return False
    return True


class LemmaCheck(NamedTuple):
    applies: bool
    holds: bool
    detail: str


class StructuralReport(NamedTuple):
    """Per-condition outcomes of :func:`validate_structural_lemmas`."""

    connectivity: LemmaCheck
    neighborhood_independence: LemmaCheck
    independence_bound: LemmaCheck
    doubled_connectivity: LemmaCheck

    @property
    def all_pass(self) -> bool:
        return all(c.holds for c in self if c.applies)

    def as_dict(self) -> dict:
        return {
            name: {"applies": c.applies, "holds": c.holds, "detail": c.detail}
            for name, c in zip(self._fields, self)
        }


def validate_structural_lemmas(g: Graph, k: int) -> StructuralReport:
    """Check the necessary conditions a k-extendable graph must satisfy.

    Report-only; the caller asserts (or has checked) k-extendability.
    Conditions: connectivity at least ``k+1``; the neighbourhood of every
    degree-``k+1`` vertex is independent; for non-bipartite graphs the
    independence number is at most ``nu/2 - k``, and when ``k >= nu/4`` the
    connectivity is at least ``2k``.  Any failure on a graph this package
    certifies as k-extendable is a bug, and the tests treat it as one.
    """
    kappa = vertex_connectivity(g) if g.n >= 2 else 0
    connectivity = LemmaCheck(True, kappa >= k + 1, f"kappa={kappa}, need >= {k + 1}")

    offender = None
    for u in range(g.n):
        if g.degree(u) == k + 1:
            nbh = list(bits(g.adj[u]))
            if any(g.has_edge(a, b) for i, a in enumerate(nbh) for b in nbh[i + 1:]):
                offender = u
                break
    neighborhood = LemmaCheck(
        True, offender is None,
        "all degree-(k+1) neighbourhoods independent" if offender is None
        else f"vertex {offender} has degree {k + 1} but adjacent neighbours")

    nonbip = bipartition(g) is None
    if nonbip:
        alpha = independence_number(g)
        bound = g.n // 2 - k
        independence = LemmaCheck(True, alpha <= bound, f"alpha={alpha}, need <= {bound}")
    else:
        independence = LemmaCheck(False, True, "bipartite: bound not applicable")

    if nonbip and 4 * k >= g.n:
        doubled = LemmaCheck(True, kappa >= 2 * k, f"kappa={kappa}, need >= {2 * k}")
    else:
        doubled = LemmaCheck(False, True, "applies only to non-bipartite with k >= nu/4")

    return StructuralReport(connectivity, neighborhood, independence, doubled)


def check_equivalence_small(g: Graph, k: int) -> bool:
    """Cross-check: k-extendability equals 2k-factor-criticality.

    Valid for connected non-bipartite graphs of even order at most 16 with
    ``k >= (nu + 2) / 4``; in that regime the two predicates coincide, so a
    ``False`` return indicates a checker bug.
    """
    if g.n > 16 or g.n % 2:
        raise DomainError(f"needs even order at most 16, got {g.n}")
    if not is_connected(g):
        raise DomainError("needs a connected graph")
    if bipartition(g) is not None:
        raise DomainError("equivalence holds for non-bipartite graphs only")
    if 4 * k < g.n + 2:
        raise DomainError(f"needs k >= (nu+2)/4, got k={k}, nu={g.n}")
    if not 0 <= 2 * k <= g.n - 2:
        raise DomainError(f"k out of range, got k={k}, nu={g.n}")
    return is_k_extendable(g, k).holds == is_n_factor_critical(g, 2 * k).holds
