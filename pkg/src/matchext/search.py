"""Isomorph-free exhaustive search for minimum-size graphs.

The generator produces exactly one representative per isomorphism class of
graphs with a prescribed degree sequence, by vertex augmentation with the
canonical-parent rule: a child is kept only when its newly added vertex is
a canonical choice for deletion (member of the first minimum-size cell of
the refined partition, minimising the deleted-graph code on ties), and
children of one parent are deduplicated by code.  Intermediate graphs are
pruned only with bounds valid for every induced subgraph of a realisation,
so the enumeration is complete; completeness is cross-checked against
labeled brute force in the tests.

``min_size_search`` drives the generator over increasing edge counts and
feasible degree sequences, filtering with the necessary conditions a
witness must satisfy (connectivity, parity, the independence bound) before
paying for a full definition-based check, and reports exhaustive class
counts so a "none" result is itself a machine check.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .canon import canon_code, canonical_form, equitable_cells, splitter_fingerprint
from .checkers import is_k_extendable, is_n_factor_critical
from .core import (
    DomainError,
    Graph,
    bipartition,
    bits,
    has_independent_set,
    has_vertex_connectivity_at_least,
    is_connected,
    is_graphical,
)
from .formats import from_graph6

FULL_SEARCH_MAX_ORDER = 12


# ---------------------------------------------------------------------------
# degree sequences


def feasible_degree_sequences(nu: int, edges: int, min_degree: int,
                              max_degree: int | None = None) -> list[tuple[int, ...]]:
    """All graphical non-increasing sequences of length ``nu`` summing to
    ``2*edges`` with entries in ``[min_degree, max_degree]``."""
    cap = nu - 1 if max_degree is None else min(max_degree, nu - 1)
    out: list[tuple[int, ...]] = []
    seq: list[int] = []

    def rec(remaining: int, slots: int, high: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(seq))
            return
        if remaining < slots * min_degree or remaining > slots * high:
            return
        lo = max(min_degree, remaining - (slots - 1) * high)
        for d in range(min(high, remaining - (slots - 1) * min_degree), lo - 1, -1):
            seq.append(d)
            rec(remaining - d, slots - 1, d)
            seq.pop()

    rec(2 * edges, nu, cap)
    return [s for s in out if is_graphical(s)]


# ---------------------------------------------------------------------------
# isomorph-free generation per degree sequence


def _delete_vertex(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    return tuple(((row >> (v + 1)) << v) | (row & low)
                 for u, row in enumerate(adj) if u != v)


def _canonical_child_fp(adj: tuple[int, ...], n: int):
    """Canonical-parent rule: the child's partition fingerprint when the
    last-added vertex is a canonical deletion, else ``None``.

    The canonical deletion lives among the minimum-degree vertices (callers
    reject children whose new vertex misses that degree before refining):
    it is the member of the first minimum-size cell of the leading
    minimum-degree run of the equitable partition that minimises, in order,
    the individualisation fingerprint and then the full code of the deleted
    graph.  Every key is isomorphism-invariant, so the parent class of an
    accepted child is well defined.  The fingerprint is returned so callers
    can reuse it as a cheap pre-key when deduplicating siblings.
    """
    cells, root_fp = equitable_cells(adj, n)
    mind = adj[n - 1].bit_count()
    cell = 0
    best_size = 0
    for c in cells:
        if adj[(c & -c).bit_length() - 1].bit_count() != mind:
            break  # cells are degree-pure and ordered by degree
        size = c.bit_count()
        if not cell or size < best_size:
            cell, best_size = c, size
    new_bit = 1 << (n - 1)
    if not cell & new_bit:
        return None
    if cell == new_bit:
        return root_fp
    own_fp = splitter_fingerprint(adj, cells, n - 1)
    ties = []
    for v in bits(cell ^ new_bit):
        fp = splitter_fingerprint(adj, cells, v)
        if fp < own_fp:
            return None
        if fp == own_fp:
            ties.append(v)
    if not ties:
        return root_fp
    own = canon_code(n - 1, _delete_vertex(adj, n - 1))
    if all(canon_code(n - 1, _delete_vertex(adj, v)) >= own for v in ties):
        return root_fp
    return None


def _sorted_desc(values) -> tuple[int, ...]:
    return tuple(sorted(values, reverse=True))


def _twin_classes(parent: tuple[int, ...], eligible: list[int]) -> list[list[int]]:
    """Group eligible vertices into interchangeable classes.

    Two vertices are interchangeable when swapping them is an automorphism
    of the parent (equal open or closed neighbourhoods); attaching the new
    vertex to either gives isomorphic children, so within a class only the
    number chosen matters and a fixed prefix is taken.
    """
    uf = list(range(len(eligible)))

    def find(a):
        while uf[a] != a:
            uf[a] = uf[uf[a]]
            a = uf[a]
        return a

    for key_of in (lambda v: parent[v], lambda v: parent[v] | 1 << v):
        groups: dict[int, int] = {}
        for i, v in enumerate(eligible):
            key = key_of(v)
            if key in groups:
                ra, rb = find(groups[key]), find(i)
                if ra != rb:
                    uf[ra] = rb
            else:
                groups[key] = i
    classes: dict[int, list[int]] = {}
    for i, v in enumerate(eligible):
        classes.setdefault(find(i), []).append(v)
    return list(classes.values())


class _LazyDedup:
    """Exact isomorphism dedup keyed by a cheap invariant fingerprint.

    Canonical codes are only computed when two candidates share a
    fingerprint; distinct fingerprints already certify non-isomorphism.
    """

    def __init__(self):
        self.buckets: dict[int, list[list]] = {}

    def add(self, fp: int, n: int, adj: tuple[int, ...]) -> bool:
        bucket = self.buckets.setdefault(fp, [])
        code = None
        if bucket:
            code = canon_code(n, adj)
            for entry in bucket:
                if entry[1] is None:
                    entry[1] = canon_code(n, entry[0])
                if entry[1] == code:
                    return False
        bucket.append([adj, code])
        return True


def enumerate_graphs(seq) -> Iterator[Graph]:
    """Yield one representative per isomorphism class with degree sequence
    ``seq`` (including disconnected graphs), in a deterministic order."""
    target = _sorted_desc(seq)
    n = len(target)
    if n == 0 or not is_graphical(target):
        if n == 0 and sum(target) == 0:
            yield Graph(0, (), 0)
        return
    m_target = sum(target) // 2
    maxd, mind = target[0], target[-1]
    level: list[tuple[int, ...]] = [(0,)]
    for k in range(1, n):
        future = n - k - 1  # vertices still to come after this addition
        last = future == 0
        nxt: list[tuple[int, ...]] = []
        final_dedup = _LazyDedup()
        for parent in level:
            degs = [row.bit_count() for row in parent]
            m_parent = sum(degs) // 2
            forced = 0
            eligible: list[int] = []
            dead = False
            for v in range(k):
                d = degs[v]
                if d + 1 + future < mind:
                    dead = True
                    break
                if d + future < mind:
                    if d >= maxd:
                        dead = True
                        break
                    forced |= 1 << v
                elif d < maxd:
                    eligible.append(v)
            if dead:
                continue
            nforced = forced.bit_count()
            lo = max(nforced, mind - future, m_target - m_parent - _max_future_edges(
                degs, k, future, maxd, extra=maxd))
            hi = min(maxd, nforced + len(eligible), m_target - m_parent)
            if not last:
                # the canonical deletion is a minimum-degree vertex, so an
                # acceptable new vertex cannot out-degree the parent minimum
                hi = min(hi, min(degs) + 1)
            if lo > hi:
                continue
            classes = _twin_classes(parent, eligible)
            sibling_dedup = None if last else _LazyDedup()
            for s_mask in _choice_masks(classes, forced, lo - nforced, hi - nforced):
                size = s_mask.bit_count()
                if not last and any(
                        degs[v] + (s_mask >> v & 1) < size for v in range(k)):
                    continue  # new vertex would not have minimum degree
                child = _extend(parent, s_mask, k)
                if not _child_feasible(child, k + 1, target, m_target, future, maxd, mind):
                    continue
                if last:
                    # completed graphs are deduplicated globally, which is
                    # cheaper than the parent rule once targets are regular
                    cells, fp = equitable_cells(child, k + 1)
                    if final_dedup.add(fp, k + 1, child):
                        nxt.append(child)
                    continue
                fp = _canonical_child_fp(child, k + 1)
                if fp is None:
                    continue
                if sibling_dedup.add(fp, k + 1, child):
                    nxt.append(child)
        nxt.sort()
        level = nxt
    for adj in level:
        if _sorted_desc(row.bit_count() for row in adj) == target:
            yield Graph(n, adj, m_target)


def _choice_masks(classes: list[list[int]], forced: int, lo: int, hi: int) -> Iterator[int]:
    """Masks ``forced | prefix picks`` taking ``lo..hi`` eligible vertices,
    a fixed prefix count per interchangeable class."""
    if hi < 0:
        return
    lo = max(lo, 0)
    caps = [len(c) for c in classes]
    rest = [0] * (len(classes) + 1)
    for i in range(len(classes) - 1, -1, -1):
        rest[i] = rest[i + 1] + caps[i]
    picks: list[int] = []

    def rec(i: int, need_lo: int, need_hi: int) -> Iterator[int]:
        if i == len(classes):
            if need_lo <= 0:
                mask = forced
                for cls, cnt in zip(classes, picks):
                    for v in cls[:cnt]:
                        mask |= 1 << v
                yield mask
            return
        top = min(caps[i], need_hi)
        bottom = max(0, need_lo - rest[i + 1])
        for cnt in range(bottom, top + 1):
            picks.append(cnt)
            yield from rec(i + 1, need_lo - cnt, need_hi - cnt)
            picks.pop()

    yield from rec(0, lo, hi)


def _extend(parent: tuple[int, ...], s_mask: int, k: int) -> tuple[int, ...]:
    rows = list(parent)
    m = s_mask
    while m:
        b = m & -m
        m ^= b
        rows[b.bit_length() - 1] |= 1 << k
    rows.append(s_mask)
    return tuple(rows)


def _max_future_edges(degs, k, future, maxd, extra) -> int:
    # endpoint-capacity bound on edges still to arrive after this addition
    cap_current = sum(min(maxd - d, future) for d in degs) + min(extra, future)
    return (cap_current + future * maxd) // 2


def _child_feasible(adj, n, target, m_target, future, maxd, mind) -> bool:
    degs = sorted((row.bit_count() for row in adj), reverse=True)
    if any(d > t for d, t in zip(degs, target)):
        return False
    m_now = sum(degs) // 2
    if m_now > m_target:
        return False
    if future == 0:
        return m_now == m_target
    cap = sum(min(maxd - d, future) for d in degs)
    if m_now + (cap + future * maxd) // 2 < m_target:
        return False
    return True


# ---------------------------------------------------------------------------
# search specification and report


@dataclass(frozen=True)
class Predicate:
    """What the search is looking for.

    ``kind`` is one of ``extendable_nonbipartite``, ``extendable_bipartite``
    or ``factor_critical``; ``value`` is the matching size k or deletion
    size n.
    """

    kind: str
    value: int

    KINDS = ("extendable_nonbipartite", "extendable_bipartite", "factor_critical")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown predicate kind {self.kind!r}")
        if self.value < 0:
            raise DomainError("predicate parameter must be non-negative")

    def describe(self) -> str:
        if self.kind == "factor_critical":
            return f"{self.value}-factor-critical"
        side = "bipartite" if self.kind == "extendable_bipartite" else "non-bipartite"
        return f"{self.value}-extendable {side}"


def default_min_degree(nu: int, predicate: Predicate) -> int:
    """Degree bound a witness must satisfy, by the structural necessities."""
    if predicate.kind == "factor_critical":
        return predicate.value + 1
    k = predicate.value
    if predicate.kind == "extendable_nonbipartite" and 4 * k >= nu:
        return max(k + 1, 2 * k)
    return k + 1


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one minimum-size search."""

    nu: int
    edge_budget: int
    predicate: Predicate
    min_degree: int | None = None
    degree_sequences: tuple[tuple[int, ...], ...] | None = None
    all_witnesses: bool = True
    fast: bool = False

    def resolved_min_degree(self) -> int:
        if self.min_degree is not None:
            return self.min_degree
        return default_min_degree(self.nu, self.predicate)


@dataclass
class SequenceCount:
    edges: int
    sequence: tuple[int, ...]
    classes: int
    witnesses: int


@dataclass
class SearchReport:
    """Everything a reader needs to re-check a search result.

    ``epsilon`` is the minimum size found (``None`` when the budget was
    exhausted), ``witnesses`` the graph6 canonical codes of every minimum
    attainer, ``pruned`` the per-filter rejection counters, and
    ``sequence_counts`` the exhaustive per-(edge count, degree sequence)
    class counts that back a "none" verdict.
    """

    nu: int
    predicate: Predicate
    min_degree: int
    edge_budget: int
    epsilon: int | None
    witnesses: list[str]
    graphs_examined: int
    pruned: dict[str, int]
    sequence_counts: list[SequenceCount]
    wall_time: float
    fast: bool

    def witness_graphs(self) -> list[Graph]:
        return [from_graph6(code) for code in self.witnesses]

    def as_dict(self) -> dict:
        return {
            "nu": self.nu,
            "predicate": {"kind": self.predicate.kind, "value": self.predicate.value},
            "min_degree": self.min_degree,
            "edge_budget": self.edge_budget,
            "epsilon": self.epsilon,
            "witnesses": list(self.witnesses),
            "graphs_examined": self.graphs_examined,
            "pruned": dict(self.pruned),
            "sequence_counts": [
                {"edges": c.edges, "sequence": list(c.sequence),
                 "classes": c.classes, "witnesses": c.witnesses}
                for c in self.sequence_counts
            ],
            "wall_time": self.wall_time,
            "fast": self.fast,
        }


# ---------------------------------------------------------------------------
# predicate evaluation with structural filters


_FILTER_ORDER = ("disconnected", "bipartiteness", "connectivity_bound",
                 "doubled_connectivity", "independence_bound", "full_check")


def _passes(g: Graph, predicate: Predicate, pruned: dict[str, int]) -> bool:
    kind, val = predicate.kind, predicate.value
    if not is_connected(g):
        pruned["disconnected"] += 1
        return False
    if kind in ("extendable_nonbipartite", "extendable_bipartite"):
        k = val
        bip = bipartition(g) is not None
        if bip != (kind == "extendable_bipartite"):
            pruned["bipartiteness"] += 1
            return False
        if not has_vertex_connectivity_at_least(g, k + 1):
            pruned["connectivity_bound"] += 1
            return False
        if kind == "extendable_nonbipartite":
            if 4 * k >= g.n and not has_vertex_connectivity_at_least(g, 2 * k):
                pruned["doubled_connectivity"] += 1
                return False
            if has_independent_set(g, g.n // 2 - k + 1):
                pruned["independence_bound"] += 1
                return False
        if not is_k_extendable(g, k).holds:
            pruned["full_check"] += 1
            return False
        return True
    # factor criticality
    n = val
    if n >= 1 and not has_vertex_connectivity_at_least(g, n):
        pruned["connectivity_bound"] += 1
        return False
    if not is_n_factor_critical(g, n).holds:
        pruned["full_check"] += 1
        return False
    return True


def _fast_sequence_filter(seqs, nu: int, budget: int, min_degree: int):
    """Keep sequences with enough minimum-degree vertices for the budget.

    With x vertices of degree d0 = min_degree and the rest of degree
    >= d0 + 1, the size bound gives x >= (d0+1)*nu - 2*budget; restricting
    to those sequences mirrors the counting step of the published
    minimum-size proofs.
    """
    x_bound = (min_degree + 1) * nu - 2 * budget
    return [s for s in seqs if s.count(min_degree) >= x_bound]


def min_size_search(spec: SearchSpec,
                    checkpoint: str | None = None,
                    progress: Callable[[str], None] | None = None) -> SearchReport:
    """Scan edge counts upward and return the minimum size plus witnesses.

    Stops at the first edge count carrying a witness; with
    ``all_witnesses`` every isomorphism class at that count is reported
    (sorted by canonical code), otherwise the scan of that count stops at
    the first hit.  Every witness is re-verified from a fresh parse of its
    canonical code before the report is returned.
    """
    if spec.nu > FULL_SEARCH_MAX_ORDER:
        raise DomainError(
            f"full searches are limited to order {FULL_SEARCH_MAX_ORDER}, got {spec.nu}")
    if spec.predicate.kind == "factor_critical":
        if (spec.nu - spec.predicate.value) % 2:
            raise DomainError("order and deletion size must have equal parity")
    elif spec.nu % 2:
        raise DomainError("extendability searches need even order")

    t0 = time.time()
    min_deg = spec.resolved_min_degree()
    pruned = {name: 0 for name in _FILTER_ORDER}
    counts: list[SequenceCount] = []
    examined = 0
    done_units = _load_checkpoint(checkpoint)
    epsilon = None
    witnesses: list[str] = []

    start = max((spec.nu * min_deg + 1) // 2, 0)
    for m in range(start, spec.edge_budget + 1):
        if spec.degree_sequences is not None:
            seqs = [_sorted_desc(s) for s in spec.degree_sequences
                    if sum(s) == 2 * m]
        else:
            seqs = feasible_degree_sequences(spec.nu, m, min_deg)
        if spec.fast:
            seqs = _fast_sequence_filter(seqs, spec.nu, spec.edge_budget, min_deg)
        level_witnesses: list[str] = []
        stop_early = False
        for seq in sorted(seqs, reverse=True):
            unit_key = f"{m}:{','.join(map(str, seq))}"
            if unit_key in done_units:
                unit = done_units[unit_key]
                examined += unit["classes"]
                level_witnesses.extend(unit["witnesses"])
                counts.append(SequenceCount(m, seq, unit["classes"], len(unit["witnesses"])))
                continue
            if progress:
                progress(f"edges={m} sequence={seq}")
            unit_wit: list[str] = []
            n_classes = 0
            for g in enumerate_graphs(seq):
                n_classes += 1
                if _passes(g, spec.predicate, pruned):
                    unit_wit.append(canonical_form(g).code.decode("ascii"))
                    if not spec.all_witnesses:
                        stop_early = True
                        break
            examined += n_classes
            counts.append(SequenceCount(m, seq, n_classes, len(unit_wit)))
            level_witnesses.extend(unit_wit)
            if not stop_early:
                _append_checkpoint(checkpoint, unit_key, n_classes, unit_wit)
            if stop_early:
                break
        if level_witnesses:
            epsilon = m
            witnesses = sorted(set(level_witnesses))
            break

    _verify_witnesses(witnesses, spec.predicate)
    return SearchReport(
        nu=spec.nu, predicate=spec.predicate, min_degree=min_deg,
        edge_budget=spec.edge_budget, epsilon=epsilon, witnesses=witnesses,
        graphs_examined=examined, pruned=pruned, sequence_counts=counts,
        wall_time=time.time() - t0, fast=spec.fast)


def _verify_witnesses(witnesses: list[str], predicate: Predicate) -> None:
    # soundness: re-check every reported witness from a fresh graph copy
    for code in witnesses:
        g = from_graph6(code)
        if predicate.kind == "factor_critical":
            ok = is_n_factor_critical(g, predicate.value).holds
        else:
            ok = (is_k_extendable(g, predicate.value).holds
                  and ((bipartition(g) is not None)
                       == (predicate.kind == "extendable_bipartite")))
        if not ok:
            raise AssertionError(f"witness {code} failed re-verification")


def _load_checkpoint(path: str | None) -> dict:
    if not path:
        return {}
    units = {}
    try:
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rec = json.loads(line)
                    units[rec["unit"]] = rec
    except FileNotFoundError:
        pass
    return units


def _append_checkpoint(path: str | None, unit: str, classes: int,
                       witnesses: list[str]) -> None:
    if not path:
        return
    with open(path, "a", encoding="ascii") as fh:
        fh.write(json.dumps({"unit": unit, "classes": classes,
                             "witnesses": witnesses}) + "\n")


# ---------------------------------------------------------------------------
# conjecture probe


@dataclass
class ProbeRow:
    nu: int
    edges: int
    exists: bool
    witnesses: list[str]


@dataclass
class ProbeReport:
    k: int
    bound: int
    rows: list[ProbeRow]
    consistent: bool

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "bound": self.bound,
            "rows": [{"nu": r.nu, "edges": r.edges, "exists": r.exists,
                      "witnesses": r.witnesses} for r in self.rows],
            "consistent": self.consistent,
        }


def conjecture_probe(k: int, nu_limit: int) -> ProbeReport:
    """Scan even orders for k-extendable non-bipartite graphs of size
    ``nu*(k+1)/2`` (necessarily (k+1)-regular).

    Consistency with the conjectured threshold means no witness below
    ``8k - 4``.  Orders are capped at 12, the full-search guardrail.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if nu_limit > FULL_SEARCH_MAX_ORDER:
        raise DomainError(f"probe limited to order {FULL_SEARCH_MAX_ORDER}")
    bound = 8 * k - 4
    rows: list[ProbeRow] = []
    pruned = {name: 0 for name in _FILTER_ORDER}
    predicate = Predicate("extendable_nonbipartite", k)
    for nu in range(2 * k + 2, nu_limit + 1, 2):
        edges = nu * (k + 1) // 2
        seq = tuple([k + 1] * nu)
        wit = []
        if is_graphical(seq):
            for g in enumerate_graphs(seq):
                if _passes(g, predicate, pruned):
                    wit.append(canonical_form(g).code.decode("ascii"))
        rows.append(ProbeRow(nu=nu, edges=edges, exists=bool(wit), witnesses=sorted(wit)))
    consistent = all(not r.exists or r.nu >= bound for r in rows)
    return ProbeReport(k=k, bound=bound, rows=rows, consistent=consistent)
