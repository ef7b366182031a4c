"""Criticality decisions and the structural classifications built on them.

A graph is critical when every proper subgraph needs fewer colors. Since
color demand drops by at most one per deleted edge or vertex, it is enough
to test single-edge deletions (plus isolated-vertex hygiene): per pair of
adjacent vertices one representative parallel edge suffices, because the
deleted multigraph does not depend on which copy is named.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring, chi_t
from .degeneracy import strictly_t_degenerate
from .multigraph import Multigraph, VertexSet

# Brooks-style classification outcomes
SK_FORM = "sK-form"
TC_ODD = "tC-odd"
T_REGULAR_K2 = "t-regular-k2"
STRICT = "strict-inequality"
VIOLATION = "VIOLATION"

# low-vertex block shapes, in the order they are tried
BLOCK_SK = "sK"
BLOCK_SC_ODD = "sC-odd"
BLOCK_T_REGULAR = "t-regular"
BLOCK_SD_SMALL = "sd-max-deg-t"
BLOCK_VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    is_critical: bool
    is_vertex_critical: bool
    edge_witnesses: dict  # (u, v) -> (k-1)-coloring of G minus one (u,v) edge
    failing_edge: Optional[tuple[int, int]]


def is_critical(G: Multigraph, t: int, budget: Optional[int] = None) -> CriticalityReport:
    """Full criticality report; k is always recomputed, witnesses validate.

    On the first pair whose deletion does not lower chi_t the scan stops
    and that pair is reported; witnesses gathered so far are kept.
    """
    k, _ = chi_t(G, t, budget)
    n = G.n
    if n == 0:
        return CriticalityReport(0, True, True, {}, None)
    if n == 1:
        return CriticalityReport(1, True, True, {}, None)
    if G.min_degree() == 0:
        # an isolated vertex can be dropped without losing colors
        return CriticalityReport(k, False, is_vertex_critical(G, t, budget), {}, None)
    witnesses: dict = {}
    for u, v, _m in G.pairs():
        kk, wit = chi_t(G.with_edge_removed(u, v), t, budget)
        if kk >= k:
            return CriticalityReport(
                k, False, is_vertex_critical(G, t, budget), witnesses, (u, v)
            )
        witnesses[(u, v)] = wit
    return CriticalityReport(k, True, True, witnesses, None)


def is_vertex_critical(G: Multigraph, t: int, budget: Optional[int] = None) -> bool:
    """True iff removing any single vertex lowers chi_t."""
    k, _ = chi_t(G, t, budget)
    for v in range(G.n):
        kv, _ = chi_t(G.without_vertex(v), t, budget)
        if kv >= k:
            return False
    return True


def critical_subgraph(
    G: Multigraph, t: int, budget: Optional[int] = None
) -> tuple[Multigraph, tuple[int, ...]]:
    """A critical subgraph with the same chi_t, plus its vertex map.

    Edges are test-deleted in lexicographic pair order; an edge survives
    only if its deletion at test time lowered chi_t, which by monotonicity
    keeps lowering it in the final graph. Degree-0 vertices are dropped
    afterwards (kept minimal single vertex for the one-color case).
    """
    if G.n == 0:
        return G, ()
    k, _ = chi_t(G, t, budget)
    H = G
    for u in range(G.n):
        for v in range(u + 1, G.n):
            while H.mult(u, v) > 0:
                cand = H.with_edge_removed(u, v)
                kk, _ = chi_t(cand, t, budget)
                if kk == k:
                    H = cand
                else:
                    break
    if k <= 1:
        return H.induced([0]), (0,)
    kept = tuple(v for v in range(H.n) if H.degree(v) > 0)
    return H.induced(kept), kept


def _is_uniform_clique(B: Multigraph) -> Optional[int]:
    """s if B equals the complete graph with every multiplicity s."""
    if B.n == 1:
        return 1
    s = None
    for u in range(B.n):
        for v in range(u + 1, B.n):
            m = B.mult(u, v)
            if m == 0:
                return None
            if s is None:
                s = m
            elif m != s:
                return None
    return s


def _is_uniform_cycle(B: Multigraph) -> Optional[tuple[int, int]]:
    """(s, n) if B is a cycle of length n >= 3 with every multiplicity s."""
    n = B.n
    if n < 3:
        return None
    s = None
    for v in range(n):
        nbrs = B.support_neighbors(v)
        if len(nbrs) != 2:
            return None
        for u in nbrs:
            m = B.mult(v, u)
            if s is None:
                s = m
            elif m != s:
                return None
    if not B.is_connected():
        return None
    return s, n


@dataclass(frozen=True)
class LowVertexReport:
    k: int
    low: VertexSet  # degree exactly t*(k-1)
    high: VertexSet
    block_classification: tuple  # (block vertices, shape, params) triples


def low_vertex_analysis(G: Multigraph, t: int, budget: Optional[int] = None) -> LowVertexReport:
    """Classify the blocks of the low-vertex subgraph of a critical graph.

    Each block must be a uniform clique sK_n (s <= t), a uniform odd cycle
    sC_n (s <= t), a connected t-regular graph, or strictly t-degenerate
    with max degree <= t; anything else is flagged VIOLATION. Shapes are
    tried in that fixed order.
    """
    rep = is_critical(G, t, budget)
    if not rep.is_critical:
        raise ValueError("low-vertex analysis requires a critical graph")
    k = rep.k
    floor = t * (k - 1)
    low = frozenset(v for v in range(G.n) if G.degree(v) == floor)
    high = frozenset(range(G.n)) - low
    low_sorted = sorted(low)
    sub = G.induced(low_sorted)
    blocks_out = []
    for blk in sub.blocks():
        B = sub.induced(sorted(blk))
        orig = frozenset(low_sorted[i] for i in blk)
        s = _is_uniform_clique(B)
        if s is not None and 1 <= s <= t:
            blocks_out.append((orig, BLOCK_SK, (s, B.n)))
            continue
        sc = _is_uniform_cycle(B)
        if sc is not None and sc[0] <= t and sc[1] % 2 == 1:
            blocks_out.append((orig, BLOCK_SC_ODD, sc))
            continue
        if B.n > 0 and all(B.degree(v) == t for v in range(B.n)):
            blocks_out.append((orig, BLOCK_T_REGULAR, (t,)))
            continue
        if strictly_t_degenerate(B, t).verdict and B.max_degree() <= t:
            blocks_out.append((orig, BLOCK_SD_SMALL, ()))
            continue
        blocks_out.append((orig, BLOCK_VIOLATION, ()))
    return LowVertexReport(k, low, high, tuple(blocks_out))


def brooks_equality_classify(G: Multigraph, t: int, budget: Optional[int] = None) -> str:
    """Where G sits relative to the ceil(max_degree/t)+1 upper bound.

    Returns one of sK-form / tC-odd / t-regular-k2 / strict-inequality,
    or VIOLATION when the bound and the known equality families disagree
    (which would falsify the classification this library checks).
    """
    if G.n == 0:
        raise ValueError("empty graph")
    if not G.is_connected():
        raise ValueError("graph must be connected")
    k, _ = chi_t(G, t, budget)
    bound = -(-G.max_degree() // t) + 1
    if k > bound:
        return VIOLATION
    if k < bound:
        return STRICT
    s = _is_uniform_clique(G)
    if s is not None and 1 <= s <= t and t % s == 0:
        p = (G.n - 1) * s
        if p % t == 0 and k == p // t + 1:
            return SK_FORM
    sc = _is_uniform_cycle(G)
    if sc is not None and sc[0] == t and sc[1] % 2 == 1 and k == 3:
        return TC_ODD
    if all(G.degree(v) == t for v in range(G.n)) and k == 2:
        return T_REGULAR_K2
    return VIOLATION
