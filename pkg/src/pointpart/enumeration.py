"""Exhaustive generation of critical graphs up to isomorphism, smallest
edge counts, and the closed-form reference bounds.

Generation walks multiplicity assignments of the vertex pairs in
lexicographic order. Sound pruning rules only: the multiplicity cap, the
minimum-degree floor of critical graphs, and an edge-count window derived
from the same two facts (lower end) and from the class-size cap of
strictly t-degenerate graphs after one deletion (upper end). Survivors
are deduplicated by canonical label, then filtered by the exact
criticality test. A completed run returning nothing is a definitive empty
class; running out of budget raises instead of returning partial data.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from . import kernel
from .coloring import chi_t
from .criticality import is_critical
from .decomposition import HOLDS, VIOLATION, t_dominating_census
from .errors import BudgetExceededError
from .multigraph import Multigraph

#: orders where exhaustive generation stays desk-scale, per t
FEASIBLE_ORDER = {1: 8, 2: 6, 3: 5, 4: 4}


@dataclass(frozen=True)
class EnumerationResult:
    t: int
    k: int
    n: int
    m: int  # effective multiplicity cap
    graphs: tuple[Multigraph, ...]  # canonical-label sorted, one per class
    labels: tuple[bytes, ...]
    ext: Optional[int]  # min edge count, None when the class is empty
    extremal: tuple[Multigraph, ...]
    nodes: int  # assignment-tree nodes visited


def _edge_window(t: int, k: int, n: int) -> tuple[int, int]:
    """Sound [min, max] edge counts for critical graphs with k colors.

    Minimum: every vertex needs degree >= t*(k-1). Maximum: after one
    deletion the graph splits into at most k-1 classes that each carry at
    most (t-1)*(size-1) edges, plus full-multiplicity cross pairs.
    """
    e_min = -(-(t * (k - 1) * n) // 2)
    if k == 1:
        return 0, 0
    parts = min(k - 1, n)
    qt, rm = divmod(n, parts)
    sizes = [qt + 1] * rm + [qt] * (parts - rm)
    within = sum(s * (s - 1) // 2 for s in sizes)
    e_max = 1 + (t - 1) * (n - parts) + t * (comb(n, 2) - within)
    return e_min, e_max


def _search(t: int, k: int, n: int, m_eff: int, budget: int,
            first_mult: Optional[int] = None) -> tuple[dict, int]:
    """Walk the assignment tree; return {canonical label: graph} and nodes.

    Raises BudgetExceededError past the node budget. Fixing ``first_mult``
    restricts the first pair, which is how parallel workers split the tree.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    P = len(pairs)
    e_min, e_max = _edge_window(t, k, n)
    deg_floor = t * (k - 1)
    # remaining pairs touching v strictly after index i
    rem = [[0] * n for _ in range(P + 1)]
    for i in range(P - 1, -1, -1):
        u, v = pairs[i]
        for w in range(n):
            rem[i][w] = rem[i + 1][w] + (1 if w == u or w == v else 0)
    mat = bytearray(n * n)
    deg = [0] * n
    found: dict = {}
    state = {"nodes": 0}

    def leaf():
        g = Multigraph._from_matrix(n, bytes(mat))
        if n > 1 and not g.is_connected():
            return
        label = kernel.canonical_label(g.matrix, n)
        if label not in found:
            found[label] = g

    def rec(i: int, esum: int):
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise BudgetExceededError(f"enumeration t={t} k={k} n={n}", budget)
        if i == P:
            if esum >= e_min:
                leaf()
            return
        u, v = pairs[i]
        tail = P - i - 1
        lo = first_mult if (i == 0 and first_mult is not None) else 0
        hi = first_mult if (i == 0 and first_mult is not None) else m_eff
        for mult in range(lo, hi + 1):
            new_e = esum + mult
            if new_e > e_max:
                break
            if new_e + tail * m_eff < e_min:
                continue
            du = deg[u] + mult
            dv = deg[v] + mult
            if du + m_eff * rem[i + 1][u] < deg_floor:
                continue
            if dv + m_eff * rem[i + 1][v] < deg_floor:
                continue
            deg[u] = du
            deg[v] = dv
            mat[u * n + v] = mult
            mat[v * n + u] = mult
            rec(i + 1, new_e)
            deg[u] -= mult
            deg[v] -= mult
        mat[u * n + v] = 0
        mat[v * n + u] = 0

    if n == 1:
        state["nodes"] = 1
        leaf()
    else:
        rec(0, 0)
    return found, state["nodes"]


def _worker(args):
    t, k, n, m_eff, budget, first_mult = args
    try:
        found, nodes = _search(t, k, n, m_eff, budget, first_mult)
    except BudgetExceededError:
        return None, budget + 1
    return {label: g.matrix for label, g in found.items()}, nodes


def enumerate_critical(t: int, k: int, n: int, m: Optional[int] = None,
                       budget: Optional[int] = None, jobs: int = 1) -> EnumerationResult:
    """All critical graphs with k colors on n vertices, multiplicity <= m,
    one representative per isomorphism class, sorted by canonical label.

    Complete and sound within the budget; results carry the minimum edge
    count and its attaining subclass.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    budget = kernel.default_budget(budget)
    m_eff = min(m if m is not None else t, t)  # critical graphs never exceed t
    if k == 0 or k > n:
        return EnumerationResult(t, k, n, m_eff, (), (), None, (), 0)

    if jobs > 1 and n > 1:
        tasks = [(t, k, n, m_eff, budget, fm) for fm in range(m_eff + 1)]
        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            parts = pool.map(_worker, tasks)
        nodes = sum(pt[1] for pt in parts)
        if nodes > budget or any(pt[0] is None for pt in parts):
            raise BudgetExceededError(f"enumeration t={t} k={k} n={n}", budget)
        found: dict = {}
        for dct, _ in parts:
            for label, matbytes in dct.items():
                if label not in found:
                    found[label] = Multigraph._from_matrix(n, matbytes)
    else:
        found, nodes = _search(t, k, n, m_eff, budget)

    graphs = []
    labels = []
    for label in sorted(found):
        g = found[label]
        kk, _ = chi_t(g, t, budget)
        if kk != k:
            continue
        if is_critical(g, t, budget).is_critical:
            graphs.append(g)
            labels.append(label)
    ext_val: Optional[int] = None
    extremal: tuple[Multigraph, ...] = ()
    if graphs:
        ext_val = min(g.edge_count() for g in graphs)
        extremal = tuple(g for g in graphs if g.edge_count() == ext_val)
    return EnumerationResult(t, k, n, m_eff, tuple(graphs), tuple(labels),
                             ext_val, extremal, nodes)


def ext(t: int, k: int, n: int, m: Optional[int] = None,
        budget: Optional[int] = None, jobs: int = 1) -> tuple[Optional[int], tuple[Multigraph, ...]]:
    """Minimum edge count over the enumerated class and its attaining
    graphs; (None, ()) for a (definitively) empty class."""
    res = enumerate_critical(t, k, n, m, budget, jobs)
    return res.ext, res.extremal


@dataclass(frozen=True)
class BoundFormulas:
    """Closed-form reference values; fields are None outside their range."""

    t: int
    k: int
    n: int
    p: int
    min_degree_bound: Optional[Fraction]  # t*(k-1)*n/2, k >= 1
    kostochka_yancey: Optional[Fraction]  # t=1 family, n >= k >= 4, n != k+1
    gallai_ext_value: Optional[int]  # t=1 exact value, 2 <= p <= k-1
    even_t_ext_value: Optional[int]  # even t exact value, 1 <= p <= k-1
    sparse_census_bound: Optional[int]  # t*C(n,2) - t*p^2, 2 <= p <= k-2


def bound_formulas(t: int, k: int, n: int, p: Optional[int] = None) -> BoundFormulas:
    """Pure arithmetic; no graph computation."""
    if p is None:
        p = n - k
    min_deg = Fraction(t * (k - 1) * n, 2) if k >= 1 else None
    ky = None
    if n >= k >= 4 and n != k + 1:
        ky = Fraction((k + 1) * (k - 2) * n - k * (k - 3), 2 * (k - 1))
    gallai = None
    if 2 <= p <= k - 1:
        gallai = comb(n, 2) - (p * p + 1)
    even_t = None
    if t % 2 == 0 and 1 <= p <= k - 1:
        even_t = t * comb(n, 2) - (t // 2) * (2 * p + 1) * p
    sparse = None
    if 2 <= p <= k - 2:
        sparse = t * comb(n, 2) - t * p * p
    return BoundFormulas(t, k, n, p, min_deg, ky, gallai, even_t, sparse)


@dataclass(frozen=True)
class SparseCensusReport:
    t: int
    k: int
    n: int
    bound: int
    members_checked: int
    vacuous: bool
    verdict: str


def check_sparse_census_members(t: int, k: int, n: int,
                                budget: Optional[int] = None,
                                jobs: int = 1) -> SparseCensusReport:
    """Members with census (0, 0) must have at least t*C(n,2) - t*p^2 edges.

    Enumerates the class, filters to graphs with no single-vertex and no
    two-color factor, and asserts the bound on each.
    """
    p = n - k
    if not 2 <= p <= k - 2:
        raise ValueError(f"requires 2 <= n-k <= k-2, got n-k={p}")
    bound = t * comb(n, 2) - t * p * p
    res = enumerate_critical(t, k, n, budget=budget, jobs=jobs)
    checked = 0
    ok = True
    for g in res.graphs:
        if t_dominating_census(g, t, budget) == (0, 0):
            checked += 1
            if g.edge_count() < bound:
                ok = False
    return SparseCensusReport(t, k, n, bound, checked, checked == 0,
                              HOLDS if ok else VIOLATION)
