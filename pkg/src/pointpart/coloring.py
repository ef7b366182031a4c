"""Colorings whose classes induce strictly t-degenerate subgraphs.

Houses validation, the exact minimum color count (solved per component by
the branch-and-bound kernel), optimal-coloring enumeration, and the
singleton-class machinery: class hypergraphs, closed vertex sets, and
extreme colorings that pin a chosen vertex into a singleton class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import kernel
from .errors import BudgetExceededError
from .multigraph import Multigraph, VertexSet


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color assignment (colors are small ints >= 1)."""

    assignment: tuple[int, ...]
    t: int

    @property
    def n(self) -> int:
        return len(self.assignment)

    def color(self, v: int) -> int:
        return self.assignment[v]

    def used_colors(self) -> frozenset:
        return frozenset(self.assignment)

    def num_colors(self) -> int:
        """Number of used colors (non-empty classes)."""
        return len(set(self.assignment))

    def classes(self) -> tuple[VertexSet, ...]:
        """Non-empty color classes, ordered by least member."""
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            by_color.setdefault(c, []).append(v)
        return tuple(frozenset(vs) for vs in sorted(by_color.values(), key=lambda vs: vs[0]))

    def singletons(self) -> VertexSet:
        """Vertices sitting alone in their class."""
        counts: dict[int, int] = {}
        for c in self.assignment:
            counts[c] = counts.get(c, 0) + 1
        return frozenset(v for v, c in enumerate(self.assignment) if counts[c] == 1)

    def class_of(self, v: int) -> VertexSet:
        c = self.assignment[v]
        return frozenset(u for u, cu in enumerate(self.assignment) if cu == c)


def validate(G: Multigraph, phi: Coloring, t: Optional[int] = None) -> bool:
    """True iff every color class induces a strictly t-degenerate subgraph."""
    if phi.n != G.n:
        raise ValueError(f"assignment covers {phi.n} vertices, graph has {G.n}")
    tt = phi.t if t is None else t
    if tt < 1:
        raise ValueError("t must be >= 1")
    for cls in phi.classes():
        if not kernel.is_sd_subset(G.matrix, G.n, tt, tuple(sorted(cls))):
            return False
    return True


def greedy_upper_bound(G: Multigraph, t: int) -> int:
    """Sequential first-fit: place each vertex in the first class that
    stays strictly t-degenerate. Always an upper bound for chi_t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    k, _ = kernel.greedy_seed(G.matrix, G.n, t)
    return k


def brooks_upper_bound(G: Multigraph, t: int) -> int:
    """ceil(max_degree / t) + 1, valid for connected non-empty graphs."""
    if G.n == 0:
        raise ValueError("empty graph")
    if not G.is_connected():
        raise ValueError("graph must be connected")
    return -(-G.max_degree() // t) + 1


def chi_t(G: Multigraph, t: int, budget: Optional[int] = None) -> tuple[int, Coloring]:
    """Exact point partition number with a witness using exactly k colors.

    Components are solved independently (their optima combine by sharing
    color indices). Raises BudgetExceededError when the search budget runs
    out; never returns a wrong value.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    budget = kernel.default_budget(budget)
    n = G.n
    if n == 0:
        return 0, Coloring((), t)
    colors = [0] * n
    k = 0
    for comp in G.components():
        verts = sorted(comp)
        sub = G.induced(verts)
        cap = -(-sub.max_degree() // t) + 1
        res = kernel.chi_exact(sub.matrix, sub.n, t, cap, budget)
        if res is None:
            raise BudgetExceededError("chi_t solve", budget)
        ck, csol = res
        for i, v in enumerate(verts):
            colors[v] = csol[i]
        k = max(k, ck)
    return k, Coloring(tuple(colors), t)


def enumerate_optimal_colorings(
    G: Multigraph, t: int, budget: Optional[int] = None
) -> Iterator[Coloring]:
    """Yield one representative per optimal color-class partition.

    Partitions are walked in restricted-growth order (a vertex may only
    open the next fresh class index), which kills color-permutation
    duplicates; a class that already fails the peel is never extended.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    budget = kernel.default_budget(budget)
    n = G.n
    k, _ = chi_t(G, t, budget)
    if n == 0:
        yield Coloring((), t)
        return
    mat = G.matrix
    assign = [0] * n
    members: list[list[int]] = [[] for _ in range(k + 1)]
    nodes = 0

    def feasible(v: int, c: int) -> bool:
        w = 0
        for u in members[c]:
            w += mat[v * n + u]
        if w < t:
            return True
        return kernel.is_sd_subset(mat, n, t, tuple(members[c]) + (v,))

    def rec(v: int, used: int):
        nonlocal nodes
        if v == n:
            if used == k:
                yield Coloring(tuple(assign), t)
            return
        if used + (n - v) < k:
            return  # cannot still open enough classes
        top = min(used + 1, k)
        for c in range(1, top + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError("optimal coloring enumeration", budget)
            if feasible(v, c):
                assign[v] = c
                members[c].append(v)
                yield from rec(v + 1, max(used, c))
                members[c].pop()
                assign[v] = 0

    yield from rec(0, 0)


def extreme_coloring(
    G: Multigraph, t: int, v: int, budget: Optional[int] = None
) -> Coloring:
    """Optimal coloring with v in a singleton class and as few singleton
    classes as possible.

    Requires that removing v lowers chi_t (otherwise no optimal coloring
    puts v alone). Exhaustive over the optimal partitions.
    """
    k, _ = chi_t(G, t, budget)
    kv, _ = chi_t(G.without_vertex(v), t, budget)
    if kv >= k:
        raise ValueError(f"removing vertex {v} does not lower chi_t; no singleton coloring exists")
    best: Optional[Coloring] = None
    best_size = -1
    for phi in enumerate_optimal_colorings(G, t, budget):
        singles = phi.singletons()
        if v in singles:
            if best is None or len(singles) < best_size:
                best = phi
                best_size = len(singles)
    assert best is not None
    return best


@dataclass(frozen=True)
class ClassHypergraph:
    """Hypergraph whose edges are the size >= 2 classes of one or two
    colorings over a common vertex set."""

    n: int
    edges: tuple[VertexSet, ...]

    def isolated(self) -> VertexSet:
        covered = set()
        for e in self.edges:
            covered |= e
        return frozenset(v for v in range(self.n) if v not in covered)

    def components(self) -> list[VertexSet]:
        """Vertex sets of connected components (isolated vertices included)."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            it = iter(sorted(e))
            a = find(next(it))
            for b in it:
                rb = find(b)
                if rb != a:
                    parent[rb] = a
        groups: dict[int, set] = {}
        for v in range(self.n):
            groups.setdefault(find(v), set()).add(v)
        return [frozenset(g) for g in sorted(groups.values(), key=min)]


def class_hypergraph(phi1: Coloring, phi2: Optional[Coloring] = None) -> ClassHypergraph:
    """H(phi1) for one coloring, or the edge-set union for two."""
    edges = {c for c in phi1.classes() if len(c) >= 2}
    n = phi1.n
    if phi2 is not None:
        if phi2.n != n:
            raise ValueError("colorings cover different vertex sets")
        edges |= {c for c in phi2.classes() if len(c) >= 2}
    return ClassHypergraph(n, tuple(sorted(edges, key=sorted)))


def is_closed(phi: Coloring, X) -> bool:
    """X is closed under phi when every class lies inside X or misses it."""
    xs = frozenset(X)
    return all(c <= xs or not (c & xs) for c in phi.classes())


def recombine(phi1: Coloring, phi2: Coloring, X) -> Coloring:
    """Stitch phi1 restricted to X with phi2 restricted to the complement.

    X must be closed under both colorings, so classes are inherited whole;
    colors are renumbered 1..c in order of first appearance.
    """
    if phi1.n != phi2.n:
        raise ValueError("colorings cover different vertex sets")
    if phi1.t != phi2.t:
        raise ValueError("colorings target different degeneracy parameters")
    xs = frozenset(X)
    if not is_closed(phi1, xs):
        raise ValueError("X is not closed under the first coloring")
    if not is_closed(phi2, xs):
        raise ValueError("X is not closed under the second coloring")
    n = phi1.n
    raw: list[tuple[int, int]] = [(0, 0)] * n
    for v in range(n):
        if v in xs:
            raw[v] = (1, phi1.assignment[v])
        else:
            raw[v] = (2, phi2.assignment[v])
    remap: dict[tuple[int, int], int] = {}
    out = [0] * n
    for v in range(n):
        key = raw[v]
        if key not in remap:
            remap[key] = len(remap) + 1
        out[v] = remap[key]
    return Coloring(tuple(out), phi1.t)
