"""Loopless multigraphs over vertex indices 0..n-1.

A multigraph is a symmetric multiplicity matrix stored as immutable bytes,
which keeps values hashable, cheap to copy and directly consumable by the
compute kernels. All operations are pure: they return new graphs.

Vertex sets are plain frozensets of indices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from . import kernel

VertexSet = frozenset

#: canonical_form refuses graphs above this order unless told otherwise
CANONICAL_MAX_DEFAULT = 10

_MAX_MULT = 255  # one byte per pair


class Multigraph:
    """Immutable loopless multigraph with per-pair edge multiplicities."""

    __slots__ = ("n", "_m", "_deg")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int, int]] = ()):
        """Build from ``(u, v, mult)`` triples; repeated pairs accumulate."""
        if n < 0 or n > 64:
            raise ValueError(f"vertex count {n} outside supported range 0..64")
        mat = bytearray(n * n)
        for u, v, m in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex pair ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if m < 0:
                raise ValueError("negative multiplicity")
            new = mat[u * n + v] + m
            if new > _MAX_MULT:
                raise ValueError(f"multiplicity {new} at ({u},{v}) exceeds {_MAX_MULT}")
            mat[u * n + v] = new
            mat[v * n + u] = new
        self.n = n
        self._m = bytes(mat)
        self._deg = tuple(sum(self._m[v * n:(v + 1) * n]) for v in range(n))

    @classmethod
    def _from_matrix(cls, n: int, mat: bytes) -> "Multigraph":
        g = object.__new__(cls)
        g.n = n
        g._m = mat
        g._deg = tuple(sum(mat[v * n:(v + 1) * n]) for v in range(n))
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def matrix(self) -> bytes:
        """Flat symmetric multiplicity matrix (row-major, n*n bytes)."""
        return self._m

    def mult(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no multiplicity for a vertex with itself")
        return self._m[u * self.n + v]

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def edge_count(self) -> int:
        return sum(self._deg) // 2

    def min_degree(self) -> int:
        return min(self._deg)

    def max_degree(self) -> int:
        return max(self._deg)

    def max_multiplicity(self) -> int:
        n = self.n
        return max((self._m[u * n + v] for u in range(n) for v in range(u + 1, n)), default=0)

    def vertices(self) -> range:
        return range(self.n)

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, mult) for every pair with mult > 0, u < v, lex order."""
        n = self.n
        m = self._m
        for u in range(n):
            row = u * n
            for v in range(u + 1, n):
                if m[row + v]:
                    yield u, v, m[row + v]

    def support_neighbors(self, v: int) -> list[int]:
        n = self.n
        row = v * n
        return [u for u in range(n) if self._m[row + u]]

    # -- derived graphs ----------------------------------------------------

    def induced(self, X) -> "Multigraph":
        """Subgraph induced by X, re-indexed along sorted(X)."""
        xs = sorted(X)
        n = self.n
        for v in xs:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
        k = len(xs)
        mat = bytearray(k * k)
        for i in range(k):
            row = xs[i] * n
            for j in range(i + 1, k):
                m = self._m[row + xs[j]]
                mat[i * k + j] = m
                mat[j * k + i] = m
        return Multigraph._from_matrix(k, bytes(mat))

    def without_vertex(self, v: int) -> "Multigraph":
        return self.induced([u for u in range(self.n) if u != v])

    def with_edge_removed(self, u: int, v: int) -> "Multigraph":
        """Remove one parallel edge of the (u, v) bundle."""
        if self.mult(u, v) < 1:
            raise ValueError(f"no edge between {u} and {v}")
        n = self.n
        mat = bytearray(self._m)
        mat[u * n + v] -= 1
        mat[v * n + u] -= 1
        return Multigraph._from_matrix(n, bytes(mat))

    def t_complement(self, t: int) -> "Multigraph":
        """Pairwise complement to multiplicity t (an involution)."""
        n = self.n
        mu = self.max_multiplicity()
        if mu > t:
            raise ValueError(f"max multiplicity {mu} exceeds t={t}")
        mat = bytearray(n * n)
        for u in range(n):
            row = u * n
            for v in range(n):
                if u != v:
                    mat[row + v] = t - self._m[row + v]
        return Multigraph._from_matrix(n, bytes(mat))

    def inflated(self, t: int) -> "Multigraph":
        """Every multiplicity scaled by t."""
        if t < 1:
            raise ValueError("inflation factor must be >= 1")
        n = self.n
        mat = bytearray(n * n)
        for i in range(n * n):
            m = self._m[i] * t
            if m > _MAX_MULT:
                raise ValueError("inflated multiplicity exceeds storage range")
            mat[i] = m
        return Multigraph._from_matrix(n, bytes(mat))

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[VertexSet]:
        """Connected components of the support graph, sorted by least vertex."""
        n = self.n
        seen = [False] * n
        out = []
        for s in range(n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                row = v * n
                for u in range(n):
                    if self._m[row + u] and not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def blocks(self) -> list[VertexSet]:
        """Maximal subgraphs without a separating vertex, as vertex sets.

        Standard low-point traversal on the support graph; isolated
        vertices form their own blocks. Block vertex sets pairwise
        intersect in at most one vertex (a cut vertex) and every edge lies
        inside exactly one block.
        """
        n = self.n
        if n == 0:
            raise ValueError("blocks of the empty graph are undefined")
        num = [0] * n  # discovery index, 0 = unvisited
        low = [0] * n
        parent = [-1] * n
        out: list[VertexSet] = []
        counter = [0]
        estack: list[tuple[int, int]] = []

        adj = [self.support_neighbors(v) for v in range(n)]

        def dfs(root: int) -> None:
            stack = [(root, iter(adj[root]))]
            counter[0] += 1
            num[root] = low[root] = counter[0]
            while stack:
                v, it = stack[-1]
                advanced = False
                for u in it:
                    if num[u] == 0:
                        parent[u] = v
                        estack.append((v, u))
                        counter[0] += 1
                        num[u] = low[u] = counter[0]
                        stack.append((u, iter(adj[u])))
                        advanced = True
                        break
                    elif u != parent[v] and num[u] < num[v]:
                        estack.append((v, u))
                        low[v] = min(low[v], num[u])
                if not advanced:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if low[v] >= num[p]:
                            block = set()
                            while estack:
                                a, b = estack[-1]
                                if num[a] >= num[v]:
                                    estack.pop()
                                    block.add(a)
                                    block.add(b)
                                else:
                                    break
                            if estack and estack[-1] == (p, v):
                                estack.pop()
                            block.add(p)
                            block.add(v)
                            out.append(frozenset(block))

        for s in range(n):
            if num[s] == 0:
                if not adj[s]:
                    counter[0] += 1
                    num[s] = counter[0]
                    out.append(frozenset([s]))
                else:
                    dfs(s)
        return out

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Multigraph) and self.n == other.n and self._m == other._m

    def __hash__(self) -> int:
        return hash((self.n, self._m))

    def __repr__(self) -> str:
        es = ", ".join(f"{u}-{v}x{m}" if m > 1 else f"{u}-{v}" for u, v, m in self.pairs())
        return f"Multigraph(n={self.n}, [{es}])"


# -- module-level operation surface ----------------------------------------


def induced_subgraph(G: Multigraph, X) -> tuple[Multigraph, tuple[int, ...]]:
    """Induced subgraph plus the index map (new index i -> old vertex)."""
    xs = tuple(sorted(X))
    return G.induced(xs), xs


def delete_edge(G: Multigraph, u: int, v: int) -> Multigraph:
    """Remove exactly one parallel edge of the (u, v) bundle."""
    return G.with_edge_removed(u, v)


def underlying_degree_stats(G: Multigraph) -> tuple[Optional[int], Optional[int], Optional[int]]:
    """(min degree, max degree, max multiplicity); all None for n = 0."""
    if G.n == 0:
        return None, None, None
    return G.min_degree(), G.max_degree(), G.max_multiplicity()


def components(G: Multigraph) -> list[VertexSet]:
    return G.components()


def blocks(G: Multigraph) -> list[VertexSet]:
    return G.blocks()


def t_complement(G: Multigraph, t: int) -> Multigraph:
    return G.t_complement(t)


def t_uniform_inflation(G: Multigraph, t: int) -> Multigraph:
    return G.inflated(t)


def canonical_form(G: Multigraph, max_n: int = CANONICAL_MAX_DEFAULT) -> bytes:
    """Canonical byte label; equal labels iff isomorphic. Bounded order."""
    if G.n > max_n:
        raise ValueError(f"canonical_form supports n <= {max_n}, got {G.n}")
    return kernel.canonical_label(G.matrix, G.n)
