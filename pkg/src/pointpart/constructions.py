"""Named graph families and the two join constructions.

The Dirac join puts a fixed multiplicity between every cross pair; the
Hajos join deletes parallel edges in each operand, merges one endpoint
pair and re-wires the other. Vertex numbering is deterministic: first
operand first, second operand following (with its merged vertex folded
into the first operand's index).
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import Multigraph


def complete(k: int) -> Multigraph:
    """Simple complete graph on k vertices (k >= 0)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Multigraph(k, [(u, v, 1) for u in range(k) for v in range(u + 1, k)])


def cycle(n: int) -> Multigraph:
    """Cycle on n >= 2 vertices; n = 2 is the double edge."""
    if n < 2:
        raise ValueError("cycles need n >= 2")
    if n == 2:
        return Multigraph(2, [(0, 1, 2)])
    return Multigraph(n, [(v, (v + 1) % n, 1) for v in range(n)])


def s_clique(s: int, n: int) -> Multigraph:
    """Complete graph with every multiplicity s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return Multigraph(n, [(u, v, s) for u in range(n) for v in range(u + 1, n)])


def s_cycle(s: int, n: int) -> Multigraph:
    """Cycle with every multiplicity s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return cycle(n).inflated(s) if s > 1 else cycle(n)


def k3t(t: int) -> Multigraph:
    """The unique order-3 critical graph for two color classes.

    For even t: the triangle with multiplicity t/2 everywhere. For odd t:
    multiplicity (t+1)/2 everywhere, minus one parallel edge.
    """
    if t < 2:
        raise ValueError("defined for t >= 2")
    if t % 2 == 0:
        return s_clique(t // 2, 3)
    s = (t + 1) // 2
    return Multigraph(3, [(0, 1, s), (0, 2, s), (1, 2, s - 1)])


def gallai_dirac(k: int, y1: int) -> Multigraph:
    """Order 2k-1 member of the Dirac/Gallai family of sparse critical graphs.

    Two disjoint cliques (sizes k-2 and k-1, the latter split into Y1, Y2)
    with no edges across, plus two vertices v1, v2 where v_i is joined to
    the first clique and to Y_i. The Y-split is a parameter because
    different splits give non-isomorphic members.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if not 1 <= y1 <= k - 2:
        raise ValueError(f"split must satisfy 1 <= y1 <= {k - 2}")
    x = list(range(k - 2))
    ys = list(range(k - 2, 2 * k - 3))  # Y1 then Y2, sizes y1 and k-1-y1
    v1, v2 = 2 * k - 3, 2 * k - 2
    pairs = []
    for i, u in enumerate(x):
        for w in x[i + 1:]:
            pairs.append((u, w, 1))
    for i, u in enumerate(ys):
        for w in ys[i + 1:]:
            pairs.append((u, w, 1))
    for u in x:
        pairs.append((v1, u, 1))
        pairs.append((v2, u, 1))
    for u in ys[:y1]:
        pairs.append((v1, u, 1))
    for u in ys[y1:]:
        pairs.append((v2, u, 1))
    return Multigraph(2 * k - 1, pairs)


def dirac_join(G1: Multigraph, G2: Multigraph, l: int) -> Multigraph:
    """Disjoint union plus multiplicity l between every cross pair."""
    if l < 0:
        raise ValueError("join order must be >= 0")
    n1, n2 = G1.n, G2.n
    pairs = [(u, v, m) for u, v, m in G1.pairs()]
    pairs += [(u + n1, v + n1, m) for u, v, m in G2.pairs()]
    if l:
        pairs += [(u, v + n1, l) for u in range(n1) for v in range(n2)]
    return Multigraph(n1 + n2, pairs)


@dataclass(frozen=True)
class HajosSpec:
    """Operands and anchor pairs for a Hajos join of order l.

    Deletes l parallel (u_i, v_i) edges in each operand, identifies v1
    with v2 and adds l new edges between u1 and u2. Which l parallel
    copies get deleted is immaterial for a multigraph, so only the count
    is carried.
    """

    G1: Multigraph
    u1: int
    v1: int
    G2: Multigraph
    u2: int
    v2: int
    l: int = 1

    def __post_init__(self):
        if self.u1 == self.v1 or self.u2 == self.v2:
            raise ValueError("anchor vertices must be distinct")
        if self.l < 1:
            raise ValueError("join order must be >= 1")
        if self.G1.mult(self.u1, self.v1) < self.l:
            raise ValueError(
                f"first operand has multiplicity {self.G1.mult(self.u1, self.v1)} "
                f"< {self.l} at its anchor pair"
            )
        if self.G2.mult(self.u2, self.v2) < self.l:
            raise ValueError(
                f"second operand has multiplicity {self.G2.mult(self.u2, self.v2)} "
                f"< {self.l} at its anchor pair"
            )


def hajos_join(spec: HajosSpec) -> Multigraph:
    """Hajos join of the given spec; order n1+n2-1, edges e1+e2-l."""
    G1, G2, l = spec.G1, spec.G2, spec.l
    n1 = G1.n
    # second operand's vertices keep their relative order, v2 folds into v1
    idx = {}
    nxt = n1
    for v in range(G2.n):
        if v == spec.v2:
            idx[v] = spec.v1
        else:
            idx[v] = nxt
            nxt += 1
    a1, b1 = sorted((spec.u1, spec.v1))
    a2, b2 = sorted((spec.u2, spec.v2))
    out = []
    for u, v, m in G1.pairs():
        if (u, v) == (a1, b1):
            m -= l
        if m > 0:
            out.append((u, v, m))
    for u, v, m in G2.pairs():
        if (u, v) == (a2, b2):
            m -= l
        if m > 0:
            out.append((idx[u], idx[v], m))
    out.append((spec.u1, idx[spec.u2], l))
    return Multigraph(n1 + G2.n - 1, out)
