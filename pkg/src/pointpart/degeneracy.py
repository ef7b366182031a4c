"""Strict t-degeneracy decisions with certificates.

A graph is strictly t-degenerate when every non-empty subgraph has a
vertex of degree at most t-1; equivalently, iterated removal of vertices
of current degree below t empties the graph. The certificate is either
the elimination order or the surviving core (the unique maximal induced
subgraph of minimum degree >= t).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .multigraph import Multigraph, VertexSet


@dataclass(frozen=True)
class PeelCertificate:
    verdict: bool
    order: tuple[int, ...]  # elimination order, meaningful iff verdict
    core: VertexSet  # non-empty iff not verdict

    def __bool__(self) -> bool:
        return self.verdict


def strictly_t_degenerate(G: Multigraph, t: int) -> PeelCertificate:
    """Decide membership in the strictly t-degenerate class, with witness."""
    if t < 1:
        raise ValueError("t must be >= 1")
    ok, data = kernel.peel_subset(G.matrix, G.n, t, tuple(range(G.n)))
    if ok:
        return PeelCertificate(True, data, frozenset())
    return PeelCertificate(False, (), frozenset(data))


def peel_order_greedy(G: Multigraph, t: int) -> PeelCertificate:
    """Same contract as strictly_t_degenerate; the greedy peel behind
    ClassFeasibility, exposed for direct use."""
    return strictly_t_degenerate(G, t)


class ClassFeasibility:
    """Incremental membership checks for one growing color class.

    Holds a host graph and a member set; ``can_add`` answers whether the
    class stays strictly t-degenerate after one more vertex. Verdicts are
    identical to a full recompute (the class is simply re-peeled; classes
    stay small in this library's regime). Instances are single-owner.
    """

    def __init__(self, G: Multigraph, t: int):
        if t < 1:
            raise ValueError("t must be >= 1")
        self.G = G
        self.t = t
        self._members: list[int] = []
        self._ok = True

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(self._members)

    def can_add(self, v: int) -> bool:
        if v in self._members:
            raise ValueError(f"vertex {v} already in class")
        if not self._ok:
            return False
        # fewer than t edge ends into the class can never break the peel
        w = sum(self.G.mult(v, u) for u in self._members)
        if w < self.t:
            return True
        probe = tuple(self._members) + (v,)
        return kernel.is_sd_subset(self.G.matrix, self.G.n, self.t, probe)

    def add(self, v: int) -> bool:
        """Add v and report whether the class is still strictly t-degenerate."""
        self._ok = self.can_add(v)
        self._members.append(v)
        return self._ok

    def verdict(self) -> bool:
        return self._ok
