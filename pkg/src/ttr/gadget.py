"""Hardness gadget G' and the disjoint-union amplification.

Layout of G' for a base graph G on n vertices with maximum degree D:
copies ``c = 0 .. 3(D+1)-1`` of G, copy c occupying ids ``c*n .. c*n+n-1``
(vertex v of G becomes ``c*n + v``), followed by the hubs
``x = 3n(D+1)``, ``x' = x+1``, ``x'' = x+2``.  Copies ``0..D`` are joined
to x, copies ``D+1..2D+1`` to x', the rest to x''; the hubs form the
path x - x' - x''.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError
from .partition import OrderedPartition, PartitionError, is_tournament_transitive, is_transitive


@dataclass(frozen=True)
class GadgetInstance:
    base: Graph
    gadget: Graph
    hubs: tuple[int, int, int]
    copy_offsets: tuple[int, ...]
    delta: int

    @property
    def copies_per_hub(self) -> int:
        return self.delta + 1

    def group(self, h: int) -> tuple[int, ...]:
        """Offsets of the copies attached to hub ``h`` (0, 1 or 2)."""
        c = self.copies_per_hub
        return self.copy_offsets[h * c:(h + 1) * c]

    @property
    def expected_vertex_count(self) -> int:
        return 3 * self.base.n * (self.delta + 1) + 3

    @property
    def expected_edge_count(self) -> int:
        """Copy edges, hub-to-copy edges and the two hub edges."""
        c = self.delta + 1
        return 3 * self.base.m * c + 3 * self.base.n * c + 2

    @property
    def stated_edge_count(self) -> int:
        """The count 3m(D+1)+2 that leaves out the hub-to-copy edges."""
        return 3 * self.base.m * (self.delta + 1) + 2


def build_reduction(g: Graph) -> GadgetInstance:
    n, d = g.n, g.max_degree
    c = d + 1
    base_edges = g.edges()
    offsets = tuple(i * n for i in range(3 * c))
    x = 3 * n * c
    hubs = (x, x + 1, x + 2)
    edges = []
    for i, off in enumerate(offsets):
        edges.extend((u + off, v + off) for u, v in base_edges)
        hub = hubs[i // c]
        edges.extend((off + v, hub) for v in range(n))
    edges += [(hubs[0], hubs[1]), (hubs[1], hubs[2])]
    gadget = Graph(x + 3, edges)
    gi = GadgetInstance(g, gadget, hubs, offsets, d)
    if gadget.n != gi.expected_vertex_count or gadget.m != gi.expected_edge_count:
        raise AssertionError("gadget size does not match its construction")
    return gi


def union_labels(p: OrderedPartition, n: int, copies: int) -> list[int]:
    """Labels for ``copies`` disjoint copies of a k-part transitive partition.

    Part i of copy c (1-based) goes to part ``min(i, k - c + 1)``; copies
    beyond the k-th go wholly to part 1.  Copy c keeps a private vertex in
    part ``k - c + 1``, which no later part can dominate.
    """
    k = len(p)
    base = p.labels(n)
    out = []
    for c in range(1, copies + 1):
        cap = k - c + 1
        out.extend(min(i, cap) if cap >= 1 else 1 for i in base)
    return out


def _check_base(g: Graph, p: OrderedPartition, copies: int) -> None:
    if copies < len(p):
        raise GraphError(f"need at least {len(p)} copies, got {copies}")
    report = is_transitive(g, p)
    if not report:
        raise PartitionError(f"base partition is not transitive: {report.first_violation}")


def build_union_partition(g: Graph, p: OrderedPartition, copies: int) -> OrderedPartition:
    """Tournament transitive partition of ``copies`` disjoint copies of g,
    with as many parts as the transitive partition p."""
    _check_base(g, p, copies)
    return OrderedPartition.from_labels(union_labels(p, g.n, copies))


def lift_partition(gi: GadgetInstance, p: OrderedPartition) -> OrderedPartition:
    """Size k+2 tournament transitive partition of G' from a size-k
    transitive partition of the base: the union layout inside each hub
    group, then ``{x', x''}`` and finally ``{x}``."""
    g = gi.base
    _check_base(g, p, gi.copies_per_hub)
    k = len(p)
    group = union_labels(p, g.n, gi.copies_per_hub)
    labels = group * 3 + [k + 2, k + 1, k + 1]
    out = OrderedPartition.from_labels(labels)
    report = is_tournament_transitive(gi.gadget, out)
    if not report:
        raise AssertionError(f"lifted partition fails verification: {report.first_violation}")
    return out


__all__ = ["GadgetInstance", "build_reduction", "union_labels", "build_union_partition", "lift_partition"]
