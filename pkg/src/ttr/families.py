"""Closed forms for named families and the explicit witness constructions
used in their proofs."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, GraphError, GraphFamily, connected_components, induced_subgraph, is_complete
from .partition import OrderedPartition, PartitionError


def ttr_formula(f: GraphFamily) -> int:
    tag, p = f.tag, f.params
    if tag == "complete":
        return 1
    if tag == "path":
        n = p[0]
        return 1 if n <= 2 else 2 if n <= 4 else 3
    if tag == "cycle":
        n = p[0]
        return 1 if n == 3 else 2 if n <= 5 else 3
    if tag == "complete_bipartite":
        return 1 if p == (1, 1) else 2
    if tag == "star":
        return 1 if p[0] == 1 else 2
    if tag == "clique_union":
        return p[0]
    raise GraphError(f"no tournament transitivity formula for {f}")


def tr_formula(f: GraphFamily) -> int:
    """Transitivity, only for complete graphs and unbalanced K_{m,n}."""
    if f.tag == "complete":
        return f.params[0]
    if f.tag in ("complete_bipartite", "star"):
        m, n = (1, f.params[0]) if f.tag == "star" else f.params
        if m != n:
            return min(m, n) + 1
    raise GraphError(f"no transitivity formula stated for {f}")


def build_clique_union_witness(t: int, n: int) -> OrderedPartition:
    """Size-t tournament transitive partition of t disjoint copies of K_n.

    Copy ``c`` (1-based) occupies ids ``(c-1)*n ..``; its vertices in id order
    are the singleton slots 1..n of a size-n transitive partition of K_n.
    Slot ``i`` of copy ``c`` lands in part ``min(i, t - c + 1)`` when i <= t,
    and in part 1 otherwise.
    """
    if not 1 <= t <= n:
        raise GraphError(f"need 1 <= t <= n, got t={t}, n={n}")
    labels = []
    for c in range(1, t + 1):
        for i in range(1, n + 1):
            labels.append(1 if i > t else min(i, t - c + 1))
    return OrderedPartition.from_labels(labels)


def lift_component_witness(g: Graph, component_witness: OrderedPartition,
                           comp: Iterable[int]) -> OrderedPartition:
    """Extend a witness on one component to all of ``g``; every vertex outside
    the component joins part 1."""
    comp = sorted(set(comp))
    if comp not in connected_components(g):
        raise PartitionError("vertex set is not a connected component of the graph")
    _, remap = induced_subgraph(g, comp)
    back = {new: old for old, new in remap.items()}
    if component_witness.vertices() != frozenset(range(len(comp))):
        raise PartitionError("witness does not cover the component")
    parts = [{back[v] for v in p} for p in component_witness]
    inside = set(comp)
    parts[0] |= {v for v in range(g.n) if v not in inside}
    return OrderedPartition(parts)


def recognize_family(g: Graph) -> GraphFamily | None:
    """Name a graph isomorphic to a member of a known family, if any.

    Checks, in order: complete graph, path, cycle, star, complete bipartite,
    union of equal cliques.  Only isomorphism-invariant data is used, so
    the family's formulas apply to ``g`` as it is numbered.
    """
    n, m = g.n, g.m
    comps = connected_components(g)
    degs = sorted(g.degree(v) for v in range(n))
    if len(comps) == 1:
        if is_complete(g):
            return GraphFamily("complete", (n,))
        if m == n - 1 and degs[-1] <= 2:
            return GraphFamily("path", (n,))
        if m == n and degs[0] == degs[-1] == 2:
            return GraphFamily("cycle", (n,))
        side = _bipartite_sides(g)
        if side is not None:
            a, b = len(side[0]), len(side[1])
            if m == a * b:
                if min(a, b) == 1:
                    return GraphFamily("star", (max(a, b),))
                return GraphFamily("complete_bipartite", (a, b))
        return None
    sizes = {len(c) for c in comps}
    if len(sizes) == 1 and m == len(comps) * len(comps[0]) * (len(comps[0]) - 1) // 2:
        t, k = len(comps), len(comps[0])
        if t <= k:
            return GraphFamily("clique_union", (t, k))
    return None


def _bipartite_sides(g: Graph) -> tuple[list[int], list[int]] | None:
    color = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in color:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                return None
    return [v for v in color if color[v] == 0], [v for v in color if color[v] == 1]
