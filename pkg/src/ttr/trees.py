"""Transitivity and tournament transitivity of trees.

Transitive numbers come from the children-ladder recursion: rooted at x,
a vertex whose children have rooted values ``l_1 <= ... <= l_c`` gets value
``1 + z`` where z is the longest subsequence with ``l_{i_j} >= j``.  The
tournament transitivity is either Tr(T) or Tr(T) - 1, decided by searching
for a pair (y, z) whose path requirements X and Y are compatible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import networkx as nx

from .graph import Graph, GraphError, induced_subgraph, is_tree, tree_path
from .oracle import SolveReport, default_cap, has_partition
from .partition import OrderedPartition, is_tournament_transitive


@dataclass
class RootedTree:
    base: Graph
    root: int
    parent: dict[int, int]
    children: dict[int, list[int]]
    order: list[int]  # BFS order from the root

    def subtree(self, v: int) -> list[int]:
        out, stack = [], [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children[u])
        return sorted(out)


@dataclass(frozen=True)
class ChildLadder:
    sorted_values: tuple[int, ...]
    chosen: tuple[int, ...]  # positions in sorted_values, rung j at chosen[j-1]
    z: int


@dataclass
class PathRequirement:
    anchor: int
    vertices: list[int]
    allowed_indices: dict[int, frozenset[int]] = field(default_factory=dict)
    k: int = 0
    endpoints: tuple[int, int] = (-1, -1)


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError("expected a tree")


def root_at(t: Graph, r: int) -> RootedTree:
    _require_tree(t)
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {r: []}
    order, head = [r], 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in sorted(t.adj[u]):
            if v != parent.get(u):
                parent[v] = u
                children[u].append(v)
                children[v] = []
                order.append(v)
    return RootedTree(t, r, parent, children, order)


def pruned_tree(t: Graph, c: int, cp: int) -> tuple[Graph, dict[int, int]]:
    """The part of T rooted at c that survives deleting cp and everything
    below it; returned with the old -> new id map."""
    _require_tree(t)
    if c == cp:
        raise GraphError("pruned_tree needs c != cp")
    return induced_subgraph(t, _reach(t, c, cp))


def _reach(t: Graph, root: int, blocked: int | None) -> list[int]:
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in t.adj[u]:
            if v != blocked and v not in seen:
                seen.add(v)
                stack.append(v)
    return sorted(seen)


def ladder(child_values: Sequence[int]) -> ChildLadder:
    vals = tuple(sorted(child_values))
    z = 0
    for l in vals:
        if l >= z + 1:
            z += 1
    # the z largest values always form a valid ladder when any ladder of
    # height z exists
    return ChildLadder(vals, tuple(range(len(vals) - z, len(vals))), z)


def rooted_values(rt: RootedTree) -> dict[int, int]:
    vals: dict[int, int] = {}
    for v in reversed(rt.order):
        vals[v] = 1 + ladder([vals[c] for c in rt.children[v]]).z
    return vals


def rooted_transitive_number(rt: RootedTree, v: int) -> int:
    if v not in rt.children:
        raise GraphError(f"vertex {v} not in the rooted tree")
    return rooted_values(rt)[v]


def _value_from(t: Graph, root: int, blocked: int | None = None) -> int:
    """Rooted value of ``root`` in the component left after deleting ``blocked``."""
    parent = {root: -1}
    order = [root]
    for u in order:
        for v in t.adj[u]:
            if v != blocked and v != parent[u]:
                parent[v] = u
                order.append(v)
    kids: dict[int, list[int]] = {u: [] for u in order}
    vals: dict[int, int] = {}
    for u in reversed(order):
        vals[u] = 1 + ladder(kids[u]).z
        if parent[u] >= 0:
            kids[parent[u]].append(vals[u])
    return vals[root]


def transitive_profile(t: Graph) -> dict[int, int]:
    """t(v, T) for every vertex, by rerooting at each vertex (O(n^2))."""
    _require_tree(t)
    return {v: _value_from(t, v) for v in range(t.n)}


def transitivity_tree(t: Graph) -> int:
    return max(transitive_profile(t).values())


def nonisomorphic_trees(n: int):
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise GraphError("trees need at least one vertex")
    if n == 1:
        yield Graph(1)
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph(n, t.edges())


def all_trees(max_n: int):
    for n in range(1, max_n + 1):
        yield from nonisomorphic_trees(n)


# --- index sets -----------------------------------------------------------

def _rungs(rt: RootedTree, vals: Mapping[int, int], x: int) -> tuple[ChildLadder, list[int]]:
    """Ladder at x and its children listed in sorted-value order."""
    kids = sorted(rt.children[x], key=lambda c: (vals[c], c))
    return ladder([vals[c] for c in kids]), kids


def allowed_indices_at_anchor(rt: RootedTree, x: int, target_child: int, j: int,
                              vals: Mapping[int, int] | None = None) -> frozenset[int]:
    """Parts the j-th ladder child of x may occupy while x sits in part 1 + z."""
    vals = rooted_values(rt) if vals is None else vals
    if target_child not in rt.children.get(x, ()):
        raise GraphError(f"{target_child} is not a child of {x}")
    lad, kids = _rungs(rt, vals, x)
    if not 1 <= j <= lad.z:
        raise GraphError(f"rung {j} is not on the ladder of {x} (height {lad.z})")
    if vals[target_child] < j:
        raise GraphError(f"child {target_child} cannot stand on rung {j}")
    rung_value = [lad.sorted_values[p] for p in lad.chosen]  # rung t -> l_{i_t}
    l = vals[target_child]
    out = set(range(j, min(l, lad.z) + 1))
    if j == 1:
        return frozenset(out)
    # non-selected children: everything except one child per used rung,
    # with target_child counted as the occupant of rung j
    used = [target_child]
    pool = [c for c in kids if c != target_child]
    for t in range(1, lad.z + 1):
        if t == j:
            continue
        want = rung_value[t - 1]
        for c in pool:
            if vals[c] == want and c not in used:
                used.append(c)
                break
    others = [c for c in kids if c not in used]
    if any(vals[c] >= j for c in others):
        out |= set(range(1, j))
        return frozenset(out)
    if rung_value[j - 2] >= j:
        r = j - 1
        while r > 1 and rung_value[r - 2] >= r:
            r -= 1
        out |= set(range(r, j))
    return frozenset(out)


def anchor_indices(rt: RootedTree, x: int, target_child: int,
                   vals: Mapping[int, int] | None = None) -> frozenset[int]:
    """Index set for a required child, over every rung it can stand on.

    Children with equal rooted values are interchangeable, so the child may
    take any rung whose value equals its own.
    """
    vals = rooted_values(rt) if vals is None else vals
    lad, _ = _rungs(rt, vals, x)
    l = vals[target_child]
    rungs = [t for t in range(1, lad.z + 1) if lad.sorted_values[lad.chosen[t - 1]] == l]
    out: set[int] = set()
    for j in rungs:
        out |= allowed_indices_at_anchor(rt, x, target_child, j, vals)
    return frozenset(out)


def _fill(t: Graph, anchor: int, verts: list[int], top: int) -> dict[int, frozenset[int]]:
    rt = root_at(t, anchor)
    vals = rooted_values(rt)
    allowed = {verts[0]: frozenset([top])}
    for j in range(1, len(verts) - 1):
        allowed[verts[j]] = frozenset([vals[verts[j]]])
    if len(verts) >= 2:
        allowed[verts[-1]] = anchor_indices(rt, verts[-2], verts[-1], vals)
    return allowed


def _pair_check(t: Graph, prof: Mapping[int, int], y: int, z: int, k: int) -> None:
    if y == z or y in t.adj[z]:
        raise GraphError("y and z must be distinct and nonadjacent")
    if prof[z] != k:
        raise GraphError(f"t(z) = {prof[z]}, expected {k}")
    if prof[y] < k - 1:
        raise GraphError(f"t(y) = {prof[y]} is below {k - 1}")


def compute_X(t: Graph, y: int, z: int, k: int,
              profile: Mapping[int, int] | None = None) -> PathRequirement:
    """Path vertices y needs in order to sit in part k - 1."""
    _require_tree(t)
    prof = transitive_profile(t) if profile is None else profile
    _pair_check(t, prof, y, z, k)
    path = tree_path(t, y, z)
    xs = [y]
    if prof[y] != k:
        for r in path[1:]:
            if _value_from(t, y, blocked=r) == k - 2:
                xs.append(r)
            else:
                break
    return PathRequirement(y, xs, _fill(t, y, xs, k - 1), k, (y, z))


def compute_Y(t: Graph, y: int, z: int, k: int,
              profile: Mapping[int, int] | None = None) -> PathRequirement:
    """Path vertices z needs in order to sit in part k."""
    _require_tree(t)
    prof = transitive_profile(t) if profile is None else profile
    _pair_check(t, prof, y, z, k)
    path = tree_path(t, z, y)
    ys = [z]
    for s in path[1:]:
        if _value_from(t, z, blocked=s) == k - 1:
            ys.append(s)
        else:
            break
    return PathRequirement(z, ys, _fill(t, z, ys, k), k, (y, z))


def agrees(xreq: PathRequirement, yreq: PathRequirement) -> bool:
    if xreq.endpoints != yreq.endpoints or xreq.k != yreq.k:
        raise GraphError("requirements come from different (y, z, k)")
    common = set(xreq.vertices) & set(yreq.vertices)
    return all(xreq.allowed_indices[w] & yreq.allowed_indices[w] for w in common)


# --- witnesses ------------------------------------------------------------

def _support_labels(t: Graph, z: int, level: int) -> list[int]:
    """Labels of a transitive partition built around z in part ``level``.

    Every placed vertex at level p gets one child at each level 1..p-1, the
    child for level q being the q-th rung of its ladder; unplaced vertices
    get level 1.
    """
    rt = root_at(t, z)
    vals = rooted_values(rt)
    labels = [1] * t.n
    stack = [(z, level)]
    while stack:
        v, p = stack.pop()
        labels[v] = p
        lad, kids = _rungs(rt, vals, v)
        chosen = [kids[i] for i in lad.chosen]
        # lowest p-1 requirements are met by the smallest chosen rungs
        for q, c in enumerate(chosen[: p - 1], 1):
            stack.append((c, q))
    return labels


def tree_drop_witness(t: Graph) -> OrderedPartition:
    """Tournament transitive partition of size Tr(T) - 1 (Tr(T) >= 2).

    Build the minimal support structure for a vertex z of top transitive
    number, then move z into part 1.  Each child of z at level i has no
    neighbor in a later part, which gives every required non-domination.
    """
    prof = transitive_profile(t)
    k = max(prof.values())
    if k < 2:
        raise GraphError("needs Tr(T) >= 2")
    z = min(v for v in prof if prof[v] == k)
    labels = _support_labels(t, z, k)
    labels[z] = 1
    return OrderedPartition.from_labels(labels)


def _star_witness(t: Graph) -> OrderedPartition:
    center = max(range(t.n), key=lambda v: (t.degree(v), -v))
    leaf = min(v for v in range(t.n) if v != center)
    return OrderedPartition([[v for v in range(t.n) if v != leaf], [leaf]])


def _candidate_pairs(prof: Mapping[int, int], t: Graph, k: int):
    tops = sorted((v for v in prof if prof[v] == k), reverse=True)
    for z in tops:
        ys = sorted((v for v in prof if v != z and v not in t.adj[z] and prof[v] >= k - 1),
                    key=lambda v: (-prof[v], -v))
        for y in ys:
            yield y, z


def tournament_transitivity_tree(t: Graph, cap: int | None = None,
                                 witness: bool = True) -> SolveReport:
    """TTr(T), deciding between Tr(T) and Tr(T) - 1."""
    _require_tree(t)
    prof = transitive_profile(t)
    k = max(prof.values())
    if k == 1:
        return SolveReport(1, OrderedPartition.single(t.n), "tree-algorithm", (1, 1))
    if k == 2:
        if t.n == 2:
            return SolveReport(1, OrderedPartition.single(2), "tree-algorithm", (1, 2))
        return SolveReport(2, _star_witness(t), "tree-algorithm", (1, 2))
    hit = None
    for y, z in _candidate_pairs(prof, t, k):
        if agrees(compute_X(t, y, z, k, prof), compute_Y(t, y, z, k, prof)):
            hit = (y, z)
            break
    if hit is None:
        w = tree_drop_witness(t) if witness else None
        return SolveReport(k - 1, w, "tree-algorithm", (k - 1, k))
    w = None
    if witness:
        w = _full_witness(t, k, hit, cap)
    return SolveReport(k, w, "tree-algorithm", (k - 1, k), notes={"pair": hit})


def _full_witness(t: Graph, k: int, pair: tuple[int, int], cap: int | None) -> OrderedPartition | None:
    cap = default_cap() if cap is None else cap
    if t.n > cap:
        return None
    y, z = pair
    p = has_partition(t, k, tournament=True, cap=cap, fixed={z: k, y: k - 1})
    if p is None:
        p = has_partition(t, k, tournament=True, cap=cap)
    if p is not None and not is_tournament_transitive(t, p):
        raise AssertionError("restricted search returned an invalid witness")
    return p


__all__ = [
    "RootedTree", "ChildLadder", "PathRequirement", "root_at", "pruned_tree", "ladder",
    "rooted_values", "rooted_transitive_number", "transitive_profile", "transitivity_tree",
    "allowed_indices_at_anchor", "anchor_indices", "compute_X", "compute_Y", "agrees",
    "tree_drop_witness", "tournament_transitivity_tree", "nonisomorphic_trees", "all_trees",
]
