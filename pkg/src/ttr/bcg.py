"""Bipartite chain graphs: chain orderings, type classification, and TTr.

Names follow the usual chain-ordering notation: ``x_1..x_{n1}`` and
``y_1..y_{n2}`` with nested neighborhoods, ``X_t``/``Y_t`` their first t
members, and t the size of the largest induced balanced biclique.  All these
indices are 1-based; the vertices themselves keep their graph ids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .graph import Graph, GraphError, connected_components, induced_subgraph
from .oracle import SolveReport, default_cap, tournament_transitivity_exact
from .partition import OrderedPartition, is_tournament_transitive

COMPLETE = "CompleteBipartite"
TYPE_I = "TypeI"
TYPE_IIA = "TypeIIa"
TYPE_IIB = "TypeIIb"
TYPE_III = "TypeIII"


class NotChainGraph(GraphError):
    pass


class CrossCheckFailure(RuntimeError):
    """A theorem verdict disagrees with the exact search."""


@dataclass(frozen=True)
class ChainOrdering:
    sigma_x: tuple[int, ...]
    sigma_y: tuple[int, ...]

    def x(self, i: int) -> int | None:
        """x_i, or None past the end."""
        return self.sigma_x[i - 1] if 1 <= i <= len(self.sigma_x) else None

    def y(self, i: int) -> int | None:
        return self.sigma_y[i - 1] if 1 <= i <= len(self.sigma_y) else None

    def swapped(self) -> ChainOrdering:
        return ChainOrdering(self.sigma_y, self.sigma_x)


@dataclass(frozen=True)
class BCGClassification:
    kind: str
    t: int
    side_swapped: bool
    ordering: ChainOrdering


@dataclass
class TTrDetermination:
    kind: str  # "Exact" or "Interval"
    lo: int
    hi: int
    reason: str
    witness: OrderedPartition | None = None
    condition_witnesses: tuple[int, ...] | None = None
    classification: BCGClassification | None = None
    notes: dict = field(default_factory=dict)

    @property
    def value(self) -> int | None:
        return self.lo if self.kind == "Exact" else None

    @classmethod
    def exact(cls, value: int, witness: OrderedPartition | None, reason: str, **kw) -> TTrDetermination:
        return cls("Exact", value, value, reason, witness, **kw)

    @classmethod
    def interval(cls, lo: int, hi: int, reason: str, **kw) -> TTrDetermination:
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        return cls("Interval", lo, hi, reason, **kw)


def _two_color(g: Graph) -> list[int]:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    raise NotChainGraph("graph is not bipartite")
    return color


def chain_ordering(g: Graph) -> ChainOrdering:
    """Sides by 2-coloring (the side of vertex 0 is X), each sorted by
    descending degree with ties broken by id, nesting checked."""
    color = _two_color(g)
    key = lambda v: (-g.degree(v), v)
    xs = tuple(sorted((v for v in range(g.n) if color[v] == 0), key=key))
    ys = tuple(sorted((v for v in range(g.n) if color[v] == 1), key=key))
    for side in (xs, ys):
        for a, b in zip(side, side[1:]):
            if not g.adj[b] <= g.adj[a]:
                raise NotChainGraph(f"N({b}) is not contained in N({a})")
    return ChainOrdering(xs, ys)


def is_chain_graph(g: Graph) -> bool:
    try:
        chain_ordering(g)
    except NotChainGraph:
        return False
    return True


def max_biclique_t(g: Graph, ord: ChainOrdering) -> int:
    """Largest t with x_t y_t an edge; then X_t and Y_t induce K_{t,t}."""
    t = 0
    for i in range(1, min(len(ord.sigma_x), len(ord.sigma_y)) + 1):
        if g.has_edge(ord.x(i), ord.y(i)):
            t = i
        else:
            break
    return t


def _edge(g: Graph, u: int | None, v: int | None) -> bool:
    return u is not None and v is not None and g.has_edge(u, v)


def _is_complete_bipartite(g: Graph, ord: ChainOrdering) -> bool:
    return bool(ord.sigma_x) and bool(ord.sigma_y) and g.m == len(ord.sigma_x) * len(ord.sigma_y)


def classify_bcg(g: Graph) -> BCGClassification:
    ord = chain_ordering(g)
    t = max_biclique_t(g, ord)
    if _is_complete_bipartite(g, ord):
        return BCGClassification(COMPLETE, t, False, ord)
    if t == 0:
        raise NotChainGraph("graph has no edges")
    down = _edge(g, ord.x(t + 1), ord.y(t))
    up = _edge(g, ord.x(t), ord.y(t + 1))
    if not down and not up:
        return BCGClassification(TYPE_I, t, False, ord)
    if down and up:
        return BCGClassification(TYPE_III, t, False, ord)
    swapped = down
    if swapped:
        ord = ord.swapped()
    kind = TYPE_IIB if _edge(g, ord.x(t + 1), ord.y(t - 1)) else TYPE_IIA
    return BCGClassification(kind, t, swapped, ord)


# --- degree windows -------------------------------------------------------

def match_windows(g: Graph, pool: Sequence[int],
                  windows: Sequence[tuple[int, int]]) -> tuple[int, ...] | None:
    """Distinct pool vertices z_1.. with deg(z_j) in windows[j-1], or None.

    Windows are handled by ascending right end, each taking the smallest
    available degree that fits; for intervals this greedy is optimal.
    """
    free = sorted(pool, key=lambda v: (g.degree(v), v))
    chosen: dict[int, int] = {}
    for j in sorted(range(len(windows)), key=lambda j: (windows[j][1], windows[j][0], j)):
        lo, hi = windows[j]
        pick = next((v for v in free if lo <= g.degree(v) <= hi), None)
        if pick is None:
            return None
        free.remove(pick)
        chosen[j] = pick
    return tuple(chosen[j] for j in range(len(windows)))


def match_windows_brute(g: Graph, pool: Sequence[int],
                        windows: Sequence[tuple[int, int]]) -> bool:
    """Exhaustive feasibility check for :func:`match_windows`."""
    if len(windows) > len(pool):
        return False
    return any(all(lo <= g.degree(v) <= hi for v, (lo, hi) in zip(p, windows))
               for p in permutations(pool, len(windows)))


def type1_windows(t: int) -> list[tuple[int, int]]:
    return [(t - 1, t - 1)] + [(t - j, t - j + 1) for j in range(2, t + 1)]


def type2a_windows(t: int) -> list[tuple[int, int]]:
    return [(t - j - 1, t - j) for j in range(1, t)]


def type2b_windows(t: int) -> list[tuple[int, int]]:
    return [(t - j - 2, t - j - 1) for j in range(1, t - 1)]


def type1_pool(ord: ChainOrdering, t: int) -> list[int]:
    return list(ord.sigma_x[t:]) + list(ord.sigma_y[t:])


def type2a_pool(ord: ChainOrdering, t: int) -> list[int]:
    return list(ord.sigma_x[t:]) + list(ord.sigma_y[t + 1:])


def type2b_pool(ord: ChainOrdering, t: int) -> list[int]:
    return list(ord.sigma_x[t + 1:]) + list(ord.sigma_y[t + 1:])


def type1_condition(g: Graph, ord: ChainOrdering, t: int) -> tuple[int, ...] | None:
    return match_windows(g, type1_pool(ord, t), type1_windows(t))


def type2a_condition(g: Graph, ord: ChainOrdering, t: int) -> tuple[int, ...] | None:
    return match_windows(g, type2a_pool(ord, t), type2a_windows(t))


def type2b_condition(g: Graph, ord: ChainOrdering, t: int) -> tuple[int, ...] | None:
    return match_windows(g, type2b_pool(ord, t), type2b_windows(t))


# --- witness layouts ------------------------------------------------------

def _layout(g: Graph, placed: dict[int, int]) -> OrderedPartition:
    labels = [1] * g.n
    for v, p in placed.items():
        labels[v] = p
    return OrderedPartition.from_labels(labels)


def type1_witness(g: Graph, ord: ChainOrdering, t: int, z: Sequence[int]) -> OrderedPartition:
    """x_i, y_i, z_{t-i+1} in V_i for i < t; x_t, z_1 in V_t; y_t alone last."""
    placed = {}
    for i in range(1, t + 1):
        placed[ord.x(i)] = i
        placed[ord.y(i)] = i if i < t else t + 1
    for i in range(1, t):
        placed[z[t - i]] = i
    placed[z[0]] = t
    return _layout(g, placed)


def type2a_witness(g: Graph, ord: ChainOrdering, t: int, z: Sequence[int]) -> OrderedPartition:
    """x_i, y_i, z_{t-i} in V_i for i < t; x_t, y_t in V_t; y_{t+1} alone last."""
    placed = {}
    for i in range(1, t + 1):
        placed[ord.x(i)] = i
        placed[ord.y(i)] = i
    for i in range(1, t):
        placed[z[t - i - 1]] = i
    placed[ord.y(t + 1)] = t + 1
    return _layout(g, placed)


def type2b_witness(g: Graph, ord: ChainOrdering, t: int, z: Sequence[int]) -> OrderedPartition:
    """x_i, y_i, z_{t-i-1} in V_i for i < t-1; x_t, x_{t+1} in V_t; y_t alone last."""
    placed = {}
    for i in range(1, t):
        placed[ord.x(i)] = i
        placed[ord.y(i)] = i
    for i in range(1, t - 1):
        placed[z[t - i - 2]] = i
    placed[ord.x(t)] = t
    placed[ord.x(t + 1)] = t
    placed[ord.y(t)] = t + 1
    return _layout(g, placed)


def complete_bipartite_witness(g: Graph, ord: ChainOrdering) -> OrderedPartition:
    big, small = (ord.sigma_x, ord.sigma_y) if len(ord.sigma_x) >= len(ord.sigma_y) else (ord.sigma_y, ord.sigma_x)
    if len(big) == 1:
        return OrderedPartition.single(g.n)
    return _layout(g, {big[0]: 2})


def transitivity_bcg(cls: BCGClassification) -> int:
    """Tr of a chain graph: t + 2 when K_{t+1,t+1} minus an edge is induced
    (Type-III), t + 1 otherwise."""
    return cls.t + 2 if cls.kind == TYPE_III else cls.t + 1


# --- determination ----------------------------------------------------------

def _exact_from_oracle(g: Graph, cap: int, reason: str, **kw) -> TTrDetermination | None:
    if g.n > cap:
        return None
    rep = tournament_transitivity_exact(g, cap)
    kw.setdefault("notes", {})["theorem_reason"] = reason
    return TTrDetermination.exact(rep.value, rep.witness, "oracle-fallback", **kw)


def _connected_verdict(g: Graph, cap: int, cross_check: bool) -> TTrDetermination:
    cls = classify_bcg(g)
    ord, t = cls.ordering, cls.t
    if cls.kind == COMPLETE:
        n1, n2 = len(ord.sigma_x), len(ord.sigma_y)
        value = 1 if n1 == n2 == 1 else 2
        return TTrDetermination.exact(value, complete_bipartite_witness(g, ord), "complete-bipartite",
                                      classification=cls)
    if cls.kind == TYPE_III:
        out = TTrDetermination.interval(2, t + 1, "type3-strict", classification=cls)
        return _exact_from_oracle(g, cap, "type3-strict", classification=cls) or out
    cond, build, tag = {
        TYPE_I: (type1_condition, type1_witness, "type1-iff"),
        TYPE_IIA: (type2a_condition, type2a_witness, "type2a-sufficient"),
        TYPE_IIB: (type2b_condition, type2b_witness, "type2b-sufficient"),
    }[cls.kind]
    z = cond(g, ord, t)
    if z is None:
        # Tr = t + 1 caps every type; a failed Type-I condition does not
        # exclude t + 1 (C_4 plus a pendant vertex reaches it)
        out = TTrDetermination.interval(2, t + 1, "condition-failed", classification=cls)
        return _exact_from_oracle(g, cap, "condition-failed", classification=cls) or out
    w = build(g, ord, t, z)
    report = is_tournament_transitive(g, w)
    if not report or len(w) != t + 1:
        raise CrossCheckFailure(f"{cls.kind} layout failed verification: {report.first_violation}")
    out = TTrDetermination.exact(t + 1, w, tag, condition_witnesses=z, classification=cls)
    if cross_check and g.n <= cap:
        got = tournament_transitivity_exact(g, cap).value
        out.notes["oracle"] = got
        if got != t + 1:
            raise CrossCheckFailure(f"{tag} gives {t + 1}, exact search gives {got}")
    return out


def ttr_bcg(g: Graph, cap: int | None = None, cross_check: bool = True) -> TTrDetermination:
    """TTr of a bipartite chain graph: Exact when a theorem or the exact
    search settles it, otherwise an Interval."""
    cap = default_cap() if cap is None else cap
    chain_ordering(g)  # rejects non-chain inputs
    comps = connected_components(g)
    if len(comps) == 1 and g.n > 1:
        return _connected_verdict(g, cap, cross_check)
    # isolated vertices present: the theorems assume positive degrees
    hit = _exact_from_oracle(g, cap, "disconnected")
    if hit is not None:
        return hit
    big = max(comps, key=len)
    h, remap = induced_subgraph(g, big)
    inner = _connected_verdict(h, cap, cross_check)
    tr = transitivity_bcg(inner.classification) if inner.classification else 1
    notes = {"component": big, "component_reason": inner.reason}
    if inner.kind == "Exact" and inner.lo == tr:
        back = {new: old for old, new in remap.items()}
        parts = [{back[v] for v in p} for p in inner.witness]
        parts[0] |= set(range(g.n)) - set(big)
        return TTrDetermination.exact(tr, OrderedPartition(parts), inner.reason,
                                      classification=inner.classification, notes=notes)
    return TTrDetermination.interval(inner.lo, tr, inner.reason,
                                     classification=inner.classification, notes=notes)


def solve_bcg(g: Graph, cap: int | None = None) -> SolveReport:
    d = ttr_bcg(g, cap)
    return SolveReport(d.lo, d.witness, "bcg-" + d.reason, (d.lo, d.hi),
                       notes={"kind": d.kind, "type": d.classification.kind if d.classification else None})


# --- generators -------------------------------------------------------------

def chain_graph_from_degrees(degrees: Sequence[int], n2: int) -> Graph:
    """x_i (id i-1) adjacent to y_1..y_{degrees[i-1]}, y_j having id n1 + j - 1."""
    n1 = len(degrees)
    if any(d < 0 or d > n2 for d in degrees):
        raise GraphError("degrees must lie in 0..n2")
    return Graph(n1 + n2, ((i, n1 + j) for i, d in enumerate(degrees) for j in range(d)))


def random_connected_bcg(n: int, rng: random.Random, relabel: bool = True) -> Graph:
    """Random connected chain graph on n >= 2 vertices."""
    if n < 2:
        raise GraphError("a connected chain graph with an edge needs n >= 2")
    n1 = rng.randint(1, n - 1)
    n2 = n - n1
    degs = sorted((rng.randint(1, n2) for _ in range(n1 - 1)), reverse=True)
    g = chain_graph_from_degrees([n2] + degs, n2)
    if not relabel:
        return g
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, ((perm[u], perm[v]) for u, v in g.edges()))


__all__ = [
    "ChainOrdering", "BCGClassification", "TTrDetermination", "NotChainGraph", "CrossCheckFailure",
    "COMPLETE", "TYPE_I", "TYPE_IIA", "TYPE_IIB", "TYPE_III",
    "chain_ordering", "is_chain_graph", "max_biclique_t", "classify_bcg",
    "match_windows", "match_windows_brute",
    "type1_condition", "type2a_condition", "type2b_condition",
    "type1_witness", "type2a_witness", "type2b_witness", "complete_bipartite_witness",
    "transitivity_bcg", "ttr_bcg", "solve_bcg",
    "chain_graph_from_degrees", "random_connected_bcg",
]
