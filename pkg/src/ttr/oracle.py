"""Exact transitivity and tournament transitivity on small graphs.

Everything here is exhaustive search and serves as ground truth for the
faster special-purpose solvers.  A search decides whether a partition with
exactly ``k`` parts exists; since any such partition can be shrunk to every
smaller size (merge the first two parts), the optimum is found by raising
``k`` until the first infeasible value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, connected_components, has_induced_p3, induced_subgraph
from .partition import OrderedPartition, is_tournament_transitive, is_transitive

DEFAULT_CAP = 12


def default_cap() -> int:
    try:
        return int(os.environ.get("TTR_CAP", DEFAULT_CAP))
    except ValueError:
        return DEFAULT_CAP


class CapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, oracle cap is {cap}")
        self.n, self.cap = n, cap


class InvariantViolation(RuntimeError):
    """A search contradicted a proven structural property."""


@dataclass
class SolveReport:
    value: int
    witness: OrderedPartition | None
    method: str
    bounds: tuple[int, int]
    nodes_explored: int = 0
    notes: dict = field(default_factory=dict)


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceeded(g.n, cap)


def _bits(m: int):
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


class _Search:
    """Depth-first assignment of vertices to ``k`` labelled parts.

    Labels are 0-based internally.  Pruning rules:

    * a vertex in part j needs a neighbor in each earlier part; the number of
      earlier parts it still misses may not exceed its unassigned neighbors;
    * the number of still-empty parts may not exceed the unassigned vertices;
    * (tournament) symmetrically, a vertex in part j needs a non-neighbor in
      each earlier part (the witness that part j does not dominate it);
    * (tournament) every earlier part i must keep a vertex without neighbors
      in part j, or an unassigned vertex that could still join part i as one;
    * (tournament) the last part holds a single vertex.  Any extra vertex of
      the last part can be moved into the first part without breaking
      anything, so this loses no solutions;
    * twins (equal open or closed neighborhoods) are interchangeable, so a
      twin placed later in the order never gets a smaller label than the
      twin before it.

    Back-non-domination is checked in full once all vertices are placed.
    """

    def __init__(self, g: Graph, k: int, tournament: bool,
                 domains: Sequence[Sequence[int]], order: Sequence[int],
                 pinned: frozenset[int] = frozenset()):
        self.g, self.k, self.tournament = g, k, tournament
        self.domains, self.order = domains, order
        self.nbr = g.masks
        full = (1 << g.n) - 1
        self.non = tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.nbr))
        # top[v]: highest 0-based part v may occupy
        self.top = [max(d) if d else -1 for d in domains]
        self.part = [0] * k
        self.label = [-1] * g.n
        self.nodes = 0
        self.twin_before = [-1] * g.n
        last_of_class: dict[tuple[int, int], int] = {}
        for v in order:
            if v in pinned:
                continue
            for key in ((0, self.nbr[v]), (1, self.nbr[v] | (1 << v))):
                if key in last_of_class:
                    self.twin_before[v] = last_of_class[key]
                last_of_class[key] = v

    def run(self) -> list[int] | None:
        full = (1 << self.g.n) - 1
        if self._rec(0, full):
            return [lab + 1 for lab in self.label]
        return None

    def _need_ok(self, u: int, pool: int) -> bool:
        part = self.part
        lab = self.label[u]
        nu = self.nbr[u]
        missing = 0
        for i in range(lab):
            if not nu & part[i]:
                missing += 1
        if missing > (nu & pool).bit_count():
            return False
        if not self.tournament:
            return True
        cu = self.non[u]
        missing = 0
        for i in range(lab):
            if not cu & part[i]:
                missing += 1
        return missing <= (cu & pool).bit_count()

    def _pairs_ok(self, pool: int) -> bool:
        part, nbr, top = self.part, self.nbr, self.top
        for j in range(1, self.k):
            pj = part[j]
            if not pj:
                continue
            free_top = -1
            for u in _bits(pool):
                if not nbr[u] & pj and top[u] > free_top:
                    free_top = top[u]
            for i in range(min(j, free_top + 1), j):
                if not any(not nbr[x] & pj for x in _bits(part[i])):
                    return False
        return True

    def _leaf_ok(self) -> bool:
        if not self.tournament:
            return True
        part, nbr = self.part, self.nbr
        for j in range(1, self.k):
            pj = part[j]
            for i in range(j):
                if not any(not nbr[x] & pj for x in _bits(part[i])):
                    return False
        return True

    def _rec(self, idx: int, pool: int) -> bool:
        if idx == len(self.order):
            return self._leaf_ok()
        v = self.order[idx]
        bv = 1 << v
        pool2 = pool & ~bv
        part, label, nbr = self.part, self.label, self.nbr
        last = self.k - 1
        left = pool2.bit_count()
        settled = ~pool
        touched = (nbr[v] | (self.non[v] if self.tournament else 0)) & settled
        floor = label[self.twin_before[v]] if self.twin_before[v] >= 0 else 0
        for j in self.domains[v]:
            if j < floor or (self.tournament and j == last and part[j]):
                continue
            self.nodes += 1
            label[v] = j
            part[j] |= bv
            ok = sum(1 for p in part if not p) <= left and self._need_ok(v, pool2)
            if ok:
                for u in _bits(touched):
                    if not self._need_ok(u, pool2):
                        ok = False
                        break
            if ok and self.tournament:
                ok = self._pairs_ok(pool2)
            if ok and self._rec(idx + 1, pool2):
                return True
            part[j] &= ~bv
        label[v] = -1
        return False


def _default_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _domains(g: Graph, k: int, tournament: bool) -> list[list[int]]:
    out = []
    for v in range(g.n):
        d = g.degree(v)
        top = min(d, g.n - 1 - d) if tournament else d
        out.append(list(range(min(k, top + 1))))
    return out


def _feasible(g: Graph, k: int, tournament: bool,
              fixed: dict[int, int] | None = None,
              forbidden: Sequence[int] = ()) -> tuple[list[int] | None, int]:
    """Labels (1-based) of a k-part partition, or None; plus node count.

    ``fixed`` pins vertices to 1-based parts; ``forbidden`` lists 1-based
    parts that unpinned vertices may not use.
    """
    if k == 1:
        return [1] * g.n, 0
    if k > g.n:
        return None, 0
    doms = _domains(g, k, tournament)
    fixed = fixed or {}
    bad = {f - 1 for f in forbidden}
    for v in range(g.n):
        if v in fixed:
            doms[v] = [fixed[v] - 1] if fixed[v] - 1 in doms[v] else []
        elif bad:
            doms[v] = [j for j in doms[v] if j not in bad]
    order = [v for v in fixed] + [v for v in _default_order(g) if v not in fixed]
    s = _Search(g, k, tournament, doms, order, frozenset(fixed))
    return s.run(), s.nodes


# --- bounds ---------------------------------------------------------------

def upper_bound_ttr(g: Graph) -> int:
    return min(g.max_degree + 1, g.n - g.min_degree, (g.n + 1) // 2)


def lower_bound_ttr(g: Graph) -> int:
    best = 1
    for comp in connected_components(g):
        h, _ = induced_subgraph(g, comp)
        if has_induced_p3(h):
            best = 2
    return best


def bounds_ttr(g: Graph) -> tuple[int, int]:
    """Cheap (lower, upper) bracket on TTr(g)."""
    return lower_bound_ttr(g), upper_bound_ttr(g)


# --- solvers --------------------------------------------------------------

def _maximize(g: Graph, tournament: bool, lo: int, hi: int) -> SolveReport:
    best = [1] * g.n
    value, nodes = 1, 0
    for k in range(max(lo, 2), hi + 1):
        labels, cnt = _feasible(g, k, tournament)
        nodes += cnt
        if labels is None:
            break
        best, value = labels, k
    if value < lo:
        raise InvariantViolation(f"search found {value}, below the proven lower bound {lo}")
    witness = OrderedPartition.from_labels(best)
    check = is_tournament_transitive if tournament else is_transitive
    if not check(g, witness):
        raise InvariantViolation("search produced a witness that fails verification")
    return SolveReport(value, witness, "oracle", (lo, hi), nodes)


def transitivity_exact(g: Graph, cap: int | None = None) -> SolveReport:
    """Tr(g) with a witness transitive partition."""
    _check_cap(g, cap)
    return _maximize(g, tournament=False, lo=1, hi=g.max_degree + 1)


def tournament_transitivity_exact(g: Graph, cap: int | None = None) -> SolveReport:
    """TTr(g) with a witness tournament transitive partition."""
    _check_cap(g, cap)
    lo, hi = bounds_ttr(g)
    return _maximize(g, tournament=True, lo=lo, hi=hi)


def has_partition(g: Graph, k: int, tournament: bool = True, cap: int | None = None,
                  fixed: dict[int, int] | None = None) -> OrderedPartition | None:
    """A (tournament) transitive partition with exactly ``k`` parts, if any."""
    _check_cap(g, cap)
    labels, _ = _feasible(g, k, tournament, fixed=fixed)
    return None if labels is None else OrderedPartition.from_labels(labels)


def transitive_number_exact(g: Graph, v: int, cap: int | None = None) -> int:
    """Largest p such that some transitive partition puts ``v`` in ``V_p``."""
    _check_cap(g, cap)
    p = 1
    # v in V_p of a larger partition can be moved to a p-part one by merging
    # the trailing parts into V_1, so only size-p partitions are searched.
    for q in range(2, g.degree(v) + 2):
        labels, _ = _feasible(g, q, tournament=False, fixed={v: q})
        if labels is None:
            break
        p = q
    return p


def normal_form_witness(g: Graph, cap: int | None = None) -> OrderedPartition:
    """A TTr-sized tournament partition with ``|V_k| = 1`` and ``|V_{k-1}| = 2``
    whose last vertex is adjacent to exactly one vertex of ``V_{k-1}``.

    Requires a connected graph with TTr >= 3.
    """
    _check_cap(g, cap)
    if len(connected_components(g)) != 1:
        raise ValueError("normal_form_witness needs a connected graph")
    k = tournament_transitivity_exact(g, cap).value
    if k < 3:
        raise ValueError(f"normal_form_witness needs TTr >= 3, got {k}")
    for z in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        for x in g.neighbors(z):
            for y in range(g.n):
                if y == z or y == x or y in g.adj[z]:
                    continue
                labels, _ = _feasible(g, k, True, fixed={z: k, x: k - 1, y: k - 1},
                                      forbidden=(k - 1, k))
                if labels is not None:
                    return OrderedPartition.from_labels(labels)
    raise InvariantViolation("no normal-form witness exists although TTr >= 3")


def all_partitions(g: Graph, k: int, tournament: bool = False):
    """Every k-part (tournament) transitive partition, by brute force.

    Intended for tiny graphs only (k**n label vectors are inspected).
    """
    from itertools import product

    check = is_tournament_transitive if tournament else is_transitive
    for labels in product(range(1, k + 1), repeat=g.n):
        if len(set(labels)) != k:
            continue
        p = OrderedPartition.from_labels(labels)
        if check(g, p):
            yield p


__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "InvariantViolation",
    "SolveReport",
    "bounds_ttr",
    "lower_bound_ttr",
    "upper_bound_ttr",
    "transitivity_exact",
    "tournament_transitivity_exact",
    "transitive_number_exact",
    "normal_form_witness",
    "has_partition",
    "all_partitions",
]
