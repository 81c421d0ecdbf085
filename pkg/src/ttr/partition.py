"""Ordered vertex partitions and the (tournament) transitivity checks.

Parts are numbered from 1 in every user-facing value (reports, text
format), matching the usual ``V_1, ..., V_k`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

MISSING = "missing-domination"
BACK = "forbidden-back-domination"


class PartitionError(ValueError):
    pass


class OrderedPartition:
    """Sequence of nonempty, pairwise disjoint vertex sets ``V_1..V_k``."""

    def __init__(self, parts: Iterable[Iterable[int]]):
        ps = tuple(frozenset(p) for p in parts)
        if not ps:
            raise PartitionError("a partition needs at least one part")
        seen: set[int] = set()
        for i, p in enumerate(ps, 1):
            if not p:
                raise PartitionError(f"part {i} is empty")
            if seen & p:
                raise PartitionError(f"part {i} repeats vertices {sorted(seen & p)}")
            seen |= p
        self.parts = ps

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> OrderedPartition:
        """Build from ``labels[v]`` = 1-based part index of vertex v."""
        k = max(labels)
        parts: list[list[int]] = [[] for _ in range(k)]
        for v, lab in enumerate(labels):
            parts[lab - 1].append(v)
        return cls(parts)

    @classmethod
    def single(cls, n: int) -> OrderedPartition:
        return cls([range(n)])

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedPartition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return "OrderedPartition(" + repr([sorted(p) for p in self.parts]) + ")"

    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.parts)

    def index_of(self, v: int) -> int:
        for i, p in enumerate(self.parts, 1):
            if v in p:
                return i
        raise KeyError(v)

    def labels(self, n: int) -> list[int]:
        out = [0] * n
        for i, p in enumerate(self.parts, 1):
            for v in p:
                out[v] = i
        return out

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]

    def check_covers(self, g: Graph) -> None:
        if self.vertices() != frozenset(range(g.n)):
            raise PartitionError(f"partition does not cover exactly the vertices 0..{g.n - 1}")


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    kind: str
    witness: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    first_violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


def dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """Every vertex of ``b`` has a neighbor in ``a``."""
    a, b = frozenset(a), frozenset(b)
    if not a or not b:
        raise PartitionError("dominates() needs nonempty sets")
    if a & b:
        raise PartitionError("dominates() needs disjoint sets")
    return all(g.adj[v] & a for v in b)


def _undominated(g: Graph, a: frozenset[int], b: frozenset[int]) -> int | None:
    for v in sorted(b):
        if not g.adj[v] & a:
            return v
    return None


def _check(g: Graph, p: OrderedPartition, tournament: bool) -> VerificationReport:
    p.check_covers(g)
    parts = p.parts
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            miss = _undominated(g, parts[i], parts[j])
            if miss is not None:
                return VerificationReport(False, Violation(i + 1, j + 1, MISSING, miss))
            if tournament and _undominated(g, parts[j], parts[i]) is None:
                return VerificationReport(False, Violation(i + 1, j + 1, BACK, min(parts[i])))
    return VerificationReport(True)


def is_transitive(g: Graph, p: OrderedPartition) -> VerificationReport:
    """``V_i`` dominates ``V_j`` for every i < j."""
    return _check(g, p, tournament=False)


def is_tournament_transitive(g: Graph, p: OrderedPartition) -> VerificationReport:
    """Transitive, and additionally ``V_j`` never dominates ``V_i`` for i < j.

    The first violating pair in lexicographic order is reported.  For a
    back-domination the witness is the smallest vertex of ``V_i``.
    """
    return _check(g, p, tournament=True)


def merge_first_two(p: OrderedPartition) -> OrderedPartition:
    if len(p) < 2:
        raise PartitionError("merge_first_two needs at least two parts")
    return OrderedPartition([p[0] | p[1], *p.parts[2:]])


def shrink_to(p: OrderedPartition, j: int) -> OrderedPartition:
    """Merge leading parts until exactly ``j`` remain."""
    if not 1 <= j <= len(p):
        raise PartitionError(f"cannot shrink a {len(p)}-part partition to {j} parts")
    head = frozenset().union(*p.parts[: len(p) - j + 1])
    return OrderedPartition([head, *p.parts[len(p) - j + 1:]])


def format_partition(p: OrderedPartition) -> str:
    return "".join(" ".join(map(str, part)) + "\n" for part in p.as_lists())


def parse_partition(text: str) -> OrderedPartition:
    parts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            parts.append([int(tok) for tok in line.split()])
        except ValueError:
            raise PartitionError(f"line {lineno}: part must list integer vertex ids") from None
    return OrderedPartition(parts)
