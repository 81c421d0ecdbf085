"""Simple undirected graphs on contiguous ids, family generators and edge-list I/O.

Vertex ids are ``0..n-1``.  Constructions that are usually written with
1-based names (``v_1..v_n``, ``x_1..x_m``) map name ``v_i`` to id ``i - 1``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

log = logging.getLogger(__name__)


class GraphError(ValueError):
    """Invalid graph data or an operation applied outside its domain."""


class GraphParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Immutable simple graph with per-vertex neighbor sets."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        return cls(len(adj), ((u, v) for u, vs in enumerate(adj) for v in vs if u < v))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbor sets as integer bitmasks (bit v set iff v is a neighbor)."""
        out = []
        for s in self.adj:
            m = 0
            for v in s:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def max_degree(self) -> int:
        return max(len(s) for s in self.adj)

    @property
    def min_degree(self) -> int:
        return min(len(s) for s in self.adj)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# --- families -------------------------------------------------------------

FAMILY_TAGS = ("complete", "path", "cycle", "complete_bipartite", "star", "clique_union")

_ALIASES = {
    "k": "complete",
    "complete": "complete",
    "p": "path",
    "path": "path",
    "c": "cycle",
    "cycle": "cycle",
    "kmn": "complete_bipartite",
    "bipartite": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
    "star": "star",
    "s": "star",
    "clique_union": "clique_union",
    "cliques": "clique_union",
}

_ARITY = {"complete": 1, "path": 1, "cycle": 1, "star": 1, "complete_bipartite": 2, "clique_union": 2}


@dataclass(frozen=True)
class GraphFamily:
    """A named family member, e.g. ``GraphFamily("path", (5,))``.

    ``clique_union`` takes ``(t, n)``: t disjoint copies of K_n, t <= n.
    ``star`` takes ``(t,)`` and means K_{1,t}.
    """

    tag: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise GraphError(f"unknown family {self.tag!r}")
        if len(self.params) != _ARITY[self.tag]:
            raise GraphError(f"{self.tag} takes {_ARITY[self.tag]} parameter(s), got {self.params}")
        if any(p < 1 for p in self.params):
            raise GraphError(f"family parameters must be positive, got {self.params}")
        if self.tag == "cycle" and self.params[0] < 3:
            raise GraphError("cycles need at least 3 vertices")
        if self.tag == "clique_union" and self.params[0] > self.params[1]:
            t, n = self.params
            raise GraphError(f"clique_union needs t <= n, got t={t}, n={n}")

    @classmethod
    def parse(cls, spec: str) -> GraphFamily:
        """Parse ``name:p1[,p2]`` such as ``path:5`` or ``kmn:2,3``."""
        name, _, rest = spec.partition(":")
        tag = _ALIASES.get(name.strip().lower())
        if tag is None:
            raise GraphError(f"unknown family {name!r}")
        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError:
            raise GraphError(f"bad family parameters in {spec!r}") from None
        return cls(tag, params)

    def __str__(self) -> str:
        return f"{self.tag}:{','.join(map(str, self.params))}"


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """K_{m,n} with side X = {0..m-1} and side Y = {m..m+n-1}."""
    return Graph(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def generate(family: GraphFamily) -> Graph:
    tag, p = family.tag, family.params
    if tag == "complete":
        return complete_graph(p[0])
    if tag == "path":
        return path_graph(p[0])
    if tag == "cycle":
        return cycle_graph(p[0])
    if tag == "complete_bipartite":
        return complete_bipartite_graph(*p)
    if tag == "star":
        return complete_bipartite_graph(1, p[0])
    t, n = p
    g, _ = disjoint_union([complete_graph(n)] * t)
    return g


# --- structural operations -----------------------------------------------

def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``; new ids follow ascending old ids.

    Returns the graph and the old -> new id map.
    """
    keep = sorted(set(s))
    if not keep:
        raise GraphError("induced subgraph of an empty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError("vertex set not contained in the graph")
    remap = {old: new for new, old in enumerate(keep)}
    edges = ((remap[u], remap[v]) for u in keep for v in g.adj[u] if u < v and v in remap)
    return Graph(len(keep), edges), remap


def disjoint_union(parts: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Block-diagonal union; part ``i`` occupies ids ``offsets[i] ..``."""
    if not parts:
        raise GraphError("disjoint union of zero graphs")
    offsets, edges, total = [], [], 0
    for h in parts:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in h.edges())
        total += h.n
    return Graph(total, edges), offsets


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def has_induced_p3(g: Graph) -> bool:
    """True iff some vertex has two nonadjacent neighbors."""
    for v in range(g.n):
        nb = g.neighbors(v)
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if b not in g.adj[a]:
                    return True
    return False


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def tree_path(g: Graph, u: int, v: int) -> list[int]:
    """The unique u-v path of a tree, endpoints included."""
    if not is_tree(g):
        raise GraphError("tree_path needs a tree")
    if u == v:
        raise GraphError("tree_path needs distinct endpoints")
    parent = {u: -1}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b in g.adj[a]:
            if b not in parent:
                parent[b] = a
                queue.append(b)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


# --- edge-list I/O --------------------------------------------------------

def parse_edge_list_with_stats(text: str) -> tuple[Graph, int]:
    """Parse the ``n m`` / ``u v`` format; return the graph and the number
    of duplicate edge lines that were collapsed."""
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, tok) for i, tok in lines if tok and not tok[0].startswith("#")]
    if not lines:
        raise GraphParseError(1, "missing header 'n m'")
    lineno, head = lines[0]
    if len(head) != 2:
        raise GraphParseError(lineno, "header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphParseError(lineno, "header must be two integers") from None
    if n < 1 or m < 0:
        raise GraphParseError(lineno, f"invalid header n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise GraphParseError(where, f"header announces {m} edges, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    dupes = 0
    for lineno, tok in body:
        if len(tok) != 2:
            raise GraphParseError(lineno, "edge line must be 'u v'")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise GraphParseError(lineno, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            dupes += 1
        seen.add(key)
    return Graph(n, seen), dupes


def parse_edge_list(text: str) -> Graph:
    g, dupes = parse_edge_list_with_stats(text)
    if dupes:
        log.warning("collapsed %d duplicate edge line(s)", dupes)
    return g


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
