"""Simple undirected graphs on dense 0-based vertex indices.

Everything in the toolkit speaks this representation: a vertex is an
``int`` in ``range(order)`` and an edge is a normalized pair ``(u, v)``
with ``u < v``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INFINITY = math.inf

Edge = tuple[int, int]


class MalformedInputError(ValueError):
    """Raised when input data references vertices or structure that cannot exist."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``0..order-1``.

    >>> g = Graph(3, [(0, 1), (2, 1)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> g.adjacency[1]
    (0, 2)
    """

    __slots__ = ("order", "edges", "edge_set", "adjacency", "labels")

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = (), labels=None):
        if order < 0:
            raise MalformedInputError(f"negative order {order}")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise MalformedInputError(f"edge {(u, v)} out of range for order {order}")
            es.add(norm_edge(u, v))
        adj: list[list[int]] = [[] for _ in range(order)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        object.__setattr__(self, "edge_set", frozenset(es))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        # optional display labels (token graphs use "{i,j}")
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def spanning_subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        sub = Graph(self.order, edges, labels=self.labels)
        if not sub.edge_set <= self.edge_set:
            raise MalformedInputError("edges are not a subset of the host graph")
        return sub

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edge_set == other.edge_set

    def __hash__(self):
        return hash((self.order, self.edge_set))

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"


def girth(g: Graph) -> float | int:
    """Length of the shortest cycle, or ``INFINITY`` for a forest.

    Runs a BFS from every vertex; a non-tree edge ``uw`` met during the
    search from ``root`` closes a cycle of length at most
    ``dist[u] + dist[w] + 1``, and the minimum over all roots is exact.
    """
    best = INFINITY
    for root in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass
class Report:
    """Outcome of a verification: ``ok`` plus a list of human-readable problems."""

    subject: str
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, msg: str) -> None:
        self.problems.append(msg)

    def extend(self, other: "Report", prefix: str = "") -> None:
        self.problems.extend(prefix + p for p in other.problems)

    def __str__(self):
        if self.ok:
            return f"{self.subject}: pass"
        return f"{self.subject}: FAIL\n" + "\n".join(f"  - {p}" for p in self.problems)


@dataclass(frozen=True)
class EdgePartition:
    """Ordered list of edge sets over a host graph.

    Construction does not enforce the partition invariants so that broken
    partitions can be represented and reported on; use
    :func:`validate_partition`.
    """

    parts: tuple[frozenset, ...]

    @classmethod
    def from_lists(cls, parts: Iterable[Iterable[Sequence[int]]]) -> "EdgePartition":
        return cls(tuple(frozenset(norm_edge(int(e[0]), int(e[1])) for e in p) for p in parts))

    def __len__(self):
        return len(self.parts)

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def as_lists(self) -> list[list[list[int]]]:
        return [[list(e) for e in sorted(p)] for p in self.parts]


def validate_partition(g: Graph, p: EdgePartition) -> Report:
    report = Report("edge partition")
    seen: dict[Edge, int] = {}
    for i, part in enumerate(p.parts):
        if not part:
            report.fail(f"part {i} is empty")
        for u, v in part:
            if not (0 <= u < g.order and 0 <= v < g.order) or u == v:
                raise MalformedInputError(f"part {i} has edge {(u, v)} outside a graph of order {g.order}")
            e = norm_edge(u, v)
            if e not in g.edge_set:
                report.fail(f"part {i} has non-edge {e}")
            if e in seen:
                report.fail(f"edge {e} in parts {seen[e]} and {i} (overlap)")
            else:
                seen[e] = i
    missing = g.edge_set - seen.keys()
    if missing:
        report.fail(f"{len(missing)} host edges not covered, e.g. {min(missing)} (coverage)")
    return report


@dataclass(frozen=True)
class VertexSequence:
    """A walk given by its vertices; ``closed`` adds the last-to-first edge."""

    vertices: tuple[int, ...]
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    def edges(self) -> list[Edge]:
        vs = self.vertices
        out = [norm_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed and len(vs) > 2:
            out.append(norm_edge(vs[-1], vs[0]))
        return out

    def __len__(self):
        return len(self.vertices)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


FAMILIES = {
    "complete": (complete_graph, 1),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete-bipartite": (complete_bipartite, 2),
}


def named_family(name: str, *params: int) -> Graph:
    """Canonical labeled member of a named family.

    ``named_family("complete-bipartite", 3, 4)`` has parts ``{0,1,2}`` and
    ``{3,..,6}``.
    """
    if name == "line-complete":
        # L(K_n) carries its token labels; imported lazily to keep layering one-way
        from .tokens import line_graph_complete

        if len(params) != 1:
            raise ValueError("line-complete takes one parameter")
        return line_graph_complete(params[0])
    try:
        ctor, arity = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    if any(p < 1 for p in params):
        raise ValueError(f"family parameters must be positive: {params}")
    return ctor(*params)


def parse_family(text: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"complete-bipartite:3,4"`` into ``("complete-bipartite", (3, 4))``."""
    name, _, rest = text.partition(":")
    if not rest:
        raise ValueError(f"family {text!r} needs parameters, e.g. path:6")
    try:
        params = tuple(int(x) for x in rest.replace(":", ",").split(","))
    except ValueError:
        raise ValueError(f"bad family parameters in {text!r}") from None
    return name, params


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        label = g.labels[v] if g.labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
