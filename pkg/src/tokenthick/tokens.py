"""k-token graphs and edge partitions transferred from a base graph.

The vertices of ``F_k(G)`` are the k-subsets of ``V(G)``, listed in
colexicographic order so that vertex indices are reproducible; ``X`` and
``Y`` are adjacent when ``X ^ Y = {x, y}`` with ``xy`` an edge of ``G``
(one token slides along an edge to an empty vertex).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import EdgePartition, Graph, complete_graph, validate_partition


class PreconditionError(ValueError):
    pass


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of ``range(n)`` as sorted tuples, colex order.

    >>> colex_subsets(4, 2)
    [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    """
    return sorted(combinations(range(n), k), key=lambda s: s[::-1])


def format_label(subset) -> str:
    return "{" + ",".join(str(x) for x in subset) + "}"


@dataclass(frozen=True)
class TokenGraph:
    graph: Graph
    base_order: int
    k: int
    labels: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.labels)})

    def index_of(self, subset) -> int:
        return self._index[tuple(sorted(subset))]


def token_graph(g: Graph, k: int) -> TokenGraph:
    """Build ``F_k(g)``.

    >>> t = token_graph(complete_graph(4), 2)
    >>> t.graph.order, t.graph.size
    (6, 12)
    """
    n = g.order
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    labels = colex_subsets(n, k)
    index = {s: i for i, s in enumerate(labels)}
    edges = []
    for i, X in enumerate(labels):
        occupied = set(X)
        for x in X:
            for y in g.adjacency[x]:
                if y in occupied:
                    continue
                Y = tuple(sorted((occupied - {x}) | {y}))
                j = index[Y]
                if i < j:
                    edges.append((i, j))
    tg = Graph(len(labels), edges, labels=[format_label(s) for s in labels])
    expected = comb(n - 2, k - 1) * g.size if g.size else 0
    assert tg.size == expected, f"token graph size {tg.size} != C({n}-2,{k}-1)*{g.size}"
    return TokenGraph(tg, n, k, tuple(labels))


def induced_partition(g: Graph, k: int, p: EdgePartition) -> EdgePartition:
    """Carry an edge partition of ``g`` over to ``F_k(g)``.

    Part ``i`` becomes the edge set of ``F_k`` of the spanning subgraph
    ``(V(g), E_i)``; the idle tokens may sit anywhere in ``V(g)``.
    """
    report = validate_partition(g, p)
    if not report:
        raise PreconditionError(str(report))
    if g.order < k + 1:
        raise PreconditionError(f"order {g.order} <= k={k}: induced parts may be empty")
    parts = []
    for part in p.parts:
        sub = token_graph(g.spanning_subgraph(part), k)
        assert sub.graph.size == comb(g.order - 2, k - 1) * len(part)
        parts.append(sub.graph.edge_set)
    return EdgePartition(tuple(parts))


def line_graph_complete(n: int) -> Graph:
    """``L(K_n)`` realized as ``F_2(K_n)``, vertices labeled by the edges of ``K_n``."""
    if n < 2:
        raise ValueError("L(K_n) needs n >= 2")
    return token_graph(complete_graph(n), 2).graph


def verify_line_graph_correspondence(n: int) -> bool:
    if n < 2:
        raise ValueError("n must be >= 2")
    t = token_graph(complete_graph(n), 2)
    token_edges = {frozenset((t.labels[u], t.labels[v])) for u, v in t.graph.edges}
    base_edges = list(combinations(range(n), 2))
    # two edges of K_n are adjacent in the line graph iff they share one endpoint
    line_edges = {
        frozenset((e, f))
        for e, f in combinations(base_edges, 2)
        if len(set(e) & set(f)) == 1
    }
    return token_edges == line_edges
