"""Exhaustive searches used as independent oracles.

``rotation_search`` and ``planar_rotation_search`` enumerate rotation
systems directly, so they share nothing with the networkx planarity test
they are used to check. ``brute_force_theta4`` computes girth-4 thickness by
backtracking over edge-to-part assignments.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod

from .embeddings import RotationSystem, Surface, max_edges_girth4, planarity_test, trace_faces
from .graph import Graph, norm_edge

EDGE_LIMIT = 20
ROTATION_LIMIT = 2_000_000


class OracleLimitError(RuntimeError):
    pass


def _spanning_forest(g: Graph) -> set:
    tree = set()
    seen = [False] * g.order
    for s in range(g.order):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    tree.add(norm_edge(u, w))
                    queue.append(w)
    return tree


def _count_faces(rot, pos, sign) -> int:
    used = set()
    faces = 0
    for v0, rv in enumerate(rot):
        for w0 in rv:
            for eps0 in (1, -1):
                if (v0, w0, eps0) in used:
                    continue
                faces += 1
                v, w, eps = v0, w0, eps0
                while True:
                    used.add((v, w, eps))
                    eps2 = eps * sign[(v, w) if v < w else (w, v)]
                    used.add((w, v, -eps2))
                    rw = rot[w]
                    nxt = rw[(pos[w][v] + eps2) % len(rw)]
                    v, w, eps = w, nxt, eps2
                    if (v, w, eps) == (v0, w0, eps0):
                        break
    return faces


def rotation_search_size(g: Graph, signed: bool = False) -> int:
    n = prod(factorial(max(d - 1, 0)) for d in map(len, g.adjacency))
    if signed:
        n *= 2 ** (g.size - len(_spanning_forest(g)))
    return n


def rotation_search(g: Graph, max_genus: int, signed: bool = False,
                    limit: int = ROTATION_LIMIT) -> RotationSystem | None:
    """First rotation system (fixed enumeration order) of Euler genus <= ``max_genus``.

    Neighbor cycles are enumerated with the first neighbor pinned; when
    ``signed``, signs range over the non-forest edges (forest edges can
    always be switched to +1). Returns ``None`` when no candidate qualifies.
    """
    total = rotation_search_size(g, signed)
    if total > limit:
        raise OracleLimitError(f"{total} rotation systems exceed the search limit {limit}")
    comps = g.components()
    isolated = sum(1 for c in comps if len(c) == 1)
    # Euler genus = 2c - V + E - F, so genus <= max_genus needs F >= target
    target = 2 * len(comps) - g.order + g.size - max_genus - isolated

    choices = []
    for v in range(g.order):
        nb = g.adjacency[v]
        if len(nb) <= 2:
            choices.append([tuple(nb)])
        else:
            choices.append([(nb[0],) + p for p in permutations(nb[1:])])
    forest = _spanning_forest(g)
    free = [e for e in g.edges if e not in forest]
    sign_choices = product((1, -1), repeat=len(free)) if signed else [()]

    for signs in sign_choices:
        sign = {e: 1 for e in g.edges}
        sign.update(zip(free, signs))
        for rot in product(*choices):
            pos = [{w: i for i, w in enumerate(r)} for r in rot]
            if _count_faces(rot, pos, sign) >= target:
                rs = RotationSystem.build(g, rot, sign)
                assert trace_faces(rs).euler_genus <= max_genus
                return rs
    return None


def planar_rotation_search(g: Graph) -> RotationSystem | None:
    """Exhaustive search for a genus-0 rotation system, with branch-and-bound.

    Vertices receive rotations one at a time (maximum-cardinality order,
    one vertex fixed up to mirror image). With some rotations still open,
    the darts not yet on a closed face split into maximal open chains; a
    face through a chain running from ``a`` to ``b`` has length at least
    ``len + dist(b, a)`` (and at least 3, or 2 when a K_2 component
    exists). Two upper bounds on the faces still to come follow: the number
    of smallest such lengths that fit in the remaining darts, and the sum
    of ``len / min_length`` over chains. A branch dies when closed faces
    plus either bound fall short of ``E - V + 2c``.
    """
    n = g.order
    adj = g.adjacency
    # Euler: a simple planar graph on V >= 3 vertices has at most 3V - 6 edges
    if n >= 3 and g.size > 3 * n - 6:
        return None
    comps = g.components()
    target = 2 * len(comps) - n + g.size - sum(1 for c in comps if len(c) == 1)
    minlen = 2 if any(len(c) == 2 for c in comps) else 3
    dist = []
    for s in range(n):
        d = [n] * n
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if d[w] == n:
                    d[w] = d[u] + 1
                    queue.append(w)
        dist.append(d)
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < n:
        v = max((u for u in range(n) if u not in placed),
                key=lambda u: (sum(w in placed for w in adj[u]), len(adj[u]), -u))
        order.append(v)
        placed.add(v)

    rot: list = [None] * n
    pos: list = [None] * n
    darts = [(u, w) for u in range(n) for w in adj[u]]

    def face_bound() -> int:
        visited = set()
        needs = []
        remaining = 0
        ratio = Fraction(0)
        for u in range(n):
            if rot[u] is not None:
                continue
            for w in adj[u]:
                x = (u, w)
                length = 0
                while True:
                    visited.add(x)
                    length += 1
                    a, b = x
                    if rot[b] is None:
                        break
                    x = (b, rot[b][(pos[b][a] + 1) % len(rot[b])])
                need = max(length + dist[b][u], minlen)
                needs.append(need)
                remaining += length
                ratio += Fraction(length, need)
        closed = 0
        for d in darts:
            if d in visited:
                continue
            x = d
            while x not in visited:
                visited.add(x)
                a, b = x
                x = (b, rot[b][(pos[b][a] + 1) % len(rot[b])])
            closed += 1
        fit = 0
        for need in sorted(needs):
            remaining -= need
            if remaining < 0:
                break
            fit += 1
        return closed + min(fit, int(ratio))

    mirror_free = [True]

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        nb = adj[v]
        if len(nb) <= 2:
            cands = [tuple(nb)]
        else:
            cands = [(nb[0],) + p for p in permutations(nb[1:])]
            if mirror_free[0]:
                cands = [c for c in cands if c[1] < c[-1]]
        saved = mirror_free[0]
        if len(nb) > 2:
            mirror_free[0] = False
        for c in cands:
            rot[v] = c
            pos[v] = {w: j for j, w in enumerate(c)}
            if face_bound() >= target and extend(i + 1):
                return True
        rot[v] = pos[v] = None
        mirror_free[0] = saved
        return False

    if not extend(0):
        return None
    rs = RotationSystem.build(g, rot)
    assert trace_faces(rs).euler_genus == 0
    return rs


def is_planar_by_search(g: Graph) -> bool:
    return planar_rotation_search(g) is not None


def _part_distance_at_most(adj: list[set], u: int, v: int, bound: int) -> bool:
    """True if ``v`` is within ``bound`` steps of ``u`` in the part."""
    if bound <= 0:
        return u == v
    frontier = {u}
    seen = {u}
    for _ in range(bound):
        nxt = set()
        for x in frontier:
            for y in adj[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = nxt
        if not frontier:
            break
    return False


def _part_embeds(order: int, edges: list, surface: Surface) -> bool:
    part = Graph(order, edges)
    # a non-planar graph contains a subdivided K_5 or K_{3,3}: at least 9 edges
    if len(edges) < 9:
        return True
    if planarity_test(part).planar:
        return True
    if surface is Surface.PLANE:
        return False
    return rotation_search(part, 1, signed=True) is not None


def brute_force_theta4(g: Graph, surface: Surface = Surface.PLANE, max_parts: int = 3,
                       edge_limit: int = EDGE_LIMIT, min_girth: int = 4) -> int | None:
    """Exact girth-``min_girth`` thickness by exhaustive edge assignment.

    Returns the least ``t <= max_parts`` for which some partition into ``t``
    parts has every part embeddable with girth >= ``min_girth``, or ``None``
    (the "exceeds max_parts" answer) if even ``max_parts`` parts do not suffice.
    """
    parts = brute_force_partition(g, surface, max_parts, edge_limit, min_girth)
    return None if parts is None else len(parts)


def brute_force_partition(g: Graph, surface: Surface = Surface.PLANE, max_parts: int = 3,
                          edge_limit: int = EDGE_LIMIT, min_girth: int = 4) -> list[list] | None:
    """A minimum partition found by :func:`brute_force_theta4`, as edge lists.

    Edges are placed in order of decreasing endpoint degree sum. Edge ``i``
    may only open part ``used`` (the next unused one), which removes the
    relabeling symmetry; a part is rejected as soon as it exceeds the edge
    bound, closes a short cycle, or stops embedding.
    """
    surface = Surface(surface)
    if g.size > edge_limit:
        raise OracleLimitError(f"{g.size} edges exceed the brute-force limit of {edge_limit}")
    if g.size == 0:
        return []
    if surface is Surface.PROJECTIVE and min_girth < 4:
        raise ValueError("projective search assumes triangle-free parts")
    cap = max_edges_girth4(g.order, surface) if min_girth >= 4 else g.size
    deg = [len(a) for a in g.adjacency]
    order = sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))

    for t in range(1, max_parts + 1):
        adj = [[set() for _ in range(g.order)] for _ in range(t)]
        part_edges: list[list] = [[] for _ in range(t)]

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            free_room = sum(cap - len(part_edges[p]) for p in range(used)) + (t - used) * cap
            if free_room < len(order) - i:
                return False
            u, v = order[i]
            for p in range(min(used + 1, t)):
                if len(part_edges[p]) >= cap:
                    continue
                if _part_distance_at_most(adj[p], u, v, min_girth - 2):
                    continue
                part_edges[p].append((u, v))
                if _part_embeds(g.order, part_edges[p], surface):
                    adj[p][u].add(v)
                    adj[p][v].add(u)
                    if place(i + 1, max(used, p + 1)):
                        return True
                    adj[p][u].discard(v)
                    adj[p][v].discard(u)
                part_edges[p].pop()
            return False

        if place(0, 0):
            return [list(p) for p in part_edges]
    return None
