"""Signed rotation systems, face tracing and Euler genus.

A rotation system fixes, for every vertex, the cyclic order of its
neighbors; a sign of -1 on an edge means that walking across it flips the
local orientation (a crosscap crossing). Face tracing then recovers the
facial walks of the embedding, and Euler's formula gives its Euler genus:
0 for the sphere/plane, 1 for the projective plane.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

import networkx as nx

from .graph import INFINITY, Graph, Report, girth, norm_edge
from .tokens import token_graph
from .graph import cycle_graph


class Surface(str, enum.Enum):
    PLANE = "plane"
    PROJECTIVE = "projective"

    @property
    def max_euler_genus(self) -> int:
        return 0 if self is Surface.PLANE else 1


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic neighbor orders plus per-edge signs.

    ``signs`` is aligned with ``host.edges``.
    """

    host: Graph
    rotations: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]

    @classmethod
    def build(cls, host: Graph, rotations: Sequence[Sequence[int]],
              signs: Mapping[tuple[int, int], int] | None = None) -> "RotationSystem":
        signs = signs or {}
        sign_list = tuple(int(signs.get(e, 1)) for e in host.edges)
        return cls(host, tuple(tuple(int(w) for w in r) for r in rotations), sign_list)

    def sign(self, u: int, v: int) -> int:
        return self.signs[self._edge_index[norm_edge(u, v)]]

    @property
    def _edge_index(self) -> dict:
        cache = self.__dict__.get("_eidx")
        if cache is None:
            cache = {e: i for i, e in enumerate(self.host.edges)}
            object.__setattr__(self, "_eidx", cache)
        return cache

    def check(self) -> None:
        """Raise :class:`WitnessError` unless every incidence appears exactly once."""
        g = self.host
        if len(self.rotations) != g.order:
            raise WitnessError(f"rotation has {len(self.rotations)} vertices, host has {g.order}")
        if len(self.signs) != g.size:
            raise WitnessError(f"{len(self.signs)} signs for {g.size} edges")
        if any(s not in (1, -1) for s in self.signs):
            raise WitnessError("signs must be +1 or -1")
        for v, rot in enumerate(self.rotations):
            if sorted(rot) != list(g.adjacency[v]):
                raise WitnessError(f"rotation at vertex {v} is not a permutation of its neighbors")

    def relabel(self, perm: Sequence[int], new_host: Graph) -> "RotationSystem":
        """Transport along the vertex map ``v -> perm[v]`` onto ``new_host``."""
        rot: list[tuple[int, ...]] = [()] * new_host.order
        for v, r in enumerate(self.rotations):
            rot[perm[v]] = tuple(perm[w] for w in r)
        signs = {norm_edge(perm[u], perm[v]): s for (u, v), s in zip(self.host.edges, self.signs)}
        if set(signs) != new_host.edge_set:
            raise WitnessError("relabeling does not map the host onto the new host")
        return RotationSystem.build(new_host, rot, signs)

    def with_sign_flipped(self, u: int, v: int) -> "RotationSystem":
        i = self._edge_index[norm_edge(u, v)]
        signs = list(self.signs)
        signs[i] = -signs[i]
        return RotationSystem(self.host, self.rotations, tuple(signs))


@dataclass(frozen=True)
class EmbeddingWitness:
    rotation: RotationSystem
    faces: tuple[tuple[int, ...], ...]
    euler_genus: int
    face_girth: float | int

    @property
    def host(self) -> Graph:
        return self.rotation.host

    def to_json(self) -> dict:
        g = self.host
        eidx = {e: i for i, e in enumerate(g.edges)}
        return {
            "order": g.order,
            "edges": [list(e) for e in g.edges],
            "rotation": [[eidx[norm_edge(v, w)] for w in r] for v, r in enumerate(self.rotation.rotations)],
            "signs": list(self.rotation.signs),
            "faces": [list(f) for f in self.faces],
            "euler_genus": self.euler_genus,
            "face_girth": None if self.face_girth == INFINITY else self.face_girth,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EmbeddingWitness":
        g = Graph(data["order"], data["edges"])
        edges = [tuple(e) for e in data["edges"]]
        if len(set(map(lambda e: norm_edge(*e), edges))) != len(edges):
            raise WitnessError("duplicate edges in witness")
        rotations = []
        for v, r in enumerate(data["rotation"]):
            nbrs = []
            for i in r:
                a, b = edges[i]
                if v not in (a, b):
                    raise WitnessError(f"edge {i} in rotation of {v} is not incident to it")
                nbrs.append(b if a == v else a)
            rotations.append(nbrs)
        signs = {norm_edge(*e): s for e, s in zip(edges, data["signs"])}
        rot = RotationSystem.build(g, rotations, signs)
        fg = data.get("face_girth")
        return cls(
            rot,
            tuple(tuple(f) for f in data["faces"]),
            int(data["euler_genus"]),
            INFINITY if fg is None else fg,
        )


def trace_faces(r: RotationSystem) -> EmbeddingWitness:
    """Trace the facial walks of a signed rotation system.

    A walker leaving ``v`` along ``e`` with local orientation ``eps``
    arrives at ``w``, multiplies ``eps`` by the sign of ``e`` and leaves
    along the successor of ``e`` in the rotation at ``w`` (the predecessor
    when ``eps`` is -1). Each face is met twice, once per direction; the
    reverse of state ``(v, e, eps)`` is ``(w, e, -eps * sign(e))``, and
    marking it keeps one traversal per face.
    """
    r.check()
    g = r.host
    rot = r.rotations
    pos = [{w: i for i, w in enumerate(rv)} for rv in rot]
    sign = {e: s for e, s in zip(g.edges, r.signs)}

    used = set()
    faces = []
    for v0 in range(g.order):
        for w0 in rot[v0]:
            for eps0 in (1, -1):
                if (v0, w0, eps0) in used:
                    continue
                walk = []
                v, w, eps = v0, w0, eps0
                while True:
                    if (v, w, eps) in used:
                        raise WitnessError(f"facial walk from {(v0, w0, eps0)} re-entered a used side")
                    used.add((v, w, eps))
                    walk.append(v)
                    eps2 = eps * sign[norm_edge(v, w)]
                    used.add((w, v, -eps2))
                    d = len(rot[w])
                    nxt = rot[w][(pos[w][v] + eps2) % d]
                    v, w, eps = w, nxt, eps2
                    if (v, w, eps) == (v0, w0, eps0):
                        break
                faces.append(tuple(walk))

    total = sum(len(f) for f in faces)
    if total != 2 * g.size:
        raise WitnessError(f"facial walks have total length {total}, expected {2 * g.size}")
    side_count: dict = {}
    for f in faces:
        for i, v in enumerate(f):
            e = norm_edge(v, f[(i + 1) % len(f)])
            side_count[e] = side_count.get(e, 0) + 1
    if any(c != 2 for c in side_count.values()) or len(side_count) != g.size:
        raise WitnessError("some edge is not traversed exactly twice")

    comps = g.components()
    isolated = sum(1 for c in comps if len(c) == 1)
    # an isolated vertex is a sphere with one (empty) face
    n_faces = len(faces) + isolated
    genus = 2 * len(comps) - g.order + g.size - n_faces
    face_girth = min((len(f) for f in faces), default=INFINITY)
    return EmbeddingWitness(r, tuple(faces), genus, face_girth)


def canonical_face(face: Sequence[int]) -> tuple[int, ...]:
    """Smallest rotation of the walk or of its reverse."""
    f = list(face)
    if not f:
        return ()
    cands = []
    for seq in (f, f[::-1]):
        cands.extend(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))
    return min(cands)


def face_signature(faces) -> list[tuple[int, ...]]:
    return sorted(canonical_face(f) for f in faces)


def verify_witness(w: EmbeddingWitness, surface: Surface, min_girth: int) -> Report:
    surface = Surface(surface)
    report = Report(f"embedding witness on the {surface.value}")
    try:
        fresh = trace_faces(w.rotation)
    except WitnessError as exc:
        report.fail(f"rotation system does not trace: {exc}")
        return report
    if fresh.euler_genus != w.euler_genus:
        report.fail(f"claimed Euler genus {w.euler_genus}, traced {fresh.euler_genus}")
    if face_signature(fresh.faces) != face_signature(w.faces):
        report.fail(f"claimed faces differ from traced faces ({len(w.faces)} vs {len(fresh.faces)})")
    if fresh.face_girth != w.face_girth:
        report.fail(f"claimed face girth {w.face_girth}, traced {fresh.face_girth}")
    if fresh.euler_genus > surface.max_euler_genus:
        report.fail(f"Euler genus {fresh.euler_genus} exceeds {surface.max_euler_genus}")
    gg = girth(w.host)
    if gg < min_girth:
        report.fail(f"girth {gg} < {min_girth}")
    return report


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: RotationSystem | None = None

    def witness(self) -> EmbeddingWitness:
        if self.rotation is None:
            raise WitnessError("non-planar graphs carry no witness")
        return trace_faces(self.rotation)


def planarity_test(g: Graph) -> PlanarityResult:
    """Planarity via networkx's left-right test, re-checked by face tracing."""
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges)
    planar, emb = nx.check_planarity(G)
    if not planar:
        return PlanarityResult(False)
    rot = RotationSystem.build(g, [list(emb.neighbors_cw_order(v)) for v in range(g.order)])
    w = trace_faces(rot)
    if w.euler_genus != 0:
        raise WitnessError(f"planarity embedding traced to Euler genus {w.euler_genus}")
    return PlanarityResult(True, rot)


def max_edges_girth4(order: int, surface: Surface) -> int:
    """Edge bound for a girth >= 4 graph embedded on the surface.

    >>> max_edges_girth4(15, Surface.PLANE), max_edges_girth4(3, Surface.PLANE)
    (26, 2)
    >>> max_edges_girth4(10, Surface.PROJECTIVE)
    18
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if Surface(surface) is Surface.PLANE:
        return 2 * (order - 2) if order >= 4 else order - 1
    return 2 * order - 2


def projective_embedding_f2_cycle(n: int) -> RotationSystem:
    """Rotation system of ``F_2(C_n)`` on the projective plane.

    Write the token pair ``{c, c+d}`` as ``(c, d)`` with cyclic distance
    ``d <= n/2``. Drawing ``(c, d)`` at angle ``c + d/2`` and radius ``d``
    turns the layers into a cylinder tiled by quadrilaterals: ``(c, d)`` is
    joined outward to ``(c, d+1)`` and ``(c-1, d+1)``. The outermost circle
    closes up under the half-turn ``(c, m+1) = (c+m+1, m)``, which is an
    antipodal identification of the disk boundary, i.e. a crosscap; edges
    that cross it carry sign -1. Every vertex lists its neighbors as
    (outward-right, outward-left, inward-left, inward-right).
    """
    if n < 4:
        raise ValueError(f"F_2(C_n) has girth 3 for n < 4, got n={n}")
    tg = token_graph(cycle_graph(n), 2)
    host = tg.graph
    m = n // 2

    def vid(c: int, d: int) -> int:
        return tg.index_of((c % n, (c + d) % n))

    rotations: list[list[int]] = [[] for _ in range(host.order)]
    signs: dict[tuple[int, int], int] = {}

    def crossing(u: int, v: int) -> None:
        signs[norm_edge(u, v)] = -1

    if n % 2:
        for c in range(n):
            for d in range(1, m + 1):
                v = vid(c, d)
                if d < m:
                    out = [vid(c, d + 1), vid(c - 1, d + 1)]
                else:
                    out = [vid(c + m + 1, m), vid(c + m, m)]
                    for w in out:
                        crossing(v, w)
                inward = [vid(c, d - 1), vid(c + 1, d - 1)] if d > 1 else []
                rotations[v] = out + inward
    else:
        for c in range(n):
            for d in range(1, m):
                v = vid(c, d)
                out = [vid(c, d + 1), vid(c - 1, d + 1)]
                if d == m - 1:
                    # layer m is drawn at representatives c in [0, m)
                    if c % n >= m:
                        crossing(v, out[0])
                    if (c - 1) % n >= m:
                        crossing(v, out[1])
                inward = [vid(c, d - 1), vid(c + 1, d - 1)] if d > 1 else []
                rotations[v] = out + inward
        for c in range(m):
            v = vid(c, m)
            out = [vid(c + m + 1, m - 1), vid(c + m, m - 1)]
            inward = [vid(c, m - 1), vid(c + 1, m - 1)]
            rotations[v] = out + inward
    return RotationSystem.build(host, rotations, signs)
