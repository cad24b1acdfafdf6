"""Hamiltonian path and cycle factorizations.

Every constructor runs :func:`verify_factorization` before returning, so a
transcription slip in a construction surfaces immediately instead of
propagating into a certificate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Graph,
    Report,
    VertexSequence,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)


class Kind(str, enum.Enum):
    PATHS = "paths"
    CYCLES = "cycles"


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    host: Graph
    kind: Kind
    members: tuple[VertexSequence, ...]

    @property
    def k(self) -> int:
        return len(self.members)

    def edge_parts(self) -> list[list[tuple[int, int]]]:
        return [m.edges() for m in self.members]

    def to_json(self) -> dict:
        from .graph6 import write_graph6

        return {
            "host_graph6": write_graph6(self.host),
            "kind": self.kind.value,
            "members": [list(m.vertices) for m in self.members],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Factorization":
        from .graph6 import parse_graph6

        kind = Kind(data["kind"])
        closed = kind is Kind.CYCLES
        return cls(
            parse_graph6(data["host_graph6"]),
            kind,
            tuple(VertexSequence(tuple(m), closed) for m in data["members"]),
        )


def verify_factorization(f: Factorization) -> Report:
    report = Report(f"factorization into Hamiltonian {f.kind.value}")
    host = f.host
    owner: dict[tuple[int, int], int] = {}
    if not f.members:
        report.fail("no members")
    for i, m in enumerate(f.members):
        if m.closed != (f.kind is Kind.CYCLES):
            report.fail(f"member {i} is {'closed' if m.closed else 'open'}, expected {f.kind.value}")
        if sorted(m.vertices) != list(range(host.order)):
            report.fail(f"member {i} does not visit every vertex exactly once")
        if f.kind is Kind.CYCLES and len(m) < 3:
            report.fail(f"member {i} is too short to be a cycle")
        for e in m.edges():
            if e not in host.edge_set:
                report.fail(f"member {i} uses non-edge {e}")
            elif e in owner:
                report.fail(f"member {i} reuses edge {e} of member {owner[e]} (overlap)")
            else:
                owner[e] = i
    uncovered = host.edge_set - owner.keys()
    if uncovered:
        report.fail(f"{len(uncovered)} host edges uncovered, e.g. {min(uncovered)}")
    return report


def _checked(f: Factorization) -> Factorization:
    report = verify_factorization(f)
    if not report:
        raise FactorizationError(str(report))
    return f


def _zigzag(m: int) -> list[int]:
    """0, 1, m-1, 2, m-2, ... : a Hamiltonian path of K_m using every difference once."""
    seq = [0]
    for t in range(1, m):
        seq.append((t + 1) // 2 if t % 2 else m - t // 2)
    return seq


def walecki_paths(n: int) -> Factorization:
    """K_n (n even) as n/2 Hamiltonian paths, translates of the zigzag.

    >>> [m.vertices for m in walecki_paths(4).members]
    [(0, 1, 3, 2), (1, 2, 0, 3)]
    """
    if n < 2 or n % 2:
        raise ValueError(f"walecki_paths needs even n >= 2, got {n}")
    base = _zigzag(n)
    members = tuple(VertexSequence(tuple((v + i) % n for v in base)) for i in range(n // 2))
    return _checked(Factorization(complete_graph(n), Kind.PATHS, members))


def walecki_cycles(n: int) -> Factorization:
    """K_n (n odd) as (n-1)/2 Hamiltonian cycles through the hub n-1.

    >>> [m.vertices for m in walecki_cycles(5).members]
    [(4, 0, 1, 3, 2), (4, 1, 2, 0, 3)]
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"walecki_cycles needs odd n >= 3, got {n}")
    m = n - 1
    hub = n - 1
    base = _zigzag(m)
    members = tuple(
        VertexSequence((hub,) + tuple((v + i) % m for v in base), closed=True)
        for i in range(m // 2)
    )
    return _checked(Factorization(complete_graph(n), Kind.CYCLES, members))


def bipartite_cycles(n: int) -> Factorization:
    """K_{n,n} (n even) as n/2 Hamiltonian cycles.

    Side A is ``0..n-1`` and side B is ``n..2n-1``. Cycle ``j`` is the union of
    the perfect matchings ``M_d = {a_i b_{i+d}}`` for ``d = 2j, 2j+1``.
    """
    if n < 2 or n % 2:
        raise ValueError(f"bipartite_cycles needs even n >= 2, got {n}")
    members = []
    for j in range(n // 2):
        d = 2 * j
        seq = []
        for t in range(n):
            seq.append((-t) % n)
            seq.append(n + (d - t) % n)
        members.append(VertexSequence(tuple(seq), closed=True))
    return _checked(Factorization(complete_bipartite(n, n), Kind.CYCLES, tuple(members)))


def bipartite_paths(n: int) -> Factorization:
    """K_{n-1,n} (n even) as n/2 Hamiltonian paths: drop a_0 from each cycle of K_{n,n}."""
    if n < 2 or n % 2:
        raise ValueError(f"bipartite_paths needs even n >= 2, got {n}")
    members = []
    for cyc in bipartite_cycles(n).members:
        vs = list(cyc.vertices)
        at = vs.index(0)
        rest = vs[at + 1:] + vs[:at]
        # a_i -> i-1 for i >= 1; b_j = n+j -> (n-1)+j
        members.append(VertexSequence(tuple(v - 1 for v in rest)))
    return _checked(Factorization(complete_bipartite(n - 1, n), Kind.PATHS, tuple(members)))


def trivial_factorization(host: Graph) -> Factorization:
    """A path or cycle graph as a single-member factorization of itself."""
    n = host.order
    if host == path_graph(n):
        return _checked(Factorization(host, Kind.PATHS, (VertexSequence(tuple(range(n))),)))
    if n >= 3 and host == cycle_graph(n):
        return _checked(Factorization(host, Kind.CYCLES, (VertexSequence(tuple(range(n)), True),)))
    raise FactorizationError("host is not the canonical path or cycle")


def from_sequences(host: Graph, kind: Kind, sequences: Sequence[Sequence[int]]) -> Factorization:
    closed = kind is Kind.CYCLES
    return Factorization(host, kind, tuple(VertexSequence(tuple(s), closed) for s in sequences))
