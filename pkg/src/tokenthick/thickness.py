"""Girth-4 thickness: lower bounds, certified decompositions of 2-token graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .embeddings import (
    EmbeddingWitness,
    Surface,
    WitnessError,
    max_edges_girth4,
    planarity_test,
    projective_embedding_f2_cycle,
    trace_faces,
    verify_witness,
)
from .factorizations import (
    Factorization,
    Kind,
    verify_factorization,
    walecki_cycles,
    walecki_paths,
)
from .graph import EdgePartition, Graph, Report, complete_graph, cycle_graph, validate_partition
from .graph6 import parse_graph6, write_graph6
from .tokens import induced_partition, token_graph


class CertificationError(RuntimeError):
    pass


def lower_bound_girth4(g: Graph, surface: Surface) -> int:
    """``ceil(|E| / max_edges_girth4(order))``; 0 for an edgeless graph."""
    if g.size == 0:
        return 0
    cap = max_edges_girth4(g.order, surface)
    return -(-g.size // cap)


def theorem_bound_arithmetic(n: int, k: int, surface: Surface) -> int:
    """Ceiling bound for ``F_2(G)`` when ``G`` (order n) splits into k spanning paths or cycles.

    Paths: ``ceil(k - (2nk - 6k) / (n^2 - n - 4))``.
    Cycles: ``ceil(k - (nk - 2k) / (n^2 - n - 2))``. Exact integer arithmetic.

    >>> theorem_bound_arithmetic(6, 3, Surface.PLANE)
    3
    """
    if n < 4 or k < 1:
        raise ValueError("need n >= 4 and k >= 1")
    if Surface(surface) is Surface.PLANE:
        den = n * n - n - 4
        num = k * den - (2 * n * k - 6 * k)
    else:
        den = n * n - n - 2
        num = k * den - (n * k - 2 * k)
    return -(-num // den)


@dataclass(frozen=True)
class DecompositionCertificate:
    host: Graph
    surface: Surface
    min_girth: int
    parts: EdgePartition
    witnesses: tuple[EmbeddingWitness, ...]
    claimed_value: int
    lower_bound: int

    def to_json(self) -> dict:
        ws = []
        for w in self.witnesses:
            wj = w.to_json()
            del wj["order"]  # always the host order
            ws.append(wj)
        return {
            "host_graph6": write_graph6(self.host),
            "token_labels": list(self.host.labels) if self.host.labels is not None else None,
            "surface": self.surface.value,
            "min_girth": self.min_girth,
            "parts": [[list(e) for e in sorted(p)] for p in self.parts.parts],
            "witnesses": ws,
            "claimed_value": self.claimed_value,
            "lower_bound": self.lower_bound,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionCertificate":
        g = parse_graph6(data["host_graph6"])
        if data.get("token_labels") is not None:
            g = Graph(g.order, g.edges, labels=data["token_labels"])
        witnesses = tuple(
            EmbeddingWitness.from_json({"order": g.order, **w}) for w in data["witnesses"]
        )
        return cls(
            g,
            Surface(data["surface"]),
            int(data["min_girth"]),
            EdgePartition.from_lists(data["parts"]),
            witnesses,
            int(data["claimed_value"]),
            int(data["lower_bound"]),
        )

    @classmethod
    def loads(cls, text: str) -> "DecompositionCertificate":
        return cls.from_json(json.loads(text))


def _cycle_part_rotation(member, host_tokens, part_graph: Graph):
    """Projective rotation of F_2 of one Hamiltonian cycle, moved onto the host labels."""
    seq = member.vertices
    n = len(seq)
    base = projective_embedding_f2_cycle(n)
    model = token_graph(cycle_graph(n), 2)
    perm = [host_tokens.index_of((seq[i], seq[j])) for i, j in model.labels]
    return base.relabel(perm, part_graph)


def decompose_token(g: Graph, f: Factorization, surface: Surface) -> DecompositionCertificate:
    """Certified decomposition of ``F_2(g)`` induced by a Hamiltonian factorization of ``g``."""
    surface = Surface(surface)
    expected = Surface.PLANE if f.kind is Kind.PATHS else Surface.PROJECTIVE
    if surface is not expected:
        raise ValueError(f"Hamiltonian {f.kind.value} certify the {expected.value}, not the {surface.value}")
    if f.host != g:
        raise ValueError("factorization host differs from the graph")
    report = verify_factorization(f)
    if not report:
        raise ValueError(str(report))

    tokens = token_graph(g, 2)
    host = tokens.graph
    parts = induced_partition(g, 2, EdgePartition.from_lists(f.edge_parts()))
    witnesses = []
    for i, (member, part) in enumerate(zip(f.members, parts.parts)):
        part_graph = host.spanning_subgraph(part)
        try:
            if f.kind is Kind.PATHS:
                res = planarity_test(part_graph)
                if not res.planar:
                    raise CertificationError(f"part {i} is not planar")
                w = res.witness()
            else:
                w = trace_faces(_cycle_part_rotation(member, tokens, part_graph))
        except WitnessError as exc:
            raise CertificationError(f"part {i}: {exc}") from exc
        check = verify_witness(w, surface, 4)
        if not check:
            raise CertificationError(f"part {i}: {check}")
        witnesses.append(w)

    lb = lower_bound_girth4(host, surface)
    if not lb == len(parts) == f.k:
        raise CertificationError(f"lower bound {lb} does not meet {len(parts)} parts")
    return DecompositionCertificate(host, surface, 4, parts, tuple(witnesses), len(parts), lb)


def theta4_line_complete(n: int) -> DecompositionCertificate:
    """L(K_n), n even, into n/2 planar girth-4 parts."""
    if n < 4 or n % 2:
        raise ValueError(f"only even n >= 4 is supported (odd n is open), got {n}")
    return decompose_token(complete_graph(n), walecki_paths(n), Surface.PLANE)


def thetaS_line_complete(n: int) -> DecompositionCertificate:
    """L(K_n) into floor(n/2) projective-planar girth-4 parts, any n >= 4.

    Odd n uses the Walecki cycles. Even n has no Hamiltonian cycle
    factorization, so the planar certificate is reused (genus 0 is fine on
    the projective plane) and only the lower bound is recomputed; the
    certificate is rejected if that bound is not tight.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if n % 2:
        return decompose_token(complete_graph(n), walecki_cycles(n), Surface.PROJECTIVE)
    planar = theta4_line_complete(n)
    for i, w in enumerate(planar.witnesses):
        check = verify_witness(w, Surface.PROJECTIVE, 4)
        if not check:
            raise CertificationError(f"part {i}: {check}")
    lb = lower_bound_girth4(planar.host, Surface.PROJECTIVE)
    if lb != n // 2:
        raise CertificationError(f"projective lower bound {lb} is not tight against {n // 2} parts")
    return DecompositionCertificate(
        planar.host, Surface.PROJECTIVE, 4, planar.parts, planar.witnesses, planar.claimed_value, lb
    )


def verify_certificate(c: DecompositionCertificate) -> Report:
    report = Report(f"certificate on the {c.surface.value}")
    host = c.host
    report.extend(validate_partition(host, c.parts), "partition: ")
    if c.claimed_value != len(c.parts):
        report.fail(f"claimed value {c.claimed_value} != {len(c.parts)} parts")
    if len(c.witnesses) != len(c.parts):
        report.fail(f"{len(c.witnesses)} witnesses for {len(c.parts)} parts")
    for i, (part, w) in enumerate(zip(c.parts.parts, c.witnesses)):
        if w.host.order != host.order or w.host.edge_set != part:
            report.fail(f"part {i}: witness is not on the part's spanning subgraph")
            continue
        report.extend(verify_witness(w, c.surface, c.min_girth), f"part {i}: ")
    if c.min_girth != 4:
        report.fail(f"min_girth {c.min_girth}: only girth 4 bounds are implemented")
    else:
        lb = lower_bound_girth4(host, c.surface)
        if lb != c.lower_bound:
            report.fail(f"stored lower bound {c.lower_bound}, recomputed {lb}")
        if lb > c.claimed_value:
            report.fail(f"lower bound {lb} exceeds claimed value {c.claimed_value}")
    return report
