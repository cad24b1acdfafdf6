import json
from fractions import Fraction
from math import ceil, comb

import pytest

from tokenthick.embeddings import EmbeddingWitness, Surface
from tokenthick.factorizations import bipartite_cycles, bipartite_paths, walecki_cycles, walecki_paths
from tokenthick.graph import EdgePartition, Graph, complete_bipartite, complete_graph
from tokenthick.thickness import (
    CertificationError,
    DecompositionCertificate,
    decompose_token,
    lower_bound_girth4,
    theorem_bound_arithmetic,
    theta4_line_complete,
    thetaS_line_complete,
    verify_certificate,
)
from tokenthick.tokens import line_graph_complete


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def rational_bound(n, k, surface):
    """The ceiling expressions written out with exact rationals."""
    if surface is Surface.PLANE:
        return ceil_frac(k - Fraction(2 * n * k - 6 * k, n * n - n - 4))
    return ceil_frac(k - Fraction(n * k - 2 * k, n * n - n - 2))


def test_lower_bound_examples():
    assert lower_bound_girth4(line_graph_complete(6), Surface.PLANE) == 3
    assert lower_bound_girth4(line_graph_complete(5), Surface.PROJECTIVE) == 2
    assert lower_bound_girth4(complete_graph(2), Surface.PLANE) == 1
    assert lower_bound_girth4(Graph(4), Surface.PLANE) == 0


def test_ceiling_bound_examples():
    assert theorem_bound_arithmetic(6, 3, Surface.PLANE) == 3
    assert theorem_bound_arithmetic(5, 2, Surface.PROJECTIVE) == 2
    assert rational_bound(50, 25, Surface.PLANE) == 25
    assert theorem_bound_arithmetic(50, 25, Surface.PLANE) == 25


def test_ceiling_bound_ranges():
    for n in range(4, 51):
        for k in range(1, (n - 1) // 2 + 1):
            assert theorem_bound_arithmetic(n, k, Surface.PROJECTIVE) == k == rational_bound(n, k, Surface.PROJECTIVE)
        if n % 2 == 0:
            for k in range(1, n // 2 + 1):
                assert theorem_bound_arithmetic(n, k, Surface.PLANE) == k == rational_bound(n, k, Surface.PLANE)


def test_ceiling_bound_is_the_edge_count_ceiling():
    # F_2(G) has C(n,2) vertices and (n-2)|E(G)| edges
    for n in range(4, 30):
        for k in range(1, n // 2 + 1):
            v = comb(n, 2)
            plane = ceil(Fraction((n - 2) * (n - 1) * k, 2 * (v - 2)))
            proj = ceil(Fraction((n - 2) * n * k, 2 * v - 2))
            assert theorem_bound_arithmetic(n, k, Surface.PLANE) == plane
            assert theorem_bound_arithmetic(n, k, Surface.PROJECTIVE) == proj


def test_ceiling_bound_domain():
    with pytest.raises(ValueError):
        theorem_bound_arithmetic(3, 1, Surface.PLANE)


def test_decompose_k6_paths():
    c = decompose_token(complete_graph(6), walecki_paths(6), Surface.PLANE)
    assert c.claimed_value == 3 == c.lower_bound
    assert c.parts.sizes() == [20, 20, 20]
    assert verify_certificate(c)


def test_decompose_k5_cycles():
    c = decompose_token(complete_graph(5), walecki_cycles(5), Surface.PROJECTIVE)
    assert c.claimed_value == 2 == c.lower_bound
    assert c.parts.sizes() == [15, 15]
    assert all(w.euler_genus == 1 for w in c.witnesses)


def test_decompose_k44_and_k34():
    c = decompose_token(complete_bipartite(4, 4), bipartite_cycles(4), Surface.PROJECTIVE)
    assert c.claimed_value == 2 == c.lower_bound and verify_certificate(c)
    c = decompose_token(complete_bipartite(3, 4), bipartite_paths(4), Surface.PLANE)
    assert c.claimed_value == 2 == c.lower_bound and verify_certificate(c)


def test_kind_surface_mismatch():
    with pytest.raises(ValueError):
        decompose_token(complete_graph(6), walecki_paths(6), Surface.PROJECTIVE)
    with pytest.raises(ValueError):
        decompose_token(complete_graph(5), walecki_cycles(5), Surface.PLANE)
    with pytest.raises(ValueError):
        decompose_token(complete_graph(5), walecki_paths(6), Surface.PLANE)


def test_failing_part_is_named(monkeypatch):
    import tokenthick.thickness as th
    from tokenthick.embeddings import PlanarityResult

    monkeypatch.setattr(th, "planarity_test", lambda g: PlanarityResult(False))
    with pytest.raises(CertificationError, match="part 0"):
        decompose_token(complete_graph(4), walecki_paths(4), Surface.PLANE)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_theta4(n):
    c = theta4_line_complete(n)
    assert c.claimed_value == n // 2 == c.lower_bound
    assert c.host == line_graph_complete(n)


def test_theta4_odd_unsupported():
    with pytest.raises(ValueError):
        theta4_line_complete(7)


@pytest.mark.parametrize("n,value", [(5, 2), (7, 3), (6, 3), (4, 2)])
def test_thetaS(n, value):
    c = thetaS_line_complete(n)
    assert c.claimed_value == value == c.lower_bound
    assert c.surface is Surface.PROJECTIVE
    assert verify_certificate(c)


def test_thetaS_even_bound_n6():
    assert lower_bound_girth4(line_graph_complete(6), Surface.PROJECTIVE) == ceil(Fraction(60, 28)) == 3


def test_even_projective_bound_tight_arithmetic():
    for n in range(4, 81, 2):
        v, e = comb(n, 2), (n - 2) * comb(n, 2)
        assert -(-e // (2 * v - 2)) == n // 2


@pytest.fixture(scope="module")
def cert6():
    return theta4_line_complete(6)


def test_verify_pass(cert6):
    assert verify_certificate(cert6)


def test_mutation_edge_moved(cert6):
    parts = [set(p) for p in cert6.parts.parts]
    e = min(parts[0])
    parts[0].discard(e)
    parts[1].add(e)
    bad = DecompositionCertificate(cert6.host, cert6.surface, 4, EdgePartition(tuple(map(frozenset, parts))),
                                   cert6.witnesses, cert6.claimed_value, cert6.lower_bound)
    assert not verify_certificate(bad)


def test_mutation_value_decremented(cert6):
    bad = DecompositionCertificate(cert6.host, cert6.surface, 4, cert6.parts, cert6.witnesses,
                                   cert6.claimed_value - 1, cert6.lower_bound)
    r = verify_certificate(bad)
    assert not r and any("claimed value" in p for p in r.problems)


def test_mutation_edge_moved_in_json(cert6):
    data = cert6.to_json()
    data["parts"][1].append(data["parts"][0].pop())
    assert not verify_certificate(DecompositionCertificate.from_json(data))


def test_mutation_sign_flipped_in_json():
    c = thetaS_line_complete(5)
    data = c.to_json()
    data["witnesses"][0]["signs"][0] *= -1
    assert not verify_certificate(DecompositionCertificate.from_json(data))


def test_mutation_lower_bound(cert6):
    data = cert6.to_json()
    data["lower_bound"] = 2
    assert not verify_certificate(DecompositionCertificate.from_json(data))


def test_json_round_trip_and_determinism():
    c = thetaS_line_complete(7)
    text = c.dumps()
    again = DecompositionCertificate.loads(text)
    assert again.dumps() == text
    assert verify_certificate(again)
    assert thetaS_line_complete(7).dumps() == text
    keys = set(json.loads(text))
    assert keys == {"host_graph6", "token_labels", "surface", "min_girth", "parts", "witnesses",
                    "claimed_value", "lower_bound"}
    assert json.loads(text)["token_labels"][:3] == ["{0,1}", "{0,2}", "{1,2}"]


def test_witness_from_certificate_json():
    c = theta4_line_complete(4)
    w = c.to_json()["witnesses"][0]
    w = EmbeddingWitness.from_json({"order": c.host.order, **w})
    assert w.euler_genus == 0
