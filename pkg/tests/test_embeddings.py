import pytest

from tokenthick.embeddings import (
    EmbeddingWitness,
    RotationSystem,
    Surface,
    WitnessError,
    max_edges_girth4,
    planarity_test,
    projective_embedding_f2_cycle,
    trace_faces,
    verify_witness,
)
from tokenthick.graph import Graph, complete_graph, cycle_graph, girth, path_graph
from tokenthick.oracle import rotation_search
from tokenthick.tokens import token_graph

OCTAHEDRON = token_graph(complete_graph(4), 2).graph


def test_k4_planar_rotation():
    # tetrahedron drawn with 3 in the middle of triangle 0-1-2
    rot = RotationSystem.build(complete_graph(4), [(1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)])
    w = trace_faces(rot)
    assert w.euler_genus == 0
    assert sorted(map(len, w.faces)) == [3, 3, 3, 3]


def test_c4_any_rotation():
    w = trace_faces(RotationSystem.build(cycle_graph(4), [(1, 3), (2, 0), (3, 1), (0, 2)]))
    assert w.euler_genus == 0 and sorted(map(len, w.faces)) == [4, 4]


def test_k5_projective_by_search():
    rot = rotation_search(complete_graph(5), 1, signed=True)
    assert rot is not None
    w = trace_faces(rot)
    assert w.euler_genus == 1
    assert len(w.faces) == 2 - 1 - 5 + 10
    assert rotation_search(complete_graph(5), 0) is None


def test_k4_planarity_and_k5():
    res = planarity_test(complete_graph(4))
    assert res.planar and res.witness().euler_genus == 0
    assert not planarity_test(complete_graph(5)).planar


def test_f2_p6_planar():
    res = planarity_test(token_graph(path_graph(6), 2).graph)
    assert res.planar
    w = res.witness()
    assert (w.host.order, w.host.size) == (15, 20)
    assert verify_witness(w, Surface.PLANE, 4)


def test_octahedron_fails_girth():
    w = planarity_test(OCTAHEDRON).witness()
    r = verify_witness(w, Surface.PLANE, 4)
    assert not r and any("girth 3" in p for p in r.problems)


@pytest.mark.parametrize("n", range(4, 13))
def test_f2_cycle_projective(n):
    rot = projective_embedding_f2_cycle(n)
    assert rot.host.size == (n - 2) * n
    w = trace_faces(rot)
    assert verify_witness(w, Surface.PROJECTIVE, 4)
    assert w.euler_genus <= 1 and w.face_girth >= 4
    assert len(w.faces) == rot.host.size - rot.host.order + 2 - w.euler_genus


def test_f2_c6_counts():
    w = trace_faces(projective_embedding_f2_cycle(6))
    assert (w.host.order, w.host.size) == (15, 24)
    assert w.euler_genus == 1
    assert len(w.faces) == 24 - 15 + (2 - 1)


def test_f2_c4_is_also_planar():
    rot = projective_embedding_f2_cycle(4)
    assert (rot.host.order, rot.host.size) == (6, 8)
    assert trace_faces(rot).euler_genus <= 1
    assert planarity_test(rot.host).planar


def test_f2_cycle_too_small():
    with pytest.raises(ValueError):
        projective_embedding_f2_cycle(3)


def test_malformed_rotation():
    g = cycle_graph(4)
    with pytest.raises(WitnessError):
        trace_faces(RotationSystem.build(g, [(1,), (2, 0), (3, 1), (0, 2)]))
    with pytest.raises(WitnessError):
        trace_faces(RotationSystem.build(g, [(1, 1), (2, 0), (3, 1), (0, 2)]))


def test_sign_flip_changes_trace():
    w = trace_faces(projective_embedding_f2_cycle(6))
    e = w.host.edges[0]
    tampered = EmbeddingWitness(w.rotation.with_sign_flipped(*e), w.faces, w.euler_genus, w.face_girth)
    assert not verify_witness(tampered, Surface.PROJECTIVE, 4)


def test_genus_zero_passes_projective():
    for g in (token_graph(path_graph(7), 2).graph, cycle_graph(6), complete_graph(4)):
        w = planarity_test(g).witness()
        assert verify_witness(w, Surface.PLANE, 3).ok
        assert verify_witness(w, Surface.PROJECTIVE, 3)


def test_projective_witness_fails_plane():
    w = trace_faces(projective_embedding_f2_cycle(7))
    r = verify_witness(w, Surface.PLANE, 4)
    assert not r and any("exceeds 0" in p for p in r.problems)


def test_claimed_genus_must_match():
    w = trace_faces(projective_embedding_f2_cycle(5))
    liar = EmbeddingWitness(w.rotation, w.faces, 0, w.face_girth)
    assert not verify_witness(liar, Surface.PROJECTIVE, 4)


def test_disconnected_and_isolated():
    g = Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    w = planarity_test(g).witness()
    assert w.euler_genus == 0 and len(w.faces) == 4
    tree = path_graph(5)
    w = planarity_test(tree).witness()
    assert w.euler_genus == 0 and [len(f) for f in w.faces] == [8]


def test_witness_json_round_trip():
    w = trace_faces(projective_embedding_f2_cycle(8))
    again = EmbeddingWitness.from_json(w.to_json())
    assert again.rotation == w.rotation
    assert verify_witness(again, Surface.PROJECTIVE, 4)
    assert again.to_json() == w.to_json()


def test_relabel_is_consistent():
    rot = projective_embedding_f2_cycle(6)
    perm = list(range(rot.host.order))[::-1]
    new_host = Graph(rot.host.order, [(perm[u], perm[v]) for u, v in rot.host.edges])
    moved = trace_faces(rot.relabel(perm, new_host))
    assert moved.euler_genus == 1
    assert girth(new_host) == 4


def test_max_edges():
    assert max_edges_girth4(15, Surface.PLANE) == 26
    assert max_edges_girth4(3, Surface.PLANE) == 2
    assert max_edges_girth4(10, Surface.PROJECTIVE) == 18
    assert max_edges_girth4(4, Surface.PLANE) == 4
    with pytest.raises(ValueError):
        max_edges_girth4(0, Surface.PLANE)
