from fractions import Fraction
from itertools import combinations

import pytest

from robustconn.embedding import euler_genus, is_edge_maximal_embedding, trace_faces
from robustconn.exact import ell
from robustconn.generators import (
    complete_graph,
    cube_graph,
    diamond_cycle,
    double_wheel,
    flip_edge,
    icosahedron,
    is_planar,
    k4_planar,
    k5_minus_e_projective,
    k7_torus,
    levi,
    random_4connected_triangulation,
    random_flip_triangulation,
    random_plane_graph,
    random_planar_triangulation,
    torus_diamond,
    triakis_tetrahedron,
    triangle_blowup,
)
from robustconn.graph import GraphError, is_connected, vertex_connectivity


@pytest.mark.parametrize("n, r, nv, m", [(5, 3, 15, 30), (4, 3, 8, 12), (6, 3, 26, 60), (6, 4, 21, 60)])
def test_levi_sizes(n, r, nv, m):
    inst = levi(n, r)
    assert (inst.graph.n, inst.graph.m) == (nv, m)
    assert inst.designated_R == frozenset(range(n))


def test_levi_connectivity():
    assert vertex_connectivity(levi(5, 3).graph) == 3
    assert vertex_connectivity(levi(6, 3).graph) == 3


@pytest.mark.parametrize("n, r", [(5, 3), (6, 3), (6, 4)])
def test_levi_removing_r_points_disconnects(n, r):
    inst = levi(n, r)
    for removed in combinations(sorted(inst.designated_R), r):
        assert not is_connected(inst.graph, removed)


@pytest.mark.parametrize("n, r", [(4, 3), (5, 3), (6, 3), (5, 4), (6, 4)])
def test_levi_ell_equals_r_minus_one_over_n(n, r):
    inst = levi(n, r)
    assert ell(inst.graph, inst.designated_R).optimum == Fraction(r - 1, n)


def test_levi_rejects_bad_parameters():
    with pytest.raises(GraphError):
        levi(3, 3)
    with pytest.raises(GraphError):
        levi(5, 2)


def test_diamond_cycle_structure():
    inst = diamond_cycle(3, 4)
    g = inst.graph
    assert g.n == 16 and g.is_regular(3)
    assert vertex_connectivity(g) == 2
    assert len(inst.designated_R) == 4


def test_diamond_cycle_k4_blocks():
    inst = diamond_cycle(4, 3)
    g = inst.graph
    assert g.n == 15 and g.is_regular(4)
    assert vertex_connectivity(g) == 2


@pytest.mark.parametrize("c", range(4, 8))
def test_diamond_cycle_ell(c):
    inst = diamond_cycle(3, c)
    assert ell(inst.graph, inst.designated_R).optimum == Fraction(1, c)


def test_triakis():
    inst = triakis_tetrahedron()
    assert (inst.graph.n, inst.graph.m) == (8, 18)
    assert ell(inst.graph, inst.designated_R).optimum == Fraction(1, 2)
    assert is_edge_maximal_embedding(inst.embedding)
    assert euler_genus(inst.embedding) == 0


def test_triangle_blowup_k4():
    inst = triangle_blowup(complete_graph(4))
    g = inst.graph
    assert g.n == 18 and len(inst.designated_R) == 6
    assert is_planar(g)
    assert vertex_connectivity(g) == 3
    assert ell(g, inst.designated_R).optimum * 6 <= 3


def test_triangle_blowup_cube():
    inst = triangle_blowup(cube_graph())
    assert inst.graph.n == 36 and len(inst.designated_R) == 12
    assert is_planar(inst.graph)


def test_triangle_blowup_needs_cubic_input():
    with pytest.raises(GraphError):
        triangle_blowup(complete_graph(5))


def test_k7_torus():
    inst = k7_torus()
    assert inst.graph == complete_graph(7)
    assert euler_genus(inst.embedding) == 2
    assert len(trace_faces(inst.embedding)) == 14


def test_k5_minus_e():
    inst = k5_minus_e_projective()
    assert (inst.graph.n, inst.graph.m) == (5, 9)
    assert euler_genus(inst.embedding) == 1


def test_torus_diamond_is_on_torus():
    inst = torus_diamond()
    assert euler_genus(inst.embedding) == 2


def test_icosahedron():
    inst = icosahedron()
    assert (inst.graph.n, inst.graph.m) == (12, 30)
    assert inst.graph.is_regular(5)
    assert vertex_connectivity(inst.graph) == 5


def test_random_planar_triangulation_small_cases():
    for seed in range(5):
        assert random_planar_triangulation(4, seed).graph == complete_graph(4)
    inst = random_planar_triangulation(10, 1)
    assert inst.graph.m == 24
    assert euler_genus(inst.embedding) == 0


@pytest.mark.parametrize("seed", range(10))
def test_triangulation_families(seed):
    for maker, n, conn in (
        (random_planar_triangulation, 9 + seed, 3),
        (random_flip_triangulation, 9 + seed, 3),
        (random_4connected_triangulation, 7 + seed, 4),
    ):
        inst = maker(n, seed)
        g = inst.graph
        assert g.m == 3 * n - 6
        assert euler_genus(inst.embedding) == 0
        assert is_edge_maximal_embedding(inst.embedding)
        assert vertex_connectivity(g) >= conn


def test_triangulations_are_deterministic():
    assert random_flip_triangulation(12, 3).embedding == random_flip_triangulation(12, 3).embedding
    assert random_planar_triangulation(12, 3).graph != random_planar_triangulation(12, 4).graph


def test_double_wheel():
    inst = double_wheel(5)
    assert inst.graph.n == 7 and vertex_connectivity(inst.graph) == 4


def test_flip_edge_keeps_triangulation():
    e = random_planar_triangulation(10, 0).embedding
    flipped = 0
    for u, v in e.base.edges():
        out = flip_edge(e, u, v)
        if out is None:
            continue
        flipped += 1
        assert out.base.m == e.base.m
        assert not out.base.has_edge(u, v)
        assert euler_genus(out) == 0
    assert flipped > 0


@pytest.mark.parametrize("seed", range(10))
def test_random_plane_graph(seed):
    inst = random_plane_graph(8, seed)
    assert is_connected(inst.graph)
    assert euler_genus(inst.embedding) == 0


def test_all_named_embeddings_are_consistent():
    for inst in (k4_planar(), triakis_tetrahedron(), k7_torus(), k5_minus_e_projective(), icosahedron(), torus_diamond()):
        assert inst.embedding.base == inst.graph
        trace_faces(inst.embedding)
        assert set(inst.legend) <= inst.graph.vertices
