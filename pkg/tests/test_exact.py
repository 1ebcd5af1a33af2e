import json
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from robustconn.acceptance import random_connected_graph
from robustconn.bounds import leaf_fraction_floor
from robustconn.exact import (
    build_certificate,
    check_certificate,
    ell,
    feasibility_table,
    kappa_rho,
    leaf_feasible,
    max_induced_forest,
    max_leaf_number,
)
from robustconn.generators import (
    complete_graph,
    cube_graph,
    cycle_graph,
    diamond_cycle,
    icosahedron,
    levi,
    path_graph,
    random_planar_triangulation,
    star_graph,
    triakis_tetrahedron,
)
from robustconn.graph import Graph, GraphError, SizeLimitError, is_connected, oracle_max_leaf_in_R, vertex_connectivity


def test_leaf_feasible_examples():
    tri = triakis_tetrahedron()
    assert leaf_feasible(tri.graph, {0, 1})
    assert not leaf_feasible(complete_graph(4), range(4))
    assert leaf_feasible(path_graph(3), {0, 2})
    assert not leaf_feasible(path_graph(3), {1})


def test_build_certificate_examples():
    cert = build_certificate(path_graph(3), {0, 2})
    assert cert.tree.edges() == [(0, 1), (1, 2)]
    assert cert.leaves_in_R == {0, 2}

    cert = build_certificate(complete_graph(4), {3})
    assert cert.tree.edges() == [(0, 1), (0, 2), (0, 3)]
    assert check_certificate(complete_graph(4), cert)

    inst = levi(5, 3)
    cert = build_certificate(inst.graph, {0, 1})
    assert check_certificate(inst.graph, cert, inst.designated_R)
    assert cert.leaves_in_R == {0, 1}


def test_build_certificate_rejects_infeasible():
    with pytest.raises(GraphError):
        build_certificate(complete_graph(4), range(4))


def test_check_certificate_catches_tampering():
    g = complete_graph(4)
    cert = build_certificate(g, {3})
    assert not check_certificate(g, cert, R={1})
    forged = type(cert)(cert.tree, frozenset({0, 3}))  # 0 is the hub, not a leaf
    assert not check_certificate(g, forged)


def test_ell_named_values():
    inst = levi(5, 3)
    assert ell(inst.graph, inst.designated_R).optimum == Fraction(2, 5)
    inst = triakis_tetrahedron()
    assert ell(inst.graph, inst.designated_R).optimum == Fraction(1, 2)
    inst = diamond_cycle(3, 5)
    assert ell(inst.graph, inst.designated_R).optimum == Fraction(1, 5)


def test_ell_report_fields():
    inst = triakis_tetrahedron()
    rep = ell(inst.graph, inst.designated_R)
    assert (rep.numerator, rep.denominator) == (1, 2)
    assert rep.witness == {0, 1}  # lexicographically least optimum
    assert check_certificate(inst.graph, rep.certificate, inst.designated_R)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["optimum"] == "1/2"
    assert data["certificate"]["leaves"] == [0, 1]
    assert len(data["certificate"]["edges"]) == 7


def test_ell_small_conventions():
    assert ell(Graph.from_edges(2, [(0, 1)]), {0}).optimum == 1
    assert ell(Graph.from_edges(2, [(0, 1)]), {0, 1}).optimum == 1
    assert ell(Graph.from_edges(1, []), {0}).optimum == 0


def test_ell_input_errors():
    with pytest.raises(GraphError):
        ell(complete_graph(4), [])
    with pytest.raises(GraphError):
        ell(complete_graph(4), [7])
    with pytest.raises(GraphError):
        ell(Graph.from_edges(4, [(0, 1), (2, 3)]), [0])


def test_ell_size_limit_and_force():
    g = complete_graph(32)
    with pytest.raises(SizeLimitError):
        ell(g, range(32))
    with pytest.warns(UserWarning):
        rep = ell(g, range(32), force=True)
    assert rep.optimum == Fraction(31, 32)


def test_ell_timeout_reports_lower_bound():
    inst = levi(6, 3)
    rep = ell(inst.graph, range(inst.graph.n), timeout_ms=0)
    assert rep.lower_bound_only
    assert rep.to_json()["lower_bound_only"] is True
    assert check_certificate(inst.graph, rep.certificate)


@pytest.mark.parametrize("n", range(4, 8))
def test_kappa_rho_complete(n):
    rep = kappa_rho(complete_graph(n))
    assert rep.optimum == Fraction(n - 1, n)
    assert rep.witness == frozenset(range(n))


def test_kappa_rho_cycle_and_triakis():
    assert kappa_rho(cycle_graph(5)).optimum == Fraction(2, 5)
    rep = kappa_rho(triakis_tetrahedron().graph)
    assert rep.optimum == Fraction(1, 2)
    assert check_certificate(triakis_tetrahedron().graph, rep.certificate, rep.witness)


def test_kappa_rho_size_limit():
    with pytest.raises(SizeLimitError):
        kappa_rho(cycle_graph(15))


def test_max_leaf_number_examples():
    assert max_leaf_number(complete_graph(4)) == 3
    assert max_leaf_number(cycle_graph(6)) == 2
    assert max_leaf_number(cube_graph()) >= 4
    assert max_leaf_number(star_graph(5)) == 5


def test_max_induced_forest_examples():
    assert max_induced_forest(path_graph(6))[0] == 6
    assert max_induced_forest(complete_graph(4)) == (2, frozenset({0, 1}))
    size, witness = max_induced_forest(icosahedron().graph)
    assert size == 6 and len(witness) == 6


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**9))
def test_ell_matches_spanning_tree_oracle(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng.randint(3, 7), rng)
    for _ in range(5):
        R = [v for v in range(g.n) if rng.random() < 0.5] or [0]
        assert ell(g, R).optimum * len(R) == oracle_max_leaf_in_R(g, R)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_feasible_sets_are_closed_under_subsets(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng.randint(3, 12), rng)
    for _ in range(10):
        rp = [v for v in range(g.n) if rng.random() < 0.4]
        if not leaf_feasible(g, rp):
            continue
        for k in range(len(rp) + 1):
            for sub in combinations(rp, k):
                assert leaf_feasible(g, sub)


def test_feasibility_table_matches_predicate():
    g = levi(4, 3).graph
    table = feasibility_table(g)
    for s in range(1 << g.n):
        members = [v for v in range(g.n) if s >> v & 1]
        assert bool(table[s]) == leaf_feasible(g, members)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_reports_carry_valid_certificates(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng.randint(3, 9), rng)
    R = [v for v in range(g.n) if rng.random() < 0.6] or [g.n - 1]
    rep = ell(g, R)
    assert check_certificate(g, rep.certificate, R)
    assert rep.certificate.leaves_in_R == rep.witness
    rep = kappa_rho(g)
    assert check_certificate(g, rep.certificate, rep.witness)
    assert rep.optimum <= ell(g, R).optimum


def _graph_with_connectivity(r, rng):
    while True:
        g = random_connected_graph(rng.randint(r + 1, 12), rng)
        if vertex_connectivity(g) == r:
            return g


@pytest.mark.parametrize("r", [2, 3, 4])
def test_r_connected_graphs_keep_r_minus_one_leaves(r):
    rng = random.Random(100 + r)
    for _ in range(15):
        g = _graph_with_connectivity(r, rng)
        for _ in range(5):
            R = [v for v in range(g.n) if rng.random() < 0.5] or [0]
            assert ell(g, R).optimum >= leaf_fraction_floor(r, len(R))


def test_planar_triangulations_forest_and_kappa_consistent():
    for seed in range(10):
        g = random_planar_triangulation(4 + seed % 7, seed).graph
        assert is_connected(g)
        assert kappa_rho(g).optimum >= Fraction(1, 2)
        assert 2 * max_induced_forest(g)[0] >= g.n
