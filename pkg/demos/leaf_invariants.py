"""Spanning-tree leaf invariants on small named graphs.

For a vertex set R, ell(G, R) is the largest fraction of R that a single
spanning tree can have as leaves; robust connectivity is the minimum of this
over all nonempty R.  Run with ``python3 demos/leaf_invariants.py``.
"""

from robustconn.exact import check_certificate, ell, kappa_rho, max_induced_forest, max_leaf_number
from robustconn.generators import complete_graph, cycle_graph, diamond_cycle, levi, triakis_tetrahedron
from robustconn.graph import vertex_connectivity

# %% A complete graph keeps all but one vertex as leaves (a star).
for n in range(4, 8):
    rep = kappa_rho(complete_graph(n))
    print(f"K{n}: kappa_rho = {rep.optimum}, worst R = {sorted(rep.witness)}")

# %% Cycles only have spanning paths, so two leaves at most.
print("C5 kappa_rho:", kappa_rho(cycle_graph(5)).optimum)

# %% The Levi graph of all 3-subsets of 5 points: removing any three points
# disconnects it, so at most two of the five points can be leaves.
inst = levi(5, 3)
rep = ell(inst.graph, inst.designated_R)
print(f"levi(5,3): connectivity {vertex_connectivity(inst.graph)}, ell = {rep.optimum}")
print("  certificate tree edges:", rep.certificate.tree.edges())
print("  certificate checks out:", check_certificate(inst.graph, rep.certificate, inst.designated_R))

# %% Diamond necklaces: 3-regular and 2-connected, yet ell falls like 1/c.
for c in range(4, 9):
    d = diamond_cycle(3, c)
    print(f"diamond_cycle(3,{c}): n = {d.graph.n}, ell = {ell(d.graph, d.designated_R).optimum}")

# %% The triakis tetrahedron: only half of the original K4 vertices can be leaves.
tri = triakis_tetrahedron()
print("triakis ell(R) =", ell(tri.graph, tri.designated_R).optimum)
print("triakis kappa_rho =", kappa_rho(tri.graph).optimum)
print("triakis max leaf number =", max_leaf_number(tri.graph))
print("triakis max induced forest =", max_induced_forest(tri.graph))
