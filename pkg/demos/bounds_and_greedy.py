"""Exact eps_r(d) values, the piecewise-linear bound curve and the greedy certificate pipeline.

Run with ``python3 demos/bounds_and_greedy.py``.
"""

from fractions import Fraction

from robustconn.bounds import bound_curve, curve_check, epsilon, epsilon_floor
from robustconn.exact import check_certificate, ell
from robustconn.generators import icosahedron, levi, random_planar_triangulation
from robustconn.graph import spanning_tree_any, tree_bipartition
from robustconn.greedy import greedy_reduce, theorem6_pipeline

# %% Exact surviving fractions and their halves.
for r, d in [(3, 6), (4, 4), (5, Fraction(10, 3)), (6, 3)]:
    e = epsilon(r, d)
    print(f"eps_{r}({d}) = {e}, half = {e / 2}")

# %% The closed-form floor sits below the exact value.
for d in (3, 10, 100, 1000):
    print(f"d={d}: eps_3 = {float(epsilon(3, d)):.5f} >= floor {epsilon_floor(3, d):.5f}")

# %% The bound curve for r=3, d=6, R0=128.
c = bound_curve(3, 6, 128)
print("breakpoints:", [str(x) for x in c.breakpoints])
print("slopes:", c.slopes, "curve_check:", curve_check(c), "t1 =", c.t1())

# %% Greedy reduction on the Levi graph, step by step.
inst = levi(5, 3)
rest, trace = greedy_reduce(inst.graph, inst.designated_R)
print(trace.to_json_lines(), "remaining red:", sorted(rest))

# %% Certified lower bounds on planar triangulations.
for seed in range(3):
    g = random_planar_triangulation(30, seed).graph
    u, w = tree_bipartition(spanning_tree_any(g))
    R = sorted(max(u, w, key=len))
    res = theorem6_pipeline(g, R, 0)
    print(f"seed {seed}: |R| = {len(R)}, certified ratio {res.ratio} via {res.strategy}, "
          f"valid = {check_certificate(g, res.certificate, R)}")

ico = icosahedron().graph
res = theorem6_pipeline(ico, range(12), 0)
print("icosahedron: certified", res.ratio, "exact", ell(ico, range(12)).optimum)
