"""Desk-scale reproduction checks, one function per criterion.

Each check returns a :class:`CheckResult`; :func:`run` executes a selection
and prints one line per check.  Tolerances are fixed here.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .bounds import bound_curve, component_bound, curve_check, epsilon, epsilon_floor, leaf_fraction_floor
from .embedding import cut_components, euler_genus, is_edge_maximal_embedding, m_value, trace_faces, _cut_count
from .exact import _is_forest, check_certificate, ell, kappa_rho, max_induced_forest
from .generators import (
    complete_graph,
    cube_graph,
    cycle_graph,
    diamond_cycle,
    k4_planar,
    k5_minus_e_projective,
    k7_torus,
    levi,
    path_graph,
    random_flip_triangulation,
    icosahedron,
    random_4connected_triangulation,
    random_plane_graph,
    random_planar_triangulation,
    star_graph,
    triakis_tetrahedron,
    triangle_blowup,
)
from .graph import (
    Graph,
    component_masks,
    components_after_removal,
    is_connected,
    is_connected_mask,
    mask_of,
    oracle_leaf_sets,
    oracle_max_leaf_in_R,
    spanning_tree_any,
    tree_bipartition,
    vertex_connectivity,
)
from .greedy import theorem5_bound_holds, theorem6_pipeline


@dataclass
class CheckResult:
    key: str
    passed: bool
    measured: str
    seconds: float = 0.0
    budget: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.key:<18} {self.measured}  ({self.seconds:.2f}s / {self.budget:g}s)"


def eps_table() -> tuple[bool, str]:
    cases = [(3, 6, "21/256"), (4, 4, "5/27"), (5, Fraction(10, 3), "49/192"), (6, 3, "3/10")]
    got = [epsilon(r, d) / 2 for r, d, _ in cases]
    ok = all(g == Fraction(want) for g, (_, _, want) in zip(got, cases))
    return ok, "half-eps = " + ", ".join(str(g) for g in got)


def eps_floor_sweep() -> tuple[bool, str]:
    worst = None
    for r in range(3, 9):
        for d in range(3, 1001):
            margin = float(epsilon(r, d)) - epsilon_floor(r, d)
            if worst is None or margin < worst[0]:
                worst = (margin, r, d)
    return worst[0] >= 1e-12, f"min margin {worst[0]:.3e} at r={worst[1]}, d={worst[2]}"


def curve_suite() -> tuple[bool, str]:
    count = 0
    for r in range(3, 7):
        for d in range(2, 51):
            for R0 in (10, 100, 1000):
                curve = bound_curve(r, d, R0)
                if not curve_check(curve, 10):
                    return False, f"curve_check failed at r={r}, d={d}, R0={R0}"
                if not R0 - curve.t1() > epsilon(r, d) * R0:
                    return False, f"t1 bound failed at r={r}, d={d}, R0={R0}"
                count += 1
    return True, f"{count} curves checked"


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    while True:
        p = rng.uniform(0.3, 0.9)
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        if is_connected(g):
            return g


def named_small_graphs() -> list[Graph]:
    return [
        complete_graph(3), complete_graph(4), complete_graph(5), complete_graph(6), complete_graph(7),
        cycle_graph(4), cycle_graph(5), cycle_graph(7), path_graph(3), path_graph(6), star_graph(4),
        cube_graph(), triakis_tetrahedron().graph, levi(4, 3).graph, k5_minus_e_projective().graph,
        k7_torus().graph, k4_planar().graph,
    ]


def oracle_equivalence(n_graphs: int = 500, r_samples: int = 50, seed: int = 2024) -> tuple[bool, str]:
    rng = random.Random(seed)
    graphs = [random_connected_graph(rng.randint(3, 7), rng) for _ in range(n_graphs)]
    graphs += named_small_graphs()
    checks = 0
    for g in graphs:
        leaf_sets = oracle_leaf_sets(g)
        for _ in range(r_samples):
            R = [v for v in range(g.n) if rng.random() < 0.5] or [rng.randrange(g.n)]
            exact = ell(g, R).optimum * len(R)
            if exact != oracle_max_leaf_in_R(g, R, leaf_sets):
                return False, f"mismatch on n={g.n}, edges={g.edges()}, R={R}"
            checks += 1
    return True, f"{len(graphs)} graphs, {checks} (G, R) pairs agree"


def levi_certification() -> tuple[bool, str]:
    inst = levi(5, 3)
    g, R = inst.graph, inst.designated_R
    value = ell(g, R).optimum
    cuts = all(not is_connected(g, trio) for trio in combinations(sorted(R), 3))
    return value == Fraction(2, 5) and cuts, f"ell = {value}; every 3 designated vertices disconnect: {cuts}"


def triakis_check() -> tuple[bool, str]:
    inst = triakis_tetrahedron()
    value = ell(inst.graph, inst.designated_R).optimum
    kappa = kappa_rho(inst.graph).optimum
    emb = inst.embedding
    maximal = is_edge_maximal_embedding(emb)
    gamma = euler_genus(emb)
    ok = value == Fraction(1, 2) and kappa <= Fraction(1, 2) and maximal and gamma == 0
    return ok, f"ell = {value}, kappa_rho = {kappa}, edge-maximal = {maximal}, genus = {gamma}"


def diamond_decay() -> tuple[bool, str]:
    values = []
    for c in range(4, 11):
        inst = diamond_cycle(3, c)
        values.append(ell(inst.graph, inst.designated_R).optimum)
    ok = all(v == Fraction(1, c) for v, c in zip(values, range(4, 11)))
    return ok, "ell = " + ", ".join(map(str, values))


def k7_check() -> tuple[bool, str]:
    emb = k7_torus().embedding
    gamma = euler_genus(emb)
    m, witness = m_value(emb)
    ratio = Fraction(m, emb.n)
    return gamma == 2 and m == 3, f"genus = {gamma}, m = {m} (witness {sorted(witness)}), ratio = {ratio}"


def projective_check() -> tuple[bool, str]:
    emb = k5_minus_e_projective().embedding
    gamma = euler_genus(emb)
    maximal = is_edge_maximal_embedding(emb)
    return gamma == 1 and maximal, f"genus = {gamma}, edge-maximal = {maximal}, orientable = {emb.is_orientable()}"


def plane_equivalence(count: int = 200, seed: int = 7) -> tuple[bool, str]:
    rng = random.Random(seed)
    subsets = 0
    for i in range(count):
        inst = random_plane_graph(rng.randint(4, 8), seed * 1000 + i)
        emb, g = inst.embedding, inst.graph
        faces = trace_faces(emb)
        if euler_genus(emb, faces) != 0:
            return False, f"instance {i} is not plane"
        for s in range(1 << g.n):
            connected = _cut_count(len(faces), faces.edge_faces, s) == 1
            if connected != _is_forest(g, s):
                return False, f"mismatch on {g.edges()} with Rp mask {s:b}"
            subsets += 1
    return True, f"{count} plane embeddings, {subsets} subsets agree"


def nonseparating_complements(count: int = 100, seed: int = 11) -> tuple[bool, str]:
    rng = random.Random(seed)
    tested = 0
    for i in range(count):
        n = rng.randint(4, 10)
        maker = random_planar_triangulation if i % 2 else random_flip_triangulation
        inst = maker(n, seed * 1000 + i)
        emb, g = inst.embedding, inst.graph
        faces = trace_faces(emb)
        for s in range(1, g.full_mask):
            if _cut_count(len(faces), faces.edge_faces, s) == 1:
                tested += 1
                if not is_connected_mask(g, s):
                    return False, f"G - Rp disconnected for {g.edges()} with Rp mask {s:b}"
    return True, f"{count} triangulations, {tested} non-separating proper subsets"


def _triangulations(count: int, seed: int, lo: int, hi: int):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(lo, hi)
        maker = random_planar_triangulation if i % 2 else random_flip_triangulation
        yield maker(n, seed * 1000 + i), rng


def greedy_guarantee(count: int = 200, seed: int = 5) -> tuple[bool, str]:
    worst = None
    for inst, _ in _triangulations(count, seed, 10, 60):
        g = inst.graph
        u_class, w_class = tree_bipartition(spanning_tree_any(g))
        R = max(u_class, w_class, key=len)
        blue = len(component_masks(g, mask_of(R)))
        d = Fraction(3 * blue, len(R))
        if not theorem5_bound_holds(g, R, 3, d):
            return False, f"greedy bound failed on {inst.name}"
        if worst is None or d > worst:
            worst = d
    return True, f"{count} instances hold (largest measured d = {worst})"


def pipeline_ratio(count: int = 100, per: int = 5, seed: int = 6) -> tuple[bool, str]:
    bound = Fraction(21, 256)
    lowest = Fraction(1)
    for inst, rng in _triangulations(count, seed, 10, 60):
        g = inst.graph
        for _ in range(per):
            R = [v for v in range(g.n) if rng.random() < rng.uniform(0.2, 1.0)] or [0]
            result = theorem6_pipeline(g, R, 0)
            if not check_certificate(g, result.certificate, R):
                return False, f"invalid certificate on {inst.name}"
            if result.ratio < bound:
                return False, f"ratio {result.ratio} < 21/256 on {inst.name}"
            lowest = min(lowest, result.ratio)
    return True, f"{count * per} runs, lowest ratio {lowest} ({float(lowest):.4f}) >= 21/256"


def blowup_check() -> tuple[bool, str]:
    inst = triangle_blowup(complete_graph(4))
    R = inst.designated_R
    leaves = ell(inst.graph, R).optimum * len(R)
    bound = Fraction(len(R), 3) + 1
    return leaves <= bound, f"|R| = {len(R)}, max leaves in R = {leaves} <= {bound}"


def triangulation_consistency(seeds: int = 60) -> tuple[bool, str]:
    findings = []
    low_kappa, low_forest = Fraction(1), Fraction(1)
    for s in range(seeds):
        n = 4 + s % 7
        g = random_planar_triangulation(n, s).graph
        kappa = kappa_rho(g).optimum
        forest, _ = max_induced_forest(g)
        low_kappa = min(low_kappa, kappa)
        low_forest = min(low_forest, Fraction(forest, n))
        if kappa < Fraction(1, 2) or Fraction(forest, n) < Fraction(1, 2):
            findings.append((n, s, str(kappa), forest))
    msg = f"{seeds} triangulations; min kappa_rho = {low_kappa}, min forest/n = {low_forest}"
    if findings:
        msg += f"; FINDINGS {findings}"
    return not findings, msg


def _r_connected_instances(count: int, seed: int):
    """Embedded instances with known genus and measured connectivity >= 3; about half are 4-connected."""
    rng = random.Random(seed)
    fixed = [k7_torus(), triakis_tetrahedron(), k4_planar(), icosahedron(), k5_minus_e_projective()]
    out = []
    for inst in fixed:
        out.append((inst, euler_genus(inst.embedding), vertex_connectivity(inst.graph)))
    i = 0
    while len(out) < count:
        if i % 2:
            inst = random_4connected_triangulation(rng.randint(6, 12), seed * 1000 + i)
        else:
            maker = random_planar_triangulation if i % 4 == 0 else random_flip_triangulation
            inst = maker(rng.randint(5, 12), seed * 1000 + i)
        kappa = vertex_connectivity(inst.graph)
        if kappa >= 3:
            out.append((inst, 0, kappa))
        i += 1
    return out


def component_and_leaf_bounds(count: int = 200, seed: int = 16) -> tuple[bool, str]:
    """Each instance is tested at r = 4 when 4-connected, otherwise at r = 3."""
    rng = random.Random(seed)
    by_r = {3: 0, 4: 0}
    checks = 0
    for inst, gamma, kappa in _r_connected_instances(count, seed):
        g = inst.graph
        r = min(kappa, 4)
        by_r[r] += 1
        for _ in range(10):
            X = [v for v in range(g.n) if rng.random() < 0.5]
            comps = len(components_after_removal(g, X))
            if len(X) >= r and comps > component_bound(r, gamma, len(X)):
                return False, f"component bound violated on {inst.name} with X={X}"
            R = X or [rng.randrange(g.n)]
            if ell(g, R).optimum < leaf_fraction_floor(r, len(R)):
                return False, f"leaf bound violated on {inst.name} with R={R}"
            checks += 1
    ok = by_r[3] + by_r[4] >= count and by_r[3] > 0 and by_r[4] > 0
    return ok, f"r=3: {by_r[3]} instances, r=4: {by_r[4]} instances, {checks} (X, R) samples"


CRITERIA: dict[str, tuple[str, Callable[[], tuple[bool, str]], float]] = {
    "eps-table": ("1", eps_table, 1),
    "eps-floor": ("2", eps_floor_sweep, 5),
    "curves": ("3", curve_suite, 30),
    "oracle": ("4", oracle_equivalence, 300),
    "levi": ("5", levi_certification, 10),
    "triakis": ("6", triakis_check, 30),
    "diamond": ("7", diamond_decay, 60),
    "k7": ("8", k7_check, 10),
    "projective": ("9", projective_check, 1),
    "plane-equiv": ("10", plane_equivalence, 120),
    "nonseparating": ("11", nonseparating_complements, 120),
    "greedy-bound": ("12", greedy_guarantee, 120),
    "pipeline": ("13", pipeline_ratio, 300),
    "blowup": ("14", blowup_check, 60),
    "forest-consistency": ("15", triangulation_consistency, 600),
    "component-bounds": ("16", component_and_leaf_bounds, 300),
}


def run_one(key: str) -> CheckResult:
    _, fn, budget = CRITERIA[key]
    start = time.perf_counter()
    try:
        passed, measured = fn()
    except Exception as exc:  # reported, not raised
        passed, measured = False, f"error: {exc!r}"
    elapsed = time.perf_counter() - start
    return CheckResult(key, passed and elapsed <= budget, measured, elapsed, budget)


def run(only: list[str] | None = None, threads: int = 1, echo=print) -> list[CheckResult]:
    keys = list(CRITERIA) if not only else only
    unknown = [k for k in keys if k not in CRITERIA]
    if unknown:
        raise KeyError(f"unknown criteria: {unknown}")
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(threads) as pool:
            results = list(pool.map(run_one, keys))
        for res in results:
            echo(res.line())
        return results
    results = []
    for key in keys:
        res = run_one(key)
        echo(res.line())
        results.append(res)
    return results
