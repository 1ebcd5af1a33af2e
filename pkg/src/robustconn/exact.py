"""Exact leaf-set solvers.

Everything here rests on one characterization: for a connected graph on at
least three vertices, a set ``S`` can be made simultaneously a set of leaves of
one spanning tree iff ``G - S`` is connected and nonempty and every vertex of
``S`` has a neighbour outside ``S``.  Feasible sets are closed under taking
subsets, which both searches below exploit.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from .graph import (
    Graph,
    GraphError,
    SizeLimitError,
    Tree,
    bits,
    is_connected,
    is_connected_mask,
    mask_of,
    set_of,
)

ELL_MAX_R = 30
KAPPA_MAX_N = 14
MAXLEAF_MAX_N = 30
FOREST_MAX_N = 20


def _check_limit(value: int, limit: int, what: str, force: bool) -> None:
    if value > limit:
        if not force:
            raise SizeLimitError(f"{what} = {value} exceeds limit {limit}")
        warnings.warn(f"{what} = {value} exceeds limit {limit}; running anyway", stacklevel=3)


@dataclass(frozen=True)
class LeafCertificate:
    tree: Tree
    leaves_in_R: frozenset[int]


@dataclass
class SolveReport:
    optimum: Fraction
    witness: frozenset[int]
    certificate: LeafCertificate | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    lower_bound_only: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def numerator(self) -> int:
        return self.optimum.numerator

    @property
    def denominator(self) -> int:
        return self.optimum.denominator

    def to_json(self) -> dict:
        out = {
            "optimum": f"{self.optimum.numerator}/{self.optimum.denominator}",
            "witness": sorted(self.witness),
            "certificate": None,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        if self.certificate is not None:
            out["certificate"] = {
                "edges": [list(e) for e in self.certificate.tree.edges()],
                "leaves": sorted(self.certificate.leaves_in_R),
            }
        if self.lower_bound_only:
            out["lower_bound_only"] = True
        out.update(self.extra)
        return out


def _feasible_mask(g: Graph, s: int) -> bool:
    if not is_connected_mask(g, s):
        return False
    outside = g.full_mask & ~s
    return all(g.nbr_mask(v) & outside for v in bits(s))


def leaf_feasible(g: Graph, Rp: Iterable[int]) -> bool:
    if g.n <= 2:
        raise GraphError("leaf feasibility characterization needs n >= 3")
    return _feasible_mask(g, mask_of(Rp))


def build_certificate(g: Graph, Rp: Iterable[int]) -> LeafCertificate:
    """BFS tree of ``G - Rp`` with each vertex of ``Rp`` hung on its smallest outside neighbour."""
    rp = frozenset(Rp)
    s = mask_of(rp)
    if g.n <= 2 or not _feasible_mask(g, s):
        raise GraphError(f"{sorted(rp)} is not leaf-feasible")
    rest = [v for v in range(g.n) if v not in rp]
    root = rest[0]
    parent = {root: -1}
    queue = [root]
    for v in queue:
        for u in g.neighbors(v):
            if u not in parent and u not in rp:
                parent[u] = v
                queue.append(u)
    for v in sorted(rp):
        parent[v] = min(u for u in g.adj[v] if u not in rp)
    return LeafCertificate(Tree(g.vertices, parent), rp)


def check_certificate(g: Graph, cert: LeafCertificate, R: Iterable[int] | None = None) -> bool:
    """Independent O(n + m) validation of a leaf certificate."""
    tree = cert.tree
    if tree.vertices != g.vertices or not tree.is_valid():
        return False
    edges = tree.edges()
    if len(edges) != g.n - 1 or any(not g.has_edge(u, v) for u, v in edges):
        return False
    if R is not None and not cert.leaves_in_R <= frozenset(R):
        return False
    return cert.leaves_in_R <= tree.leaves()


def tiny_ell(g: Graph, R: Iterable[int]) -> SolveReport:
    """Conventions for n <= 2.

    Both ends of K2 are leaves, so every nonempty R gives 1.  A one-vertex
    tree has no leaves, so K1 gives 0.
    """
    r = frozenset(R)
    if g.n == 1:
        tree = Tree(frozenset({0}), {0: -1})
        return SolveReport(Fraction(0), frozenset(), LeafCertificate(tree, frozenset()))
    if g.n == 2 and g.m == 1:
        tree = Tree(frozenset({0, 1}), {0: -1, 1: 0})
        return SolveReport(Fraction(1), r, LeafCertificate(tree, r))
    raise GraphError("graph is disconnected")


def _order_candidates(g: Graph, rmask: int) -> list[int]:
    outside = g.full_mask & ~rmask
    return sorted(bits(rmask), key=lambda v: (-(g.nbr_mask(v) & outside).bit_count(), v))


def _max_feasible_size(g: Graph, rmask: int, deadline: float | None) -> tuple[int, int, int, bool]:
    """Branch and bound for the largest feasible subset of ``rmask``.

    Returns (size, witness mask, nodes, timed_out).
    """
    cand = _order_candidates(g, rmask)
    best_size, best_mask = 0, 0
    nodes = 0
    timed_out = False

    # Singletons that are already infeasible can never be in a feasible set.
    cand = [v for v in cand if _feasible_mask(g, 1 << v)]

    def rec(i: int, cur: int, size: int) -> None:
        nonlocal best_size, best_mask, nodes, timed_out
        nodes += 1
        if size > best_size:
            best_size, best_mask = size, cur
        if i == len(cand) or size + len(cand) - i <= best_size:
            return
        if deadline is not None and nodes & 255 == 0 and time.monotonic() > deadline:
            timed_out = True
        if timed_out:
            return
        v = cand[i]
        nxt = cur | 1 << v
        if _feasible_mask(g, nxt):
            rec(i + 1, nxt, size + 1)
        rec(i + 1, cur, size)

    rec(0, 0, 0)
    return best_size, best_mask, nodes, timed_out


def _lex_least_feasible(g: Graph, rmask: int, size: int) -> int:
    """Lexicographically smallest feasible subset of ``rmask`` with ``size`` elements."""
    cand = [v for v in bits(rmask) if _feasible_mask(g, 1 << v)]

    def rec(i: int, cur: int, k: int) -> int | None:
        if k == size:
            return cur
        if len(cand) - i < size - k:
            return None
        for j in range(i, len(cand) - (size - k) + 1):
            nxt = cur | 1 << cand[j]
            if _feasible_mask(g, nxt):
                found = rec(j + 1, nxt, k + 1)
                if found is not None:
                    return found
        return None

    found = rec(0, 0, 0)
    assert found is not None
    return found


def ell(g: Graph, R: Iterable[int], *, force: bool = False, timeout_ms: float | None = None) -> SolveReport:
    """Exact l(G, R): the largest fraction of R that one spanning tree has as leaves."""
    start = time.perf_counter()
    r = frozenset(R)
    if not r:
        raise GraphError("R must be nonempty")
    if not r <= g.vertices:
        raise GraphError("R must be a subset of V(G)")
    if g.n <= 2:
        return tiny_ell(g, r)
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    _check_limit(len(r), ELL_MAX_R, "|R|", force)
    rmask = mask_of(r)
    deadline = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000
    size, witness, nodes, timed_out = _max_feasible_size(g, rmask, deadline)
    if not timed_out:
        witness = _lex_least_feasible(g, rmask, size)
    wset = set_of(witness)
    return SolveReport(
        optimum=Fraction(size, len(r)),
        witness=wset,
        certificate=build_certificate(g, wset),
        nodes_explored=nodes,
        elapsed=time.perf_counter() - start,
        lower_bound_only=timed_out,
    )


def feasibility_table(g: Graph) -> np.ndarray:
    """Boolean array over all 2**n vertex subsets: leaf-feasible or not."""
    table = np.zeros(1 << g.n, dtype=bool)
    for s in range(1 << g.n):
        # Downward closure: a set is infeasible if any one-smaller subset is.
        if s and not all(table[s & ~(1 << v)] for v in bits(s)):
            continue
        table[s] = _feasible_mask(g, s)
    return table


def best_leaf_counts(g: Graph) -> np.ndarray:
    """For every subset R (as bitmask index), the largest feasible subset size."""
    n = g.n
    feas = feasibility_table(g)
    idx = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pop += (idx >> b) & 1
    best = np.where(feas, pop, 0)
    # Max over subsets, one coordinate at a time.
    for b in range(n):
        view = best.reshape(-1, 2, 1 << b)
        np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
    return best


def kappa_rho(g: Graph, *, force: bool = False) -> SolveReport:
    """Robust connectivity: min over nonempty R of l(G, R).

    The witness R is the lexicographically smallest minimiser (as a sorted
    tuple).  The certificate realises l(G, R) on that witness.
    """
    start = time.perf_counter()
    if g.n < 3:
        raise GraphError("kappa_rho needs n >= 3")
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    _check_limit(g.n, KAPPA_MAX_N, "n", force)
    best = best_leaf_counts(g)
    n = g.n
    idx = np.arange(1, 1 << n, dtype=np.int64)
    pop = np.zeros(idx.shape, dtype=np.int64)
    for b in range(n):
        pop += (idx >> b) & 1
    num = best[1:]
    # Minimise num/pop exactly: compare cross products against the running best.
    k = int(np.argmin(num / pop))
    p, q = int(num[k]), int(pop[k])
    minimisers = idx[num * q == pop * p]
    witness = min((tuple(bits(int(s))) for s in minimisers))
    report = ell(g, witness, force=True)
    return SolveReport(
        optimum=Fraction(p, q),
        witness=frozenset(witness),
        certificate=report.certificate,
        nodes_explored=1 << n,
        elapsed=time.perf_counter() - start,
        extra={"leaf_witness": sorted(report.witness)},
    )


def max_leaf_number(g: Graph, *, force: bool = False) -> int:
    if g.n < 3:
        raise GraphError("max_leaf_number needs n >= 3")
    _check_limit(g.n, MAXLEAF_MAX_N, "n", force)
    return len(ell(g, g.vertices, force=True).witness)


def _is_forest(g: Graph, s: int) -> bool:
    verts = list(bits(s))
    m = sum((g.nbr_mask(v) & s).bit_count() for v in verts) // 2
    if m == 0:
        return True
    comps = 0
    rest = s
    while rest:
        low = rest & -rest
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.nbr_mask(v)
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        rest &= ~seen
        comps += 1
    return m == len(verts) - comps


def max_induced_forest(g: Graph, *, force: bool = False) -> tuple[int, frozenset[int]]:
    """Largest vertex set inducing an acyclic subgraph, with the lexicographically smallest witness."""
    if g.n < 1:
        raise GraphError("empty graph")
    _check_limit(g.n, FOREST_MAX_N, "n", force)
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    best = [0, 0]

    def rec(i: int, cur: int, size: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, cur
        if i == g.n or size + g.n - i <= best[0]:
            return
        nxt = cur | 1 << order[i]
        if _is_forest(g, nxt):
            rec(i + 1, nxt, size + 1)
        rec(i + 1, cur, size)

    rec(0, 0, 0)
    size = best[0]

    # Lexicographically least witness of the optimal size (acyclicity is hereditary).
    def lex(i: int, cur: int, k: int) -> int | None:
        if k == size:
            return cur
        for v in range(i, g.n - (size - k) + 1):
            nxt = cur | 1 << v
            if _is_forest(g, nxt):
                found = lex(v + 1, nxt, k + 1)
                if found is not None:
                    return found
        return None

    return size, set_of(lex(0, 0, 0))
