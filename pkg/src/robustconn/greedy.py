"""Greedy red-vertex reduction and the bipartition-halving certificate pipeline."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .bounds import epsilon, leaf_fraction_floor
from .exact import LeafCertificate, _feasible_mask, build_certificate
from .graph import (
    Graph,
    GraphError,
    bits,
    component_masks,
    is_connected_mask,
    mask_of,
    set_of,
    spanning_tree_any,
    tree_bipartition,
    vertex_connectivity,
)


class PreconditionError(GraphError):
    """A hypothesis of the greedy guarantee does not hold for the input."""


@dataclass(frozen=True)
class GreedyStep:
    vertex: int
    components_touched: int
    blue_after: int
    red_after: int


@dataclass
class GreedyTrace:
    initial_blue: int
    initial_red: int
    steps: list[GreedyStep] = field(default_factory=list)

    def blue_counts(self) -> list[int]:
        return [self.initial_blue] + [s.blue_after for s in self.steps]

    def red_counts(self) -> list[int]:
        return [self.initial_red] + [s.red_after for s in self.steps]

    def to_json_lines(self) -> str:
        head = {"t": 0, "blue": self.initial_blue, "red": self.initial_red}
        lines = [json.dumps(head)]
        for t, s in enumerate(self.steps, 1):
            lines.append(json.dumps({
                "t": t,
                "vertex": s.vertex,
                "components_touched": s.components_touched,
                "blue": s.blue_after,
                "red": s.red_after,
            }))
        return "\n".join(lines) + "\n"


def _cross_edges_connected(g: Graph, rmask: int) -> bool:
    """Is G connected once every edge with both ends in R is deleted?"""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nb = g.nbr_mask(v)
            if rmask >> v & 1:
                nb &= ~rmask
            nxt |= nb
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == g.full_mask


def greedy_reduce(g: Graph, R: Iterable[int]) -> tuple[frozenset[int], GreedyTrace]:
    """Recolour red vertices touching the most blue components until one blue component is left.

    Blue components are the components of ``G - R``.  Ties go to the smallest
    vertex id.
    """
    rmask = mask_of(R)
    if not rmask:
        raise PreconditionError("R must be nonempty")
    if not _cross_edges_connected(g, rmask):
        inner = [e for e in g.edges() if rmask >> e[0] & 1 and rmask >> e[1] & 1]
        raise PreconditionError(f"G is disconnected after deleting the edges inside R: {inner}")
    label = [-1] * g.n
    comps = component_masks(g, rmask)
    for i, c in enumerate(comps):
        for v in bits(c):
            label[v] = i
    # Blue components merge as red vertices are absorbed; track them with union-find.
    parent = list(range(len(comps)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    blue = len(comps)
    red = rmask
    trace = GreedyTrace(blue, rmask.bit_count())
    while blue >= 2:
        best_v, best_k, best_roots = -1, 0, set()
        for v in bits(red):
            roots = {find(label[u]) for u in bits(g.nbr_mask(v) & ~red)}
            if len(roots) > best_k:
                best_v, best_k, best_roots = v, len(roots), roots
        if best_k < 2:
            raise PreconditionError("no red vertex touches two blue components")
        roots = sorted(best_roots)
        for x in roots[1:]:
            parent[find(x)] = find(roots[0])
        label[best_v] = roots[0]
        red &= ~(1 << best_v)
        blue -= best_k - 1
        trace.steps.append(GreedyStep(best_v, best_k, blue, red.bit_count()))
    return set_of(red), trace


def check_greedy_preconditions(g: Graph, R: Iterable[int], r: int, d: Fraction) -> None:
    rset = frozenset(R)
    rmask = mask_of(rset)
    if not rset:
        raise PreconditionError("R must be nonempty")
    kappa = vertex_connectivity(g)
    if kappa < r:
        raise PreconditionError(f"G is only {kappa}-connected, need {r}")
    blue = len(component_masks(g, rmask))
    if blue > Fraction(d) / r * len(rset):
        raise PreconditionError(f"G - R has {blue} components, more than (d/r)|R| = {Fraction(d) / r * len(rset)}")
    if not _cross_edges_connected(g, rmask):
        raise PreconditionError("G is disconnected after deleting the edges inside R")


def theorem5_bound_holds(g: Graph, R: Iterable[int], r: int, d) -> bool:
    """Run the greedy reduction and test |R'| >= eps_r(d)|R| with G - R' connected.

    Raises :class:`PreconditionError` naming the failed hypothesis.  Under the
    hypotheses a False return means the guarantee was violated.
    """
    rset = frozenset(R)
    d = Fraction(d)
    check_greedy_preconditions(g, rset, r, d)
    rest, _ = greedy_reduce(g, rset)
    return len(rest) >= epsilon(r, d) * len(rset) and is_connected_mask(g, mask_of(rest))


class PipelineResult(NamedTuple):
    certificate: LeafCertificate
    ratio: Fraction
    strategy: str
    dropped: int
    halved: frozenset[int]


def _repair(g: Graph, rest: frozenset[int]) -> tuple[frozenset[int], int]:
    """Make ``rest`` leaf-feasible, dropping vertices only when forced."""
    if _feasible_mask(g, mask_of(rest)):
        return rest, 0
    keep = 0
    for v in sorted(rest):
        if _feasible_mask(g, keep | 1 << v):
            keep |= 1 << v
    kept = set_of(keep)
    return kept, len(rest) - len(kept)


def theorem6_pipeline(g: Graph, R: Iterable[int], gamma: int) -> PipelineResult:
    """Certified lower bound on l(G, R) for an r-connected graph (r >= 3) of Euler genus ``gamma``.

    Keeps the larger class of R under a spanning-tree bipartition, runs the
    greedy reduction on it and turns the surviving red set into a leaf
    certificate.  The small-R strategy (any r-1 vertices of R) is always
    evaluated too and the better certificate is returned.
    """
    rset = frozenset(R)
    if not rset or not rset <= g.vertices:
        raise GraphError("R must be a nonempty vertex subset")
    r = vertex_connectivity(g)
    if r < 3:
        raise GraphError(f"pipeline needs a 3-connected graph, got connectivity {r}")
    u_class, w_class = tree_bipartition(spanning_tree_any(g))
    a, b = rset & u_class, rset & w_class
    if len(a) != len(b):
        halved = a if len(a) > len(b) else b
    else:
        halved = a if min(a | {g.n}) < min(b | {g.n}) else b

    small = frozenset(sorted(rset)[: min(r - 1, len(rset))])
    small_cert = build_certificate(g, small)
    assert Fraction(len(small), len(rset)) >= leaf_fraction_floor(r, len(rset))

    threshold = 12 * (r - 1) * (gamma + 1) ** (1 / r)
    greedy_cert, dropped = None, 0
    if halved:
        rest, _ = greedy_reduce(g, halved)
        rest, dropped = _repair(g, rest)
        if rest:
            greedy_cert = build_certificate(g, rest)

    preferred = "small" if len(halved) <= threshold else "greedy"
    options = [("small", small_cert)]
    if greedy_cert is not None:
        options.append(("greedy", greedy_cert))
    strategy, cert = max(options, key=lambda o: (len(o[1].leaves_in_R), o[0] == preferred))
    return PipelineResult(cert, Fraction(len(cert.leaves_in_R), len(rset)), strategy, dropped, halved)


def trace_steps_bound(trace: GreedyTrace, r: int) -> bool:
    """Each step removes at least max(ceil(r B_t / R_t) - 1, 1) blue components."""
    blues, reds = trace.blue_counts(), trace.red_counts()
    for t in range(len(trace.steps)):
        need = max(math.ceil(Fraction(r * blues[t], reds[t])) - 1, 1)
        if blues[t + 1] > blues[t] - need:
            return False
    return True
