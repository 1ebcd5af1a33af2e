"""Named graph families and embeddings.

Each constructor returns a :class:`NamedInstance` whose ``legend`` maps vertex
ids to a short description of their role in the construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import networkx as nx

from .embedding import EmbeddedGraph, delete_edge, from_faces, insert_edge_in_face, trace_faces
from .graph import Graph, GraphError, is_connected, vertex_connectivity


@dataclass(frozen=True)
class NamedInstance:
    name: str
    graph: Graph
    designated_R: frozenset[int] | None = None
    embedding: EmbeddedGraph | None = None
    legend: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.designated_R is not None and not self.designated_R <= self.graph.vertices:
            raise GraphError("designated R is not a vertex subset")
        if self.embedding is not None and self.embedding.base != self.graph:
            raise GraphError("embedding base graph differs from graph")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cube_graph() -> Graph:
    return Graph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def from_networkx(h: nx.Graph) -> tuple[Graph, dict]:
    """Relabel a networkx graph to dense ids (sorted node order); returns the id map."""
    ids = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(ids), [(ids[a], ids[b]) for a, b in h.edges]), ids


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def planar_embedding(g: Graph) -> EmbeddedGraph:
    """Plane embedding of a connected planar graph via networkx's planarity test."""
    ok, emb = nx.check_planarity(to_networkx(g))
    if not ok:
        raise GraphError("graph is not planar")
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))
    return EmbeddedGraph(g, rotation, {})


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(to_networkx(g))[0]


K4_FACES = [(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)]


def k4_planar() -> NamedInstance:
    emb = from_faces(4, K4_FACES)
    return NamedInstance("k4", emb.base, None, emb, {v: "tetrahedron vertex" for v in range(4)})


def levi(n: int, r: int = 3) -> NamedInstance:
    """Incidence graph of n points and all r-subsets.

    Ids ``0..n-1`` are the points (the designated R); the r-subsets follow in
    lexicographic order.
    """
    if r < 3 or n < r + 1:
        raise GraphError("need r >= 3 and n >= r + 1")
    if comb(n, r) > 10**6:
        raise GraphError("too many r-subsets")
    edges = []
    legend = {v: "point" for v in range(n)}
    for k, subset in enumerate(combinations(range(n), r)):
        x = n + k
        legend[x] = "subset " + ",".join(map(str, subset))
        edges += [(p, x) for p in subset]
    g = Graph.from_edges(n + comb(n, r), edges)
    return NamedInstance(f"levi({n},{r})", g, frozenset(range(n)), None, legend)


def diamond_cycle(k: int, c: int) -> NamedInstance:
    """Cycle of c blocks, each a (k+1)-clique minus one edge, giving a k-regular graph.

    Block ``i`` occupies ids ``i(k+1) .. i(k+1)+k``; its two tips are the first
    two ids.  The second tip links to the first tip of the next block and is
    the designated vertex of the block.
    """
    if k < 3 or c < 3:
        raise GraphError("need k >= 3 and c >= 3")
    size = k + 1
    edges = []
    legend = {}
    designated = []
    for i in range(c):
        base = i * size
        block = range(base, base + size)
        edges += [(a, b) for a, b in combinations(block, 2) if (a, b) != (base, base + 1)]
        edges.append((base + 1, ((i + 1) % c) * size))
        designated.append(base + 1)
        legend[base] = f"block {i} tip (link to previous block)"
        legend[base + 1] = f"block {i} tip (link to next block)"
        for v in range(base + 2, base + size):
            legend[v] = f"block {i} interior"
    g = Graph.from_edges(c * size, edges)
    return NamedInstance(f"diamond_cycle({k},{c})", g, frozenset(designated), None, legend)


def triakis_tetrahedron() -> NamedInstance:
    """K4 (ids 0-3, designated) plus one apex per face (ids 4-7)."""
    faces = []
    for i, (a, b, c) in enumerate(K4_FACES):
        x = 4 + i
        faces += [(a, b, x), (b, c, x), (c, a, x)]
    emb = from_faces(8, faces)
    legend = {v: "tetrahedron vertex" for v in range(4)}
    legend.update({4 + i: f"apex over face {f}" for i, f in enumerate(K4_FACES)})
    return NamedInstance("triakis", emb.base, frozenset(range(4)), emb, legend)


def triangle_blowup(h: Graph, check_planar: bool = True) -> NamedInstance:
    """Replace each vertex of a cubic graph by a triangle and each edge by a degree-4 vertex.

    Triangle of vertex ``v`` is ``3v, 3v+1, 3v+2``; the vertex for the ``j``-th
    edge of ``h`` is ``3|V(h)| + j``.  With a plane rotation ``(n0, n1, n2)`` at
    ``v``, the edge towards ``n_k`` attaches to the triangle side
    ``(3v+k, 3v+k+1 mod 3)``, so distinct edges use distinct sides and the
    result stays planar.
    """
    if not h.is_regular(3):
        raise GraphError("H must be 3-regular")
    if nx.edge_connectivity(to_networkx(h)) < 3:
        raise GraphError("H must be 3-edge-connected")
    if check_planar:
        rotation = planar_embedding(h).rotation
    else:
        rotation = tuple(tuple(h.neighbors(v)) for v in range(h.n))
    nv = h.n
    edges = []
    legend = {}
    for v in range(nv):
        t = [3 * v, 3 * v + 1, 3 * v + 2]
        edges += [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
        for x in t:
            legend[x] = f"triangle of H-vertex {v}"
    designated = []
    for j, (u, v) in enumerate(h.edges()):
        x = 3 * nv + j
        designated.append(x)
        legend[x] = f"edge vertex for H-edge {u}-{v}"
        for a, b in ((u, v), (v, u)):
            k = rotation[a].index(b)
            edges += [(3 * a + k, x), (3 * a + (k + 1) % 3, x)]
    g = Graph.from_edges(3 * nv + h.m, edges)
    return NamedInstance("triangle_blowup", g, frozenset(designated), None, legend)


def k7_torus() -> NamedInstance:
    """K7 triangulating the torus: vertices are Z_7, faces {i, i+1, i+3} and {i, i+3, i+2}."""
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 3) % 7, (i + 2) % 7))
    emb = from_faces(7, faces)
    return NamedInstance("k7_torus", emb.base, None, emb, {v: f"{v} mod 7" for v in range(7)})


# Found by exhaustive search over signed rotations of K5 - {3,4}: Euler genus 1
# with every face seeing only pairwise adjacent vertices.  Faces: one hexagon
# 0-1-4-0-2-4 and triangles 013, 023, 124, 123.
_K5ME_ROTATION = ((1, 3, 2, 4), (0, 4, 2, 3), (0, 3, 1, 4), (0, 1, 2), (0, 1, 2))
_K5ME_SIGNS = {(1, 4): -1, (2, 4): -1}


def k5_minus_e_projective() -> NamedInstance:
    """K5 minus the edge 3-4, edge-maximally embedded in the projective plane."""
    g = Graph.from_edges(5, [e for e in combinations(range(5), 2) if e != (3, 4)])
    emb = EmbeddedGraph(g, _K5ME_ROTATION, _K5ME_SIGNS)
    legend = {0: "apex", 1: "apex", 2: "apex", 3: "end of missing edge", 4: "end of missing edge"}
    return NamedInstance("k5_minus_e_projective", g, None, emb, legend)


def torus_diamond() -> NamedInstance:
    """A diamond (K4 minus an edge) on the torus with one non-separating triangle.

    The diamond sits inside the K7 torus triangulation with the edge 1-4
    removed; vertices 2, 5, 6 only make the embedding cellular and are never
    part of the cut subgraphs of interest.  Roles: v=4, w=0, x=1, y=3, so
    ``wxy`` bounds a face while ``vwy`` wraps around the torus.
    """
    emb = delete_edge(k7_torus().embedding, 1, 4)
    legend = {4: "v", 0: "w", 1: "x", 3: "y", 2: "scaffold", 5: "scaffold", 6: "scaffold"}
    return NamedInstance("torus_diamond", emb.base, frozenset({0, 1, 3, 4}), emb, legend)


ICOSAHEDRON_FACES = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 6, 2), (2, 7, 3), (3, 8, 4), (4, 9, 5), (5, 10, 1),
    (2, 6, 7), (3, 7, 8), (4, 8, 9), (5, 9, 10), (1, 10, 6),
    (11, 7, 6), (11, 8, 7), (11, 9, 8), (11, 10, 9), (11, 6, 10),
]


def icosahedron() -> NamedInstance:
    emb = from_faces(12, ICOSAHEDRON_FACES)
    return NamedInstance("icosahedron", emb.base, None, emb, {v: "vertex" for v in range(12)})


def _stacked_faces(n: int, rng: random.Random) -> list[tuple[int, int, int]]:
    faces = list(K4_FACES)
    for x in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, x)
        faces += [(b, c, x), (c, a, x)]
    return faces


def random_planar_triangulation(n: int, seed: int = 0) -> NamedInstance:
    """Stacked triangulation: start from K4, repeatedly split a uniformly random face.

    Uses ``random.Random(seed)``; face ``i`` is replaced in place by its first
    child and the other two children are appended.
    """
    if n < 4:
        raise GraphError("need n >= 4")
    emb = from_faces(n, _stacked_faces(n, random.Random(seed)))
    return NamedInstance(f"stacked({n},{seed})", emb.base, None, emb, {})


def flip_edge(e: EmbeddedGraph, u: int, v: int) -> EmbeddedGraph | None:
    """Flip edge uv of a triangulation; None when the flip would create a parallel edge."""
    faces = trace_faces(e)
    opposite = []
    for i in faces.edge_faces[(min(u, v), max(u, v))]:
        walk = faces.walk(i)
        if len(walk) != 3:
            return None
        opposite.append(next(x for x in walk if x not in (u, v)))
    x, y = opposite
    if x == y or e.base.has_edge(x, y):
        return None
    e2 = delete_edge(e, u, v)
    faces2 = trace_faces(e2)
    for i in range(len(faces2)):
        walk = faces2.walk(i)
        if x in walk and y in walk:
            return insert_edge_in_face(e2, faces2, i, x, y)
    raise AssertionError("merged face not found")


def random_flip_triangulation(n: int, seed: int = 0, flips: int | None = None) -> NamedInstance:
    """Stacked triangulation followed by random edge flips (default ``3n`` attempts)."""
    rng = random.Random(seed)
    emb = from_faces(n, _stacked_faces(n, rng))
    for _ in range(3 * n if flips is None else flips):
        u, v = rng.choice(emb.base.edges())
        flipped = flip_edge(emb, u, v)
        if flipped is not None:
            emb = flipped
    return NamedInstance(f"flipped({n},{seed})", emb.base, None, emb, {})


def random_plane_graph(n: int, seed: int = 0, deletions: int | None = None) -> NamedInstance:
    """Random connected plane graph: a flipped triangulation with edges deleted while it stays connected."""
    rng = random.Random(seed)
    emb = random_flip_triangulation(n, seed).embedding
    target = rng.randrange(0, 2 * n - 5) if deletions is None else deletions
    for _ in range(target):
        u, v = rng.choice(emb.base.edges())
        cand = delete_edge(emb, u, v)
        if is_connected(cand.base):
            emb = cand
    return NamedInstance(f"plane({n},{seed})", emb.base, None, emb, {})


def double_wheel(k: int) -> NamedInstance:
    """Cycle 0..k-1 with apexes k and k+1 on either side; 4-connected for k >= 4."""
    if k < 3:
        raise ValueError("need k >= 3")
    faces = []
    for i in range(k):
        j = (i + 1) % k
        faces.append((i, j, k))
        faces.append((j, i, k + 1))
    emb = from_faces(k + 2, faces)
    legend = {v: "rim" for v in range(k)}
    legend.update({k: "apex", k + 1: "apex"})
    return NamedInstance(f"double_wheel({k})", emb.base, None, emb, legend)


def _split_edge(faces: list[tuple[int, int, int]], u: int, v: int, w: int) -> list[tuple[int, int, int]]:
    """Replace edge uv by vertex w joined to u, v and both opposite corners."""
    out = []
    for f in faces:
        for k in range(3):
            a, b, c = f[k], f[(k + 1) % 3], f[(k + 2) % 3]
            if {a, b} == {u, v}:
                out += [(a, w, c), (w, b, c)]
                break
        else:
            out.append(f)
    return out


def random_4connected_triangulation(n: int, seed: int = 0, flips: int | None = None) -> NamedInstance:
    """Octahedron grown by random edge splits, then random flips that keep connectivity at least 4."""
    if n < 6:
        raise ValueError("need n >= 6")
    rng = random.Random(seed)
    faces = [(0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4), (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5)]
    edges = sorted({tuple(sorted((f[i], f[(i + 1) % 3]))) for f in faces for i in range(3)})
    for w in range(6, n):
        u, v = rng.choice(edges)
        faces = _split_edge(faces, u, v, w)
        edges = sorted({tuple(sorted((f[i], f[(i + 1) % 3]))) for f in faces for i in range(3)})
    emb = from_faces(n, faces)
    for _ in range(2 * n if flips is None else flips):
        u, v = rng.choice(emb.base.edges())
        flipped = flip_edge(emb, u, v)
        if flipped is not None and vertex_connectivity(flipped.base) >= 4:
            emb = flipped
    return NamedInstance(f"flipped4({n},{seed})", emb.base, None, emb, {})
