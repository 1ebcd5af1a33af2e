"""Cellular embeddings of connected graphs given by signed rotation systems.

A rotation lists the neighbours of each vertex in cyclic order; an edge of
sign -1 reverses the local orientation when crossed.  With all signs +1 the
embedding is orientable.

Faces are traced on *flags* ``(v, u, s)``: standing at ``v``, about to walk
the edge towards ``u`` with local orientation ``s``.  Each face gives two
mirror-image flag orbits; a face is stored as the orbit holding the smaller
flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, GraphError, SizeLimitError, _content_lines, _parse_graph_lines, format_graph, is_connected, mask_of

Flag = tuple[int, int, int]

M_VALUE_MAX_N = 16


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    k = seq.index(min(seq))
    return tuple(seq[k:]) + tuple(seq[:k])


@dataclass(frozen=True)
class EmbeddedGraph:
    base: Graph
    rotation: tuple[tuple[int, ...], ...]
    signs: dict

    def __post_init__(self):
        g = self.base
        if len(self.rotation) != g.n:
            raise GraphError("rotation needs one cyclic order per vertex")
        rot = []
        for v, order in enumerate(self.rotation):
            if len(order) != len(set(order)) or set(order) != g.adj[v]:
                raise GraphError(f"rotation at {v} is not a permutation of its neighbours")
            rot.append(_canonical_cycle(list(order)))
        object.__setattr__(self, "rotation", tuple(rot))
        signs = {e: 1 for e in g.edges()}
        for (u, v), s in dict(self.signs).items():
            e = _edge(u, v)
            if e not in signs or s not in (1, -1):
                raise GraphError(f"bad sign entry {(u, v)}: {s}")
            signs[e] = s
        object.__setattr__(self, "signs", signs)

    def __hash__(self):
        return hash((self.base, self.rotation, tuple(sorted(self.signs.items()))))

    @property
    def n(self) -> int:
        return self.base.n

    def sign(self, u: int, v: int) -> int:
        return self.signs[_edge(u, v)]

    def succ(self, v: int, u: int) -> int:
        order = self.rotation[v]
        return order[(order.index(u) + 1) % len(order)]

    def pred(self, v: int, u: int) -> int:
        order = self.rotation[v]
        return order[order.index(u) - 1]

    def step(self, flag: Flag) -> Flag:
        v, u, s = flag
        s2 = s * self.sign(v, u)
        w = self.succ(u, v) if s2 == 1 else self.pred(u, v)
        return (u, w, s2)

    def is_orientable(self) -> bool:
        """True iff some choice of local orientations makes every sign +1."""
        side = {0: 1}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.rotation[v]:
                want = side[v] * self.sign(v, u)
                if u not in side:
                    side[u] = want
                    stack.append(u)
                elif side[u] != want:
                    return False
        return True


@dataclass(frozen=True)
class FaceStructure:
    """Faces as flag walks, plus edge and vertex incidences."""

    faces: tuple[tuple[Flag, ...], ...]
    edge_faces: dict
    vertex_faces: dict

    def walk(self, i: int) -> list[int]:
        """Boundary vertices of face ``i`` in walk order (repeats allowed)."""
        return [flag[0] for flag in self.faces[i]]

    def __len__(self) -> int:
        return len(self.faces)


def trace_faces(e: EmbeddedGraph) -> FaceStructure:
    g = e.base
    if g.m < 1:
        raise GraphError("face tracing needs at least one edge")
    if not is_connected(g):
        raise GraphError("embedding requires a connected base graph")
    seen: set[Flag] = set()
    faces = []
    for v in range(g.n):
        for u in sorted(g.adj[v]):
            for s in (1, -1):
                start = (v, u, s)
                if start in seen:
                    continue
                orbit = [start]
                nxt = e.step(start)
                while nxt != start:
                    orbit.append(nxt)
                    nxt = e.step(nxt)
                seen.update(orbit)
                mirror_start = (u, v, -e.step(start)[2])
                m = mirror_start
                while True:
                    seen.add(m)
                    m = e.step(m)
                    if m == mirror_start:
                        break
                faces.append(tuple(orbit))
    edge_faces: dict = {}
    vertex_faces: dict = {v: set() for v in range(g.n)}
    for i, face in enumerate(faces):
        for v, u, _ in face:
            edge_faces.setdefault(_edge(v, u), []).append(i)
            vertex_faces[v].add(i)
    for key, fs in edge_faces.items():
        if len(fs) != 2:
            raise GraphError(f"malformed rotation system: edge {key} has {len(fs)} face sides")
    return FaceStructure(
        tuple(faces),
        {k: tuple(v) for k, v in edge_faces.items()},
        {v: frozenset(fs) for v, fs in vertex_faces.items()},
    )


def euler_genus(e: EmbeddedGraph, faces: FaceStructure | None = None) -> int:
    if faces is None:
        faces = trace_faces(e)
    gamma = 2 - e.base.n + e.base.m - len(faces)
    if gamma < 0:
        raise GraphError("negative Euler genus: rotation system is malformed")
    return gamma


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[a] = b
            self.count -= 1


def _cut_count(nfaces: int, edge_faces: dict, rmask: int) -> int:
    uf = _UnionFind(nfaces)
    for (u, v), (f1, f2) in edge_faces.items():
        if not (rmask >> u & 1 and rmask >> v & 1):
            uf.union(f1, f2)
    return uf.count


def cut_components(e: EmbeddedGraph, Rp: Iterable[int], faces: FaceStructure | None = None) -> int:
    """Number of pieces left after cutting the surface along the subgraph induced by ``Rp``.

    Faces are glued back together across every edge that is not inside
    ``Rp``; isolated vertices of the subgraph only puncture a piece.
    """
    if faces is None:
        faces = trace_faces(e)
    return _cut_count(len(faces), faces.edge_faces, mask_of(Rp))


def m_value(e: EmbeddedGraph, *, force: bool = False) -> tuple[int, frozenset[int]]:
    """Largest vertex set whose induced subgraph leaves the surface connected.

    Non-separating sets are closed under subsets, so sizes are tried from the
    top and the first lexicographic hit is returned.
    """
    n = e.base.n
    if n > M_VALUE_MAX_N and not force:
        raise SizeLimitError(f"m_value limited to n <= {M_VALUE_MAX_N}")
    faces = trace_faces(e)
    nf, ef = len(faces), faces.edge_faces
    for k in range(n, -1, -1):
        for combo in combinations(range(n), k):
            if _cut_count(nf, ef, mask_of(combo)) == 1:
                return k, frozenset(combo)
    raise AssertionError("the empty set never separates")


def _face_vertices(faces: FaceStructure, i: int) -> list[int]:
    return sorted(set(faces.walk(i)))


def is_edge_maximal_embedding(e: EmbeddedGraph, faces: FaceStructure | None = None) -> bool:
    """True iff no face sees two distinct non-adjacent vertices."""
    if faces is None:
        faces = trace_faces(e)
    g = e.base
    for i in range(len(faces)):
        for u, w in combinations(_face_vertices(faces, i), 2):
            if not g.has_edge(u, w):
                return False
    return True


def _corners(face: Sequence[Flag]) -> list[tuple[int, int, int, int]]:
    """Corners of a face walk as (vertex, arriving-from, leaving-to, orientation)."""
    out = []
    k = len(face)
    for i in range(k):
        a = face[i][0]
        b, c, o = face[(i + 1) % k]
        out.append((b, a, c, o))
    return out


def _with_insertions(e: EmbeddedGraph, extra_vertices: int, insertions: dict, new_rot: dict, new_signs: dict) -> EmbeddedGraph:
    """Rebuild an embedding after inserting new neighbours into corner gaps.

    ``insertions[v][x] = y`` places ``y`` directly after neighbour ``x`` in the
    rotation at ``v``.
    """
    g = e.base
    n = g.n + extra_vertices
    edges = set(g.edges()) | set(new_signs)
    rotation = []
    for v in range(n):
        if v < g.n:
            order = []
            for x in e.rotation[v]:
                order.append(x)
                if x in insertions.get(v, {}):
                    order.append(insertions[v][x])
            rotation.append(tuple(order))
        else:
            rotation.append(tuple(new_rot[v]))
    signs = dict(e.signs)
    signs.update(new_signs)
    return EmbeddedGraph(Graph.from_edges(n, edges), tuple(rotation), signs)


def _gap_key(v: int, a: int, c: int, o: int) -> int:
    # The gap between a and c at v starts after a (o = +1) or after c (o = -1).
    return a if o == 1 else c


def insert_edge_in_face(e: EmbeddedGraph, faces: FaceStructure, face: int, u: int, w: int) -> EmbeddedGraph:
    """Add edge ``uw`` through face ``face``, using the first corner of each endpoint."""
    if u == w or e.base.has_edge(u, w):
        raise GraphError(f"cannot add edge {u}-{w}")
    corners = {}
    for b, a, c, o in _corners(faces.faces[face]):
        corners.setdefault(b, (a, c, o))
    if u not in corners or w not in corners:
        raise GraphError(f"{u} and {w} are not both on face {face}")
    au, cu, ou = corners[u]
    aw, cw, ow = corners[w]
    insertions = {u: {_gap_key(u, au, cu, ou): w}, w: {_gap_key(w, aw, cw, ow): u}}
    return _with_insertions(e, 0, insertions, {}, {_edge(u, w): ou * ow})


def delete_edge(e: EmbeddedGraph, u: int, w: int) -> EmbeddedGraph:
    g = e.base
    if not g.has_edge(u, w):
        raise GraphError(f"{u}-{w} is not an edge")
    edges = [x for x in g.edges() if x != _edge(u, w)]
    rotation = tuple(tuple(x for x in order if not {v, x} == {u, w}) for v, order in enumerate(e.rotation))
    signs = {k: s for k, s in e.signs.items() if k != _edge(u, w)}
    return EmbeddedGraph(Graph.from_edges(g.n, edges), rotation, signs)


def edge_maximal_completion(e: EmbeddedGraph) -> EmbeddedGraph:
    """Add chords inside faces until no face sees a non-adjacent pair."""
    while True:
        faces = trace_faces(e)
        for i in range(len(faces)):
            pairs = [(u, w) for u, w in combinations(_face_vertices(faces, i), 2) if not e.base.has_edge(u, w)]
            if pairs:
                e = insert_edge_in_face(e, faces, i, *pairs[0])
                break
        else:
            return e


def augment_with_component_vertices(e: EmbeddedGraph) -> tuple[EmbeddedGraph, frozenset[int]]:
    """Put a new vertex in every face, joined to each distinct vertex on its boundary.

    Returns the augmented embedding and the set of original vertices.
    """
    faces = trace_faces(e)
    if not is_edge_maximal_embedding(e, faces):
        raise GraphError("augmentation requires an edge-maximal embedding")
    n = e.base.n
    insertions: dict = {}
    new_rot: dict = {}
    new_signs: dict = {}
    for i, face in enumerate(faces.faces):
        c = n + i
        order = []
        for b, a, nxt, o in _corners(face):
            if b in order:
                continue
            order.append(b)
            insertions.setdefault(b, {})[_gap_key(b, a, nxt, o)] = c
            new_signs[_edge(b, c)] = o
        new_rot[c] = order[::-1]
    out = _with_insertions(e, len(faces), insertions, new_rot, new_signs)
    return out, frozenset(range(n))


def from_faces(n: int, faces: Iterable[Sequence[int]]) -> EmbeddedGraph:
    """Orientable embedding from consistently oriented facial walks.

    Every directed edge must occur in exactly one face.
    """
    faces = [list(f) for f in faces]
    succ: dict = {v: {} for v in range(n)}
    edges = set()
    for f in faces:
        k = len(f)
        for i in range(k):
            a, b, c = f[i - 1], f[i], f[(i + 1) % k]
            if a in succ[b]:
                raise GraphError(f"directed edge {a}->{b} appears twice")
            succ[b][a] = c
            edges.add(_edge(a, b))
    rotation = []
    for v in range(n):
        nb = succ[v]
        if not nb:
            rotation.append(())
            continue
        start = min(nb)
        order = [start]
        x = nb[start]
        while x != start:
            order.append(x)
            x = nb[x]
        if len(order) != len(nb):
            raise GraphError(f"faces around {v} do not close into a single disk")
        rotation.append(tuple(order))
    return EmbeddedGraph(Graph.from_edges(n, edges), tuple(rotation), {})


# -- text format -------------------------------------------------------------

def format_embedding(e: EmbeddedGraph) -> str:
    edges = e.base.edges()
    index = {ed: i for i, ed in enumerate(edges)}
    lines = [format_graph(e.base).rstrip("\n")]
    for v, order in enumerate(e.rotation):
        ids = " ".join(str(index[_edge(v, u)]) for u in order)
        lines.append(f"{v}: {ids}".rstrip())
    signs = " ".join("+" if e.signs[ed] == 1 else "-" for ed in edges)
    lines.append(f"signs: {signs}".rstrip())
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> EmbeddedGraph:
    g, rest = _parse_graph_lines(_content_lines(text))
    edges = g.edges()
    rotation: list = [None] * g.n
    signs = None
    for line in rest:
        head, _, body = line.partition(":")
        head = head.strip()
        if head == "signs":
            toks = body.split()
            if len(toks) != len(edges) or any(t not in ("+", "-", "\u2212") for t in toks):
                raise GraphError("signs line must list one of +/- per edge")
            signs = {ed: (1 if t == "+" else -1) for ed, t in zip(edges, toks)}
            continue
        try:
            v = int(head)
            ids = [int(t) for t in body.split()]
        except ValueError:
            raise GraphError(f"bad rotation line {line!r}") from None
        if not 0 <= v < g.n or rotation[v] is not None:
            raise GraphError(f"bad or repeated rotation vertex {v}")
        order = []
        for i in ids:
            if not 0 <= i < len(edges) or v not in edges[i]:
                raise GraphError(f"edge index {i} is not incident to {v}")
            a, b = edges[i]
            order.append(b if a == v else a)
        rotation[v] = tuple(order)
    if any(r is None for r in rotation):
        raise GraphError("missing rotation line")
    return EmbeddedGraph(g, tuple(rotation), signs or {})
