"""Simple undirected graphs on dense integer vertex ids.

Vertex sets are exposed as ``frozenset`` objects; internally most routines
work on integer bitmasks, which keeps subset searches cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph input or violated precondition."""


class SizeLimitError(GraphError):
    """Instance exceeds an enforced solver size limit."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise GraphError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphError(f"asymmetric or out-of-range edge {v}-{u}")
        object.__setattr__(self, "_masks", tuple(mask_of(nb) for nb in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def nbr_mask(self, v: int) -> int:
        return self._masks[v]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def induced_edges(self, vertices: Iterable[int]) -> list[tuple[int, int]]:
        keep = mask_of(vertices)
        return [(u, v) for u, v in self.edges() if keep >> u & 1 and keep >> v & 1]

    def is_regular(self, k: int) -> bool:
        return all(len(nb) == k for nb in self.adj)


@dataclass(frozen=True)
class Tree:
    """A tree on ``vertices`` stored as a parent map; the root maps to ``-1``."""

    vertices: frozenset[int]
    parent: dict[int, int]

    @property
    def root(self) -> int:
        return next(v for v, p in self.parent.items() if p < 0)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in self.parent.items() if p >= 0)

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges():
            deg[u] += 1
            deg[v] += 1
        return deg

    def leaves(self) -> frozenset[int]:
        """Vertices of tree degree one.  A one-vertex tree has no leaves."""
        return frozenset(v for v, d in self.degrees().items() if d == 1)

    def depth(self) -> dict[int, int]:
        children: dict[int, list[int]] = {v: [] for v in self.vertices}
        for v, p in self.parent.items():
            if p >= 0:
                children[p].append(v)
        depth = {self.root: 0}
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            for c in children[v]:
                depth[c] = depth[v] + 1
                queue.append(c)
        return depth

    def is_valid(self) -> bool:
        if set(self.parent) != set(self.vertices) or not self.vertices:
            return False
        roots = [v for v, p in self.parent.items() if p < 0]
        if len(roots) != 1:
            return False
        if any(p >= 0 and p not in self.vertices for p in self.parent.values()):
            return False
        return len(self.depth()) == len(self.vertices)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]], root: int | None = None) -> "Tree":
        verts = frozenset(vertices)
        nbrs: dict[int, list[int]] = {v: [] for v in verts}
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        root = min(verts) if root is None else root
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(nbrs[v]):
                if u not in parent:
                    parent[u] = v
                    queue.append(u)
        if len(parent) != len(verts):
            raise GraphError("edge list does not span a connected vertex set")
        return cls(verts, parent)


def _reach(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.nbr_mask(v)
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(g: Graph, removed: int) -> bool:
    rest = g.full_mask & ~removed
    if not rest:
        return False
    start = (rest & -rest).bit_length() - 1
    return _reach(g, start, rest) == rest


def is_connected(g: Graph, removed: Iterable[int] = ()) -> bool:
    """True iff ``g - removed`` is nonempty and connected."""
    return is_connected_mask(g, mask_of(removed))


def component_masks(g: Graph, removed: int = 0) -> list[int]:
    rest = g.full_mask & ~removed
    comps = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _reach(g, start, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def components_after_removal(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g - removed``, ordered by smallest member."""
    return [set_of(c) for c in component_masks(g, mask_of(removed))]


def _max_disjoint_paths(g: Graph, s: int, t: int, cap: int) -> int:
    # Unit vertex capacities via split nodes: v_in = 2v, v_out = 2v + 1.
    res: dict[int, dict[int, int]] = {}

    def add(a: int, b: int) -> None:
        res.setdefault(a, {})[b] = res.get(a, {}).get(b, 0) + 1
        res.setdefault(b, {}).setdefault(a, 0)

    for v in range(g.n):
        if v not in (s, t):
            add(2 * v, 2 * v + 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b, c in res[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            res[a][b] -= 1
            res[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity via unit-capacity max flow (Menger).

    Complete graphs return ``n - 1``; disconnected graphs return 0.
    """
    if g.n <= 1:
        raise GraphError("vertex connectivity needs at least two vertices")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.n - 1
    # Some minimum cut avoids one of the first best+1 vertices; trying each of
    # those as a source against every non-neighbour covers all minimum cuts.
    for i in range(g.n):
        if i > best:
            break
        for t in range(i + 1, g.n):
            if not g.has_edge(i, t):
                best = min(best, _max_disjoint_paths(g, i, t, best))
    return best


def spanning_tree_any(g: Graph) -> Tree:
    """Breadth-first spanning tree from vertex 0, neighbours in ascending order."""
    if g.n < 1:
        raise GraphError("empty graph has no spanning tree")
    parent = {0: -1}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    if len(parent) != g.n:
        raise GraphError("graph is disconnected")
    return Tree(g.vertices, parent)


def tree_bipartition(t: Tree) -> tuple[frozenset[int], frozenset[int]]:
    """Depth-parity 2-colouring; the first class holds the smallest vertex id."""
    depth = t.depth()
    even = frozenset(v for v, d in depth.items() if d % 2 == 0)
    odd = frozenset(t.vertices - even)
    if min(t.vertices) in even:
        return even, odd
    return odd, even


ORACLE_MAX_N = 8


def spanning_trees(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Enumerate every spanning tree of ``g`` as an edge list.

    Branches on including/excluding one edge at a time; an edge is only
    excluded when the remaining edges still connect the graph, so every leaf
    of the recursion yields a tree.
    """
    if g.n == 1:
        yield []
        return
    if not is_connected(g):
        return

    def find(comp: list[int], x: int) -> int:
        while comp[x] != x:
            x = comp[x]
        return x

    def connects(comp: list[int], avail: Sequence[tuple[int, int]]) -> bool:
        comp = comp[:]
        k = len({find(comp, v) for v in range(g.n)})
        for u, v in avail:
            a, b = find(comp, u), find(comp, v)
            if a != b:
                comp[a] = b
                k -= 1
        return k == 1

    def rec(chosen: list[tuple[int, int]], comp: list[int], avail: list[tuple[int, int]]):
        if len(chosen) == g.n - 1:
            yield list(chosen)
            return
        avail = [e for e in avail if find(comp, e[0]) != find(comp, e[1])]
        e, rest = avail[0], avail[1:]
        a, b = find(comp, e[0]), find(comp, e[1])
        merged = comp[:]
        merged[a] = b
        chosen.append(e)
        yield from rec(chosen, merged, rest)
        chosen.pop()
        if connects(comp, rest):
            yield from rec(chosen, comp, rest)

    yield from rec([], list(range(g.n)), g.edges())


def oracle_leaf_sets(g: Graph) -> set[int]:
    """Distinct leaf-set bitmasks over all spanning trees (n <= 8)."""
    if not 2 <= g.n <= ORACLE_MAX_N:
        raise SizeLimitError(f"spanning-tree oracle limited to 2 <= n <= {ORACLE_MAX_N}")
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    found = set()
    for tree in spanning_trees(g):
        deg = [0] * g.n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        found.add(mask_of(v for v in range(g.n) if deg[v] == 1))
    return found


def oracle_max_leaf_in_R(g: Graph, R: Iterable[int], leaf_sets: set[int] | None = None) -> int:
    """max over spanning trees T of |leaves(T) & R| by exhaustive enumeration.

    Test oracle only.  ``leaf_sets`` may be passed to reuse one enumeration
    across many ``R``.
    """
    rmask = mask_of(R)
    if not rmask:
        raise GraphError("R must be nonempty")
    if leaf_sets is None:
        leaf_sets = oracle_leaf_sets(g)
    return max((L & rmask).bit_count() for L in leaf_sets)


# -- text format -------------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``."""
    graph, rest = _parse_graph_lines(_content_lines(text))
    if rest:
        raise GraphError(f"unexpected trailing content: {rest[0]!r}")
    return graph


def _parse_graph_lines(lines: list[str]) -> tuple[Graph, list[str]]:
    if not lines:
        raise GraphError("missing header line")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise GraphError(f"bad header {lines[0]!r}") from None
    if n < 0 or m < 0 or len(lines) < m + 1:
        raise GraphError("header does not match edge lines")
    edges = []
    for line in lines[1 : m + 1]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not 0 <= u < v < n:
            raise GraphError(f"edge {u} {v} must satisfy 0 <= u < v < n")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise GraphError("parallel edges are not allowed")
    return Graph.from_edges(n, edges), lines[m + 1 :]


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
