"""Simple undirected graphs with indexed edge lists.

Edges are stored as (u, v) pairs with u < v, and the position of a pair in
the edge tuple is its stable index: rewriting rules and theta tables refer
to edges by these indices.  Vertices are 0..vertex_count-1; disconnected
graphs and isolated vertices are legal everywhere except the tree- and
unicyclic-specific operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphParseError, NotATreeError
from .partitions import Partition


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range or not u < v")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(nbrs) for nbrs in adj)

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_index

    def index_of(self, u: int, v: int) -> int:
        """Edge index of the pair (u, v); KeyError if absent."""
        if u > v:
            u, v = v, u
        return self._edge_index[(u, v)]

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def with_edges_removed(self, indices: Iterable[int]) -> "Graph":
        """Copy without the given edge indices; survivors keep their order."""
        drop = set(indices)
        for i in drop:
            if not 0 <= i < len(self.edges):
                raise IndexError(f"edge index {i} out of range")
        kept = tuple(e for i, e in enumerate(self.edges) if i not in drop)
        return Graph(self.vertex_count, kept)

    def with_edge_added(self, u: int, v: int) -> "Graph":
        """Copy with (u, v) appended as the last edge index."""
        if u > v:
            u, v = v, u
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        return Graph(self.vertex_count, self.edges + ((u, v),))

    def to_text(self) -> str:
        lines = [f"{self.vertex_count} {len(self.edges)}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: "n m" header, then m lines "u v", u < v.

    Edge index equals zero-based line order.  Errors name the 1-based line.
    """
    lines = text.splitlines()
    if not lines:
        raise GraphParseError("line 1: missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise GraphParseError(f"line 1: expected 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    body = [ln for ln in lines[1:]]
    if len(body) < m:
        raise GraphParseError(f"line {len(lines) + 1}: expected {m} edge lines, got {len(body)}")
    if len(body) > m and any(ln.strip() for ln in body[m:]):
        raise GraphParseError(f"line {m + 2}: trailing content after {m} edges")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for k, ln in enumerate(body[:m]):
        lineno = k + 2
        toks = ln.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise GraphParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise GraphParseError(f"line {lineno}: endpoints must satisfy u < v")
        if v >= n:
            raise GraphParseError(f"line {lineno}: vertex {v} out of range for n={n}")
        if (u, v) in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# Components and subset types


def _component_sizes(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Orders of the components of the spanning subgraph with these edges."""
    parent = list(range(n))
    size = [1] * n
    for u, v in edges:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            if size[u] < size[v]:
                u, v = v, u
            parent[v] = u
            size[u] += size[v]
    return sorted((size[i] for i in range(n) if parent[i] == i), reverse=True)


def pi_type(g: Graph, edge_indices: Iterable[int]) -> Partition:
    """Type of an edge subset: component orders of (V, S), largest first."""
    chosen = []
    for i in edge_indices:
        if not 0 <= i < g.edge_count:
            raise IndexError(f"edge index {i} out of range")
        chosen.append(g.edges[i])
    return tuple(_component_sizes(g.vertex_count, chosen))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, in first-vertex order."""
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or len(connected_components(g)) == 1


def is_forest(g: Graph) -> bool:
    """No cycles: every component has one more vertex than it has edges."""
    return len(connected_components(g)) == g.vertex_count - g.edge_count


def is_tree(g: Graph) -> bool:
    return g.vertex_count >= 1 and g.edge_count == g.vertex_count - 1 and is_connected(g)


def require_tree(g: Graph, what: str = "operation") -> None:
    if not is_tree(g):
        raise NotATreeError(f"{what} requires a tree (connected and acyclic)")


# ---------------------------------------------------------------------------
# Structural invariants counted directly from the graph


@dataclass(frozen=True)
class StructuralReport:
    vertex_count: int
    edge_count: int
    degree_sequence: tuple[int, ...]
    sum_squared_degrees: int
    triangle_count: int
    girth: int | None  # None encodes infinite girth (acyclic graph)
    matching_counts: tuple[int, ...]  # entry k-1 = number of k-edge matchings


def _count_triangles(g: Graph) -> int:
    nbr = [set(a) for a in g.adjacency]
    total = 0
    for u, v in g.edges:
        total += len(nbr[u] & nbr[v])
    return total // 3


def _girth(g: Graph) -> int | None:
    """Length of a shortest cycle via BFS from every start, None if acyclic."""
    n = g.vertex_count
    adj = g.adjacency
    best: int | None = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        for u, v in g.edges:
            if dist[u] < 0 or dist[v] < 0:
                continue
            if parent[u] == v or parent[v] == u:
                continue  # BFS tree edge, no cycle here
            cand = dist[u] + dist[v] + 1
            if best is None or cand < best:
                best = cand
    return best


def _matching_counts(g: Graph) -> tuple[int, ...]:
    """counts[k-1] = number of k-edge matchings, by recursive enumeration."""
    edges = g.edges
    m = len(edges)
    counts: list[int] = []

    def extend(start: int, used: int, size: int) -> None:
        for j in range(start, m):
            u, v = edges[j]
            bits = (1 << u) | (1 << v)
            if used & bits:
                continue
            if size == len(counts):
                counts.append(0)
            counts[size] += 1
            extend(j + 1, used | bits, size + 1)

    extend(0, 0, 0)
    return tuple(counts)


def structural_report(g: Graph) -> StructuralReport:
    degs = sorted(g.degrees(), reverse=True)
    return StructuralReport(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        degree_sequence=tuple(degs),
        sum_squared_degrees=sum(d * d for d in degs),
        triangle_count=_count_triangles(g),
        girth=_girth(g),
        matching_counts=_matching_counts(g),
    )


# ---------------------------------------------------------------------------
# Trees: weights, centroids, cycle statistics of unicyclic graphs


def vertex_weights(t: Graph) -> list[int]:
    """weight(v) = largest component order of T - v (0 for the 1-vertex tree)."""
    require_tree(t, "vertex_weights")
    n = t.vertex_count
    adj = t.adjacency
    weights = []
    for v in range(n):
        best = 0
        seen = [False] * n
        seen[v] = True
        for start in adj[v]:
            if seen[start]:
                continue
            count = 1
            seen[start] = True
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        count += 1
                        queue.append(y)
            best = max(best, count)
        weights.append(best)
    return weights


def centroid(t: Graph) -> tuple[int, ...]:
    """Vertices of minimum weight: one vertex, or two adjacent vertices."""
    weights = vertex_weights(t)
    low = min(weights)
    verts = tuple(v for v, w in enumerate(weights) if w == low)
    assert len(verts) in (1, 2)
    return verts


@dataclass(frozen=True)
class CycleStats:
    cycle_length: int  # p
    leaf_count: int  # L
    degree2_on_cycle: int  # I


def _cycle_vertices(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a connected unicyclic graph."""
    deg = g.degrees()
    alive = [True] * g.vertex_count
    queue = deque(v for v in range(g.vertex_count) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return [v for v in range(g.vertex_count) if alive[v]]


def cycle_stats(g: Graph) -> CycleStats:
    if g.vertex_count != g.edge_count or not is_connected(g):
        raise ValueError("cycle_stats requires a connected unicyclic graph")
    cyc = _cycle_vertices(g)
    deg = g.degrees()
    return CycleStats(
        cycle_length=len(cyc),
        leaf_count=sum(1 for d in deg if d == 1),
        degree2_on_cycle=sum(1 for v in cyc if deg[v] == 2),
    )


# ---------------------------------------------------------------------------
# Canonical codes and free-tree enumeration


def rooted_code(t: Graph, root: int) -> str:
    """Canonical nested-parenthesis encoding of a rooted tree."""
    require_tree(t, "rooted_code")
    adj = t.adjacency

    def code(v: int, parent: int) -> str:
        children = sorted(code(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(children) + ")"

    return code(root, -1)


def _tree_centers(t: Graph) -> list[int]:
    """Middle vertex or vertex pair of the longest paths, by leaf stripping."""
    n = t.vertex_count
    if n == 1:
        return [0]
    deg = t.degrees()
    alive = n
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] == 1]
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for w in t.adjacency[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(n) if not removed[v]]


def canonical_tree_code(t: Graph) -> str:
    """Equal codes exactly for isomorphic trees (center-rooted encoding)."""
    require_tree(t, "canonical_tree_code")
    return min(rooted_code(t, c) for c in _tree_centers(t))


def _level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All canonical level sequences of rooted trees on n vertices.

    Beyer-Hedetniemi successor scan: start from the path (1, 2, ..., n) and
    repeatedly regenerate the tail from the last level > 2, which emits every
    rooted tree exactly once in decreasing lexicographic order.
    """
    levels = list(range(1, n + 1))
    yield tuple(levels)
    while True:
        p = max((i for i in range(n) if levels[i] > 2), default=-1)
        if p < 0:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]
        yield tuple(levels)


def tree_from_levels(levels: tuple[int, ...]) -> Graph:
    """Rooted level sequence -> tree; parent of i is the last shallower vertex."""
    n = len(levels)
    last_at = {levels[0]: 0}
    edges = []
    for i in range(1, n):
        parent = last_at[levels[i] - 1]
        edges.append((parent, i))
        last_at[levels[i]] = i
    return Graph(n, tuple(edges))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    seen: set[str] = set()
    for levels in _level_sequences(n):
        t = tree_from_levels(levels)
        code = canonical_tree_code(t)
        if code not in seen:
            seen.add(code)
            yield t
