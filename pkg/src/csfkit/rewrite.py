"""Rewriting rules that express X_G through graphs with other edge sets.

A triangle can be erased two ways (one term per deleted edge, minus the
double deletion, or the doubled base-edge deletion), and an open wedge can
be traded for its closing edge.  Each rule returns a formal integer
combination of graphs on the same vertex set whose signed CSF sum equals
X_G exactly; ``combination_csf`` evaluates that sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .csf import DEFAULT_MAX_EDGES, PowerSumPolynomial, chromatic_symmetric_function
from .graph import Graph
from .partitions import Partition


@dataclass(frozen=True)
class GraphCombination:
    """Formal sum of coefficient-weighted graphs; zero terms are dropped."""

    terms: tuple[tuple[int, Graph], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((c, g) for c, g in self.terms if c != 0))


def _triangle_vertices(g: Graph, e1: int, e2: int, e3: int) -> tuple[int, int, int]:
    """The vertices (v, v1, v2) with e1 = v-v1, e2 = v-v2, e3 = v1-v2."""
    if len({e1, e2, e3}) != 3:
        raise ValueError("triangle rule needs three distinct edge indices")
    for i in (e1, e2, e3):
        if not 0 <= i < g.edge_count:
            raise IndexError(f"edge index {i} out of range")
    a, b, c = g.edges[e1], g.edges[e2], g.edges[e3]
    # Three distinct edges on three vertices are exactly a triangle.
    if len(set(a) | set(b) | set(c)) != 3:
        raise ValueError(f"edges {e1}, {e2}, {e3} do not form a triangle")
    v = (set(a) & set(b)).pop()
    v1 = (set(a) - {v}).pop()
    v2 = (set(b) - {v}).pop()
    return v, v1, v2


def triangle_split(g: Graph, e1: int, e2: int, e3: int) -> GraphCombination:
    """Erase a triangle: X_G = X_{G-e1} + X_{G-e2} - X_{G-e1-e2}."""
    _triangle_vertices(g, e1, e2, e3)
    return GraphCombination((
        (1, g.with_edges_removed([e1])),
        (1, g.with_edges_removed([e2])),
        (-1, g.with_edges_removed([e1, e2])),
    ))


def path_split(g: Graph, e1: int, e2: int) -> GraphCombination:
    """Trade a wedge for its missing closing edge.

    With e1 = v-v1 and e2 = v-v2 sharing only v and v1-v2 absent,
    X_G = X_{(G-e1)+v1v2} + X_{G-e2} - X_{(G-e1-e2)+v1v2}.
    """
    if e1 == e2:
        raise ValueError("path rule needs two distinct edge indices")
    for i in (e1, e2):
        if not 0 <= i < g.edge_count:
            raise IndexError(f"edge index {i} out of range")
    a, b = g.edges[e1], g.edges[e2]
    shared = set(a) & set(b)
    if len(shared) != 1:
        raise ValueError(f"edges {e1} and {e2} do not share exactly one endpoint")
    v = shared.pop()
    v1 = a[0] if a[1] == v else a[1]
    v2 = b[0] if b[1] == v else b[1]
    if g.has_edge(v1, v2):
        raise ValueError(f"closing edge ({v1}, {v2}) is already present")
    return GraphCombination((
        (1, g.with_edges_removed([e1]).with_edge_added(v1, v2)),
        (1, g.with_edges_removed([e2])),
        (-1, g.with_edges_removed([e1, e2]).with_edge_added(v1, v2)),
    ))


def wedge_split(g: Graph, e1: int, e2: int, e3: int) -> GraphCombination:
    """Erase a triangle into wedges:
    X_G = 2 X_{G-e3} + X_{G-e1-e2} - X_{G-e2-e3} - X_{G-e1-e3}."""
    _triangle_vertices(g, e1, e2, e3)
    return GraphCombination((
        (2, g.with_edges_removed([e3])),
        (1, g.with_edges_removed([e1, e2])),
        (-1, g.with_edges_removed([e2, e3])),
        (-1, g.with_edges_removed([e1, e3])),
    ))


def combination_csf(c: GraphCombination,
                    max_edges: int = DEFAULT_MAX_EDGES) -> PowerSumPolynomial:
    """Signed sum of member CSFs; members must share one vertex count."""
    if not c.terms:
        raise ValueError("empty combination has no well-defined degree")
    n = c.terms[0][1].vertex_count
    if any(g.vertex_count != n for _, g in c.terms):
        raise ValueError("combination mixes vertex counts")
    total: dict[Partition, int] = {}
    for coeff, g in c.terms:
        x = chromatic_symmetric_function(g, max_edges=max_edges)
        for p, value in x.terms.items():
            total[p] = total.get(p, 0) + coeff * value
    return PowerSumPolynomial(n, {p: v for p, v in total.items() if v})
