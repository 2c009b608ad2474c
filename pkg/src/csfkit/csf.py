"""Chromatic symmetric functions in the power-sum basis.

X_G is expanded by enumerating every edge subset S and crediting the type of
the spanning subgraph (V, S) with sign (-1)^|S|.  Coefficients are exact
Python ints, so equality checks are never approximate.  The enumeration is
capped (default 30 edges) and refuses oversized inputs instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ResourceLimitError
from .graph import Graph
from .partitions import Partition, parse_partition_key, partition_key

DEFAULT_MAX_EDGES = 30


@dataclass(frozen=True)
class PowerSumPolynomial:
    """Sparse map partition -> integer coefficient, homogeneous of ``degree``."""

    degree: int
    terms: dict[Partition, int]

    def coefficient(self, p: Partition) -> int:
        return self.terms.get(tuple(p), 0)

    def to_text(self) -> str:
        lines = [f"csf n={self.degree}"]
        for key in sorted(self.terms, reverse=True):
            lines.append(f"{partition_key(key)} {self.terms[key]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PowerSumPolynomial":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("csf n="):
            raise ValueError("missing 'csf n=<n>' header")
        try:
            n = int(lines[0][len("csf n="):])
        except ValueError:
            raise ValueError(f"malformed header {lines[0]!r}") from None
        terms: dict[Partition, int] = {}
        for ln in lines[1:]:
            key_text, _, coeff_text = ln.rpartition(" ")
            p = parse_partition_key(key_text)
            if sum(p) != n:
                raise ValueError(f"term {key_text!r} is not a partition of {n}")
            if p in terms:
                raise ValueError(f"duplicate term {key_text!r}")
            coeff = int(coeff_text)
            if coeff:
                terms[p] = coeff
        return cls(n, terms)


def _subset_type_terms(n: int, edges: tuple[tuple[int, int], ...],
                       lo: int, hi: int) -> dict[Partition, int]:
    """Signed type counts over subset masks in [lo, hi).

    Each mask gets a fresh union-find; disjoint mask ranges produce maps that
    merge by coefficient addition.
    """
    eu = [u for u, _ in edges]
    ev = [v for _, v in edges]
    terms: dict[Partition, int] = {}
    get = terms.get
    vrange = range(n)
    for mask in range(lo, hi):
        parent = list(vrange)
        size = [1] * n
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            i = low.bit_length() - 1
            u = eu[i]
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            v = ev[i]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u != v:
                if size[u] < size[v]:
                    u, v = v, u
                parent[v] = u
                size[u] += size[v]
        key = tuple(sorted((size[i] for i in vrange if parent[i] == i), reverse=True))
        if mask.bit_count() & 1:
            terms[key] = get(key, 0) - 1
        else:
            terms[key] = get(key, 0) + 1
    return terms


def chromatic_symmetric_function(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> PowerSumPolynomial:
    """Exact power-sum expansion of X_G by full edge-subset enumeration."""
    m = g.edge_count
    if m > max_edges:
        raise ResourceLimitError(
            f"graph has {m} edges, above the enumeration cap of {max_edges}"
        )
    terms = _subset_type_terms(g.vertex_count, g.edges, 0, 1 << m)
    return PowerSumPolynomial(g.vertex_count, {k: c for k, c in terms.items() if c})


def specialize(x: PowerSumPolynomial, k: int) -> int:
    """Evaluate at x_1 = ... = x_k = 1, rest 0: each p_j becomes k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(coeff * k ** len(p) for p, coeff in x.terms.items())


COLORING_WORK_LIMIT = 100_000_000


def count_proper_colorings(g: Graph, k: int) -> int:
    """Brute-force count of proper k-colorings (the Eq-by-definition oracle)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.vertex_count
    if n == 0:
        return 1
    if k == 0:
        return 0
    if k ** n > COLORING_WORK_LIMIT:
        raise ResourceLimitError(f"{k}^{n} colorings exceed the brute-force budget")
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(n)]
    colors = [0] * n

    def assign(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                total += assign(v + 1)
        return total

    return assign(0)


@dataclass(frozen=True)
class ExtractedReport:
    """Invariants recovered from coefficients of X_G alone."""

    vertex_count: int
    edge_count: int
    matching_counts: tuple[int, ...]
    s22: int  # spanning subgraphs that are two disjoint edges
    s3: int  # spanning subgraphs that are two adjacent edges
    sum_squared_degrees: int
    triangle_count: int


def extract_invariants(x: PowerSumPolynomial) -> ExtractedReport:
    """Read vertex/edge/matching counts, sum of squared degrees and the
    triangle count off the coefficient map.

    Uses: coefficient of (1^n) is +1; of (2,1^(n-2)) is -#E; of
    (2^k,1^(n-2k)) is (-1)^k times the k-matching count; of (2,2,1^(n-4)) is
    the disjoint-edge-pair count; adjacent pairs then follow from C(#E, 2),
    which gives the degree-square sum; the (3,1^(n-3)) coefficient is the
    adjacent-pair count minus the triangle count.
    """
    n = x.degree
    ones = (1,) * n
    if x.coefficient(ones) != 1:
        raise ValueError("not a chromatic symmetric function: coefficient of (1^n) is not +1")
    edge_count = abs(x.coefficient((2,) + (1,) * (n - 2))) if n >= 2 else 0
    matchings: list[int] = []
    for k in range(1, n // 2 + 1):
        matchings.append(abs(x.coefficient((2,) * k + (1,) * (n - 2 * k))))
    while matchings and matchings[-1] == 0:
        matchings.pop()
    s22 = x.coefficient((2, 2) + (1,) * (n - 4)) if n >= 4 else 0
    s3 = comb(edge_count, 2) - s22
    sum_sq = 2 * s3 + 2 * edge_count
    tri = s3 - (x.coefficient((3,) + (1,) * (n - 3)) if n >= 3 else 0)
    return ExtractedReport(
        vertex_count=n,
        edge_count=edge_count,
        matching_counts=tuple(matchings),
        s22=s22,
        s3=s3,
        sum_squared_degrees=sum_sq,
        triangle_count=tri,
    )


def csf_equal(a: PowerSumPolynomial, b: PowerSumPolynomial) -> bool:
    """Exact equality: same degree and identical term maps."""
    return a.degree == b.degree and a.terms == b.terms
