"""Batch command-line surface.

Subcommands: csf, equal, decompose, make-pair, theta, reconstruct, search.
Exit codes: 0 success (or EQUAL), 1 polynomials differ, 2 usage error,
3 data error, 4 resource limit.  All stdout output is deterministic;
timing diagnostics go to stderr.  CSFKIT_MAX_EDGES overrides the subset
enumeration cap.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .csf import DEFAULT_MAX_EDGES, chromatic_symmetric_function, specialize
from .errors import CsfkitError, ResourceLimitError
from .graph import Graph, _cycle_vertices, enumerate_trees, parse_graph
from .pairgen import RootedTree, glue_rooted_trees
from .partitions import partition_key
from .rewrite import GraphCombination, path_split, triangle_split, wedge_split
from .treedata import ThetaTable, reconstruct_from_pairs, reconstruct_from_theta, theta_tables


def _enumeration_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("CSFKIT_MAX_EDGES")
    return int(env) if env else DEFAULT_MAX_EDGES


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# csf / equal


def cmd_csf(args) -> int:
    g = _load_graph(args.input)
    x = chromatic_symmetric_function(g, max_edges=_enumeration_cap())
    if args.chromatic is not None:
        print(specialize(x, args.chromatic))
    else:
        print(x.to_text(), end="")
    return 0


def cmd_equal(args) -> int:
    cap = _enumeration_cap()
    xa = chromatic_symmetric_function(_load_graph(args.file_a), max_edges=cap)
    xb = chromatic_symmetric_function(_load_graph(args.file_b), max_edges=cap)
    if xa.degree == xb.degree and xa.terms == xb.terms:
        print("EQUAL")
        return 0
    for key in sorted(set(xa.terms) | set(xb.terms), reverse=True):
        ca = xa.terms.get(key, 0)
        cb = xb.terms.get(key, 0)
        if ca != cb:
            print(f"DIFFER at {partition_key(key)}: {ca} vs {cb}")
            return 1
    print(f"DIFFER at degree: {xa.degree} vs {xb.degree}")
    return 1


# ---------------------------------------------------------------------------
# decompose


def _first_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lowest-index (e1, e2, e3) forming a triangle, scanning edge pairs."""
    for i, j in combinations(range(g.edge_count), 2):
        a, b = g.edges[i], g.edges[j]
        shared = set(a) & set(b)
        if len(shared) != 1:
            continue
        v1 = (set(a) - shared).pop()
        v2 = (set(b) - shared).pop()
        if g.has_edge(v1, v2):
            return i, j, g.index_of(v1, v2)
    return None


def _reduce_triangle_free(g: Graph) -> GraphCombination:
    """Best-effort strategy: erase triangles until none remain.

    Each rewrite replaces a graph by graphs with strictly fewer edges, so
    this terminates; the result is triangle-free but not necessarily a
    forest combination.
    """
    pending: list[tuple[int, Graph]] = [(1, g)]
    settled: dict[tuple[int, frozenset], tuple[int, Graph]] = {}
    while pending:
        coeff, h = pending.pop()
        tri = _first_triangle(h)
        if tri is None:
            key = (h.vertex_count, frozenset(h.edges))
            old_coeff = settled[key][0] if key in settled else 0
            settled[key] = (old_coeff + coeff, h)
            continue
        for sub_coeff, sub in triangle_split(h, *tri).terms:
            pending.append((coeff * sub_coeff, sub))
    terms = [(c, h) for c, h in settled.values() if c]
    terms.sort(key=lambda item: (-item[1].edge_count, item[1].edges))
    return GraphCombination(tuple(terms))


def cmd_decompose(args) -> int:
    g = _load_graph(args.input)
    if args.rule == "reduce":
        if args.edges is not None:
            raise ValueError("--edges is not used with --rule reduce")
        combo = _reduce_triangle_free(g)
    else:
        if args.edges is None:
            raise ValueError(f"--rule {args.rule} requires --edges")
        indices = [int(tok) for tok in args.edges.split(",")]
        want = 2 if args.rule == "path" else 3
        if len(indices) != want:
            raise ValueError(f"--rule {args.rule} takes {want} edge indices")
        rule = {"triangle": triangle_split, "path": path_split, "wedge": wedge_split}[args.rule]
        combo = rule(g, *indices)
    for i, (coeff, h) in enumerate(combo.terms):
        path = f"{args.out}{i}.graph"
        _write_text(path, h.to_text())
        print(f"{coeff} {path}")
    return 0


# ---------------------------------------------------------------------------
# make-pair / theta / reconstruct


def cmd_make_pair(args) -> int:
    t1 = RootedTree(_load_graph(args.tree1), args.root1)
    t2 = RootedTree(_load_graph(args.tree2), args.root2)
    h, j = glue_rooted_trees(t1, t2)
    path_h = f"{args.out}_h.graph"
    path_j = f"{args.out}_j.graph"
    _write_text(path_h, h.to_text())
    _write_text(path_j, j.to_text())
    cap = _enumeration_cap()
    xh = chromatic_symmetric_function(h, max_edges=cap)
    xj = chromatic_symmetric_function(j, max_edges=cap)
    if xh.degree != xj.degree or xh.terms != xj.terms:
        raise AssertionError("glued pair disagrees; this is a bug")
    digest = hashlib.sha256(xh.to_text().encode("ascii")).hexdigest()
    print(path_h)
    print(path_j)
    print(f"csf-sha256 {digest}")
    return 0


def cmd_theta(args) -> int:
    tbl = theta_tables(_load_graph(args.input))
    print(tbl.to_text(), end="")
    return 0


def cmd_reconstruct(args) -> int:
    with open(args.input, "r", encoding="ascii") as fh:
        tbl = ThetaTable.from_text(fh.read())
    if args.pairs_only:
        stripped = ThetaTable(n=tbl.n, edge_labels=tbl.edge_labels,
                              singletons={}, pairs=dict(tbl.pairs))
        tree, _ = reconstruct_from_pairs(stripped)
    else:
        tree, _ = reconstruct_from_theta(tbl)
    _write_text(args.out, tree.to_text())
    print("CONSISTENT")
    return 0


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class CollisionReport:
    n: int
    graph_class: str
    graph_count: int
    groups: tuple[tuple[str, ...], ...]
    elapsed_seconds: float


def _graph_line(g: Graph) -> str:
    body = " ".join(f"{u}-{v}" for u, v in g.edges)
    return f"{g.vertex_count} {g.edge_count} {body}".rstrip()


def _pendant_code(g: Graph, root: int, blocked: set[int]) -> str:
    children = sorted(
        _pendant_code(g, w, blocked | {root}) for w in g.adjacency[root]
        if w not in blocked
    )
    return "(" + "".join(children) + ")"


def unicyclic_canonical_key(g: Graph) -> tuple:
    """Isomorphism-complete key for connected unicyclic graphs.

    The unique cycle is read as a circular sequence of canonical codes of
    the trees hanging at each cycle vertex; the key is the minimum of that
    sequence over both rotations and reflection.
    """
    cyc = _cycle_vertices(g)
    cyc_set = set(cyc)
    order = [cyc[0]]
    prev = -1
    while len(order) < len(cyc):
        nbrs = [w for w in g.adjacency[order[-1]] if w in cyc_set and w != prev]
        prev = order[-1]
        order.append(min(nbrs))
    codes = [_pendant_code(g, c, cyc_set - {c}) for c in order]
    best = None
    for seq in (codes, codes[::-1]):
        for shift in range(len(seq)):
            cand = tuple(seq[shift:] + seq[:shift])
            if best is None or cand < best:
                best = cand
    return (len(cyc), best)


def _unicyclic_representatives(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected unicyclic graphs."""
    seen: set[tuple] = set()
    for t in enumerate_trees(n):
        for u, v in combinations(range(n), 2):
            if t.has_edge(u, v):
                continue
            g = t.with_edge_added(u, v)
            key = unicyclic_canonical_key(g)
            if key not in seen:
                seen.add(key)
                yield g


def run_search(n: int, graph_class: str, max_edges: int) -> CollisionReport:
    start = time.monotonic()
    needed = n - 1 if graph_class == "tree" else n
    if needed > max_edges:
        raise ResourceLimitError(
            f"{graph_class} search at n={n} needs {needed}-edge enumerations, cap is {max_edges}"
        )
    if graph_class == "tree":
        graphs = list(enumerate_trees(n))
    else:
        graphs = list(_unicyclic_representatives(n))
    buckets: dict[str, list[Graph]] = {}
    for g in graphs:
        fingerprint = chromatic_symmetric_function(g, max_edges=max_edges).to_text()
        buckets.setdefault(fingerprint, []).append(g)
    groups = tuple(
        tuple(_graph_line(g) for g in members)
        for members in buckets.values()
        if len(members) >= 2
    )
    return CollisionReport(
        n=n,
        graph_class=graph_class,
        graph_count=len(graphs),
        groups=groups,
        elapsed_seconds=time.monotonic() - start,
    )


def cmd_search(args) -> int:
    report = run_search(args.n, args.graph_class, _enumeration_cap(args.max_edges))
    print(f"search class={report.graph_class} n={report.n}")
    print(f"graphs={report.graph_count}")
    print(f"collision-groups={len(report.groups)}")
    for i, group in enumerate(report.groups, start=1):
        print(f"group {i}: {len(group)} members")
        for line in group:
            print(f"  {line}")
    print(f"elapsed {report.elapsed_seconds:.2f}s", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csfkit",
        description="Exact chromatic symmetric function toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("csf", help="power-sum expansion or chromatic polynomial value")
    p.add_argument("input", help="edge-list file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--poly", action="store_true", help="print the polynomial (default)")
    mode.add_argument("--chromatic", type=int, metavar="K", help="print the k-coloring count")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("equal", help="compare the CSFs of two graphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("decompose", help="apply a rewriting rule at named edge indices")
    p.add_argument("input")
    p.add_argument("--rule", required=True, choices=["triangle", "path", "wedge", "reduce"])
    p.add_argument("--edges", help="comma-separated edge indices (not with reduce)")
    p.add_argument("--out", required=True, help="output path prefix for term files")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("make-pair", help="glue two rooted trees into an equal-CSF pair")
    p.add_argument("tree1")
    p.add_argument("root1", type=int)
    p.add_argument("tree2")
    p.add_argument("root2", type=int)
    p.add_argument("--out", required=True, help="output path prefix (_h/_j files)")
    p.set_defaults(func=cmd_make_pair)

    p = sub.add_parser("theta", help="print singleton and pair cut data of a tree")
    p.add_argument("input")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("reconstruct", help="rebuild a single-centroid tree from cut data")
    p.add_argument("input", help="theta table file")
    p.add_argument("--pairs-only", action="store_true",
                   help="ignore singleton lines and reconstruct from pairs")
    p.add_argument("--out", required=True, help="output edge-list file")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("search", help="enumerate a class and group equal-CSF graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="graph_class", required=True,
                   choices=["tree", "unicyclic"])
    p.add_argument("--max-edges", type=int, default=None)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (CsfkitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
