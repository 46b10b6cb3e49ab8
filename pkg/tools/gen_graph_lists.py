#!/usr/bin/env python3
"""Generate graph6 lists of all connected graphs on up to N vertices.

Every connected graph on n vertices has a non-cut vertex, so augmenting each
connected (n-1)-vertex graph with one new vertex joined to every nonempty
subset of old vertices reaches every isomorphism class. Candidates are
deduplicated by Weisfeiler-Lehman hash buckets refined with exact VF2
isomorphism checks.

Writes tests/data/graph{n}c.g6 (one canonical graph6 line per class, sorted)
and checks the class counts against the published sequence (OEIS A001349):
1, 1, 2, 6, 21, 112, 853, 11117.

Usage: python3 tools/gen_graph_lists.py [max_n] [outdir]
"""

import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mpgraph.graphio import write_graph6  # noqa: E402
from mpgraph.graphs import Graph  # noqa: E402

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def dedup_key(g: nx.Graph) -> str:
    return f"{g.number_of_edges()}:" + nx.weisfeiler_lehman_graph_hash(g, iterations=3)


def augment(graphs, n):
    """All connected n-vertex graphs from the connected (n-1)-vertex ones."""
    buckets = {}
    reps = []
    for base in graphs:
        old = list(base.nodes)
        for size in range(1, len(old) + 1):
            for subset in combinations(old, size):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in subset)
                key = dedup_key(g)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                reps.append(g)
    return reps


def to_graph6(g: nx.Graph) -> str:
    nodes = sorted(g.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    return write_graph6(Graph(len(nodes), ((index[u], index[v]) for u, v in g.edges)))


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    outdir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).resolve().parent.parent / "tests" / "data"
    outdir.mkdir(parents=True, exist_ok=True)

    level = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = augment(level, n)
        if n in EXPECTED and len(level) != EXPECTED[n]:
            raise SystemExit(f"n={n}: got {len(level)} classes, expected {EXPECTED[n]}")
        lines = sorted(to_graph6(g) for g in level)
        path = outdir / f"graph{n}c.g6"
        path.write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(level)} connected graphs -> {path}")


if __name__ == "__main__":
    main()
