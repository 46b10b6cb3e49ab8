"""Simple graphs, rational-weighted graphs, and adjacency-matrix bridges."""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from gmpy2 import mpq

from .errors import NotAGraph, ShapeError
from .ratmath import RatMatrix, ZERO


class Graph:
    """Simple undirected unweighted graph: vertex count plus edge set.

    Vertices are 0..n-1; edges are stored as (u, v) pairs with u < v.
    Immutable after construction.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise ShapeError("negative vertex count")
        norm = set()
        for u, v in edges:
            if u == v:
                raise NotAGraph(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise NotAGraph(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: FrozenSet[Tuple[int, int]] = frozenset(norm)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree_sequence(self):
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def relabeled(self, perm) -> "Graph":
        """Apply a vertex relabeling: new vertex perm[v] takes old vertex v."""
        if sorted(perm) != list(range(self.n)):
            raise ShapeError("not a permutation")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.neighbors()
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def two_coloring(self) -> Optional[list]:
        """A 0/1 coloring with every edge bichromatic, or None (odd cycle).

        The lowest-index vertex of each connected component gets color 0.
        """
        adj = self.neighbors()
        color = [None] * self.n
        for start in range(self.n):
            if color[start] is not None:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if color[w] is None:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None


class WeightedGraph:
    """Undirected graph with exact rational weights; loops allowed.

    Weights are keyed by (u, v) with u <= v and are always nonzero.
    """

    __slots__ = ("n", "weights")

    def __init__(self, n: int, weights: Dict[Tuple[int, int], object]):
        if n < 0:
            raise ShapeError("negative vertex count")
        norm = {}
        for (u, v), w in weights.items():
            if not (0 <= u < n and 0 <= v < n):
                raise NotAGraph(f"edge ({u},{v}) out of range for n={n}")
            w = mpq(w)
            if w == 0:
                continue
            key = (u, v) if u <= v else (v, u)
            if key in norm and norm[key] != w:
                raise NotAGraph(f"conflicting weights for edge {key}")
            norm[key] = w
        self.n = n
        self.weights = norm

    def __eq__(self, other):
        return (
            isinstance(other, WeightedGraph)
            and self.n == other.n
            and self.weights == other.weights
        )

    def __repr__(self):
        body = ", ".join(f"{u}-{v}:{w}" for (u, v), w in sorted(self.weights.items()))
        return f"WeightedGraph(n={self.n}, {body})"

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.weights)

    def skeleton(self) -> Graph:
        """Unweighted support graph over the non-loop edges."""
        return Graph(self.n, (e for e in self.weights if e[0] != e[1]))

    def is_connected(self) -> bool:
        return self.skeleton().is_connected()

    @classmethod
    def from_graph(cls, g: Graph) -> "WeightedGraph":
        return cls(g.n, {e: 1 for e in g.edges})

    def equals_unit_graph(self, g: Graph) -> bool:
        """True iff this is exactly g: same n, same edges, all weights one."""
        return (
            self.n == g.n
            and not self.has_loops
            and set(self.weights) == set(g.edges)
            and all(w == 1 for w in self.weights.values())
        )


def adjacency(g: Graph) -> RatMatrix:
    """Symmetric 0/1 adjacency matrix with zero diagonal."""
    n = g.n
    e = [ZERO] * (n * n)
    one = mpq(1)
    for u, v in g.edges:
        e[u * n + v] = one
        e[v * n + u] = one
    return RatMatrix(n, n, e)


def weighted_adjacency(g: WeightedGraph) -> RatMatrix:
    n = g.n
    e = [ZERO] * (n * n)
    for (u, v), w in g.weights.items():
        e[u * n + v] = w
        e[v * n + u] = w
    return RatMatrix(n, n, e)


def graph_of(a: RatMatrix) -> Graph:
    """Inverse bridge of :func:`adjacency`; validates 0/1, symmetry, zero diagonal."""
    if not a.is_square():
        raise NotAGraph("adjacency matrix must be square")
    n = a.rows
    edges = []
    for i in range(n):
        if a.entry(i, i) != 0:
            raise NotAGraph(f"nonzero diagonal at {i}")
        for j in range(i + 1, n):
            x = a.entry(i, j)
            if x != a.entry(j, i):
                raise NotAGraph(f"asymmetric at ({i},{j})")
            if x == 1:
                edges.append((i, j))
            elif x != 0:
                raise NotAGraph(f"entry ({i},{j}) = {x} is not 0/1")
    return Graph(n, edges)


def weighted_graph_of(a: RatMatrix) -> WeightedGraph:
    """Weighted graph from any symmetric rational matrix; diagonal becomes loops."""
    if not a.is_symmetric():
        raise ShapeError("weighted adjacency must be symmetric")
    n = a.rows
    weights = {}
    for i in range(n):
        for j in range(i, n):
            x = a.entry(i, j)
            if x != 0:
                weights[(i, j)] = x
    return WeightedGraph(n, weights)


# -- named graphs ------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ShapeError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def fulvene_graph() -> Graph:
    """The 6-vertex fulvene hydrocarbon graph: a 5-cycle with one pendant vertex."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
