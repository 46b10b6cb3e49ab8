"""Graph families with closed-form (pseudo-)inverses.

Builders for the star, the pendant-vertex graphs (k degree-one vertices
attached to every vertex of a base graph), the corona (k = 1) and the
pendant-path graphs (a path of length l attached to every vertex), together
with the closed-form block expressions for their inverses and the predicted
spectra of the bordered construction.

Vertex-ordering conventions are fixed so the block forms line up: pendant
vertices come first (k blocks of m, block j holding the j-th pendant of each
base vertex), base vertices last. Pendant paths are laid out level-major,
level 0 being the path vertex attached to the base.
"""

from __future__ import annotations

import math
from typing import List, Optional

from gmpy2 import mpq

from .errors import ShapeError, SingularMatrix
from .graphs import Graph, adjacency, path_graph
from .ratmath import RatMatrix, bareiss_det, block_matrix, inv_exact, kron
from .signability import pseudo_inverse_graph


def star(n: int) -> Graph:
    """The star on n + 1 vertices: leaves 0..n-1 all adjacent to hub n."""
    if n < 1:
        raise ShapeError("star needs at least one leaf")
    return Graph(n + 1, ((i, n) for i in range(n)))


def pendant_vertices(g_b: Graph, k: int) -> Graph:
    """Attach k pendant vertices to every vertex of g_b.

    Result has (k+1)*m vertices: pendant j of base vertex i is j*m + i,
    base vertex i becomes k*m + i, so the adjacency is [[0, K], [K^T, B]]
    with K a stack of k identity blocks.
    """
    if k < 1:
        raise ShapeError("k must be at least 1")
    m = g_b.n
    base = k * m
    edges = [(base + u, base + v) for u, v in g_b.edges]
    edges.extend((j * m + i, base + i) for j in range(k) for i in range(m))
    return Graph((k + 1) * m, edges)


def pendant_vertices_pinv(g_b: Graph, k: int) -> RatMatrix:
    """Closed-form pseudo-inverse of the pendant-vertex construction:

        (1/k^2) * [[ -ones(k,k) (x) B,  k K ], [ k K^T,  0 ]]

    Requires det(B) != 0.
    """
    if k < 1:
        raise ShapeError("k must be at least 1")
    b = adjacency(g_b)
    if bareiss_det(b) == 0:
        raise SingularMatrix("base adjacency must be invertible")
    m = g_b.n
    ones = RatMatrix.ones(k, k)
    top_left = -kron(ones, b)
    stack = block_matrix([[RatMatrix.identity(m)] for _ in range(k)])
    top_right = stack.scaled(k)
    bottom_right = RatMatrix.zeros(m, m)
    return block_matrix([[top_left, top_right], [top_right.T, bottom_right]]).scaled(
        mpq(1, k * k)
    )


def bordered_spectrum(g_b: Graph, k: int) -> List[float]:
    """Predicted eigenvalues of the pendant-vertex construction, ascending:
    (k-1)*m zeros plus (mu +- sqrt(mu^2 + 4k)) / 2 for each eigenvalue mu
    of the (invertible) base adjacency."""
    from .spectral import sym_eigenvalues

    if k < 1:
        raise ShapeError("k must be at least 1")
    b = adjacency(g_b)
    if bareiss_det(b) == 0:
        raise SingularMatrix("base adjacency must be invertible")
    out = [0.0] * ((k - 1) * g_b.n)
    for mu in sym_eigenvalues(b):
        root = math.sqrt(mu * mu + 4.0 * k)
        out.append((mu - root) / 2.0)
        out.append((mu + root) / 2.0)
    return sorted(out)


def pendant_paths(g_b: Graph, l: int) -> Graph:
    """Attach a pendant path of l vertices to every vertex of g_b.

    Result has (l+1)*m vertices, level-major: path level j of base vertex i
    is j*m + i (level 0 touches the base), base vertex i is l*m + i. The
    adjacency is [[path(l) (x) I, K], [K^T, B]] with K = e_0 (x) I.
    """
    if l < 1:
        raise ShapeError("l must be at least 1")
    m = g_b.n
    base = l * m
    edges = [(base + u, base + v) for u, v in g_b.edges]
    edges.extend((j * m + i, (j + 1) * m + i) for j in range(l - 1) for i in range(m))
    edges.extend((i, base + i) for i in range(m))
    return Graph((l + 1) * m, edges)


# closed-form inverse block patterns for pendant paths, l = 1..5; symbols
# are multiples of I, B or B^{-1}; rows/cols are path levels then the base
_I = "I"
_B = "B"
_BI = "Binv"
_PATTERNS = {
    1: [
        [(-1, _B), (1, _I)],
        [(1, _I), (0, _I)],
    ],
    2: [
        [(0, _I), (1, _I), (0, _I)],
        [(1, _I), (1, _BI), (-1, _BI)],
        [(0, _I), (-1, _BI), (1, _BI)],
    ],
    3: [
        [(-1, _B), (0, _I), (1, _B), (1, _I)],
        [(0, _I), (0, _I), (1, _I), (0, _I)],
        [(1, _B), (1, _I), (-1, _B), (-1, _I)],
        [(1, _I), (0, _I), (-1, _I), (0, _I)],
    ],
    4: [
        [(0, _I), (1, _I), (0, _I), (-1, _I), (0, _I)],
        [(1, _I), (1, _BI), (0, _I), (-1, _BI), (-1, _BI)],
        [(0, _I), (0, _I), (0, _I), (1, _I), (0, _I)],
        [(-1, _I), (-1, _BI), (1, _I), (1, _BI), (1, _BI)],
        [(0, _I), (-1, _BI), (0, _I), (1, _BI), (1, _BI)],
    ],
    5: [
        [(-1, _B), (0, _I), (1, _B), (0, _I), (-1, _B), (1, _I)],
        [(0, _I), (0, _I), (1, _I), (0, _I), (-1, _I), (0, _I)],
        [(1, _B), (1, _I), (-1, _B), (0, _I), (1, _B), (-1, _I)],
        [(0, _I), (0, _I), (0, _I), (0, _I), (1, _I), (0, _I)],
        [(-1, _B), (-1, _I), (1, _B), (1, _I), (-1, _B), (1, _I)],
        [(1, _I), (0, _I), (-1, _I), (0, _I), (1, _I), (0, _I)],
    ],
}

CLOSED_FORM_MAX_L = max(_PATTERNS)


def pendant_paths_inverse(g_b: Graph, l: int) -> RatMatrix:
    """Exact inverse of the pendant-path construction.

    For l <= 5 the inverse is assembled from the closed-form block patterns
    (entries are 0, +-I, +-B, +-B^{-1}); larger l falls back to the general
    exact inverse. Requires det(B) != 0.
    """
    if l < 1:
        raise ShapeError("l must be at least 1")
    b = adjacency(g_b)
    if bareiss_det(b) == 0:
        raise SingularMatrix("base adjacency must be invertible")
    if l > CLOSED_FORM_MAX_L:
        return inv_exact(adjacency(pendant_paths(g_b, l)))
    m = g_b.n
    zero = RatMatrix.zeros(m, m)
    eye = RatMatrix.identity(m)
    binv = inv_exact(b)
    symbols = {_I: eye, _B: b, _BI: binv}
    grid = [
        [symbols[kind].scaled(coef) if coef else zero for coef, kind in pattern_row]
        for pattern_row in _PATTERNS[l]
    ]
    return block_matrix(grid)


def corona(g_b: Graph) -> Graph:
    """One pendant vertex on every vertex of g_b."""
    return pendant_vertices(g_b, 1)


def corona_self_inverse_check(g_b: Graph) -> bool:
    """The corona is negatively self pseudo-inverse: the support of its
    negative pseudo-inverse graph is isomorphic to the corona itself."""
    g = corona(g_b)
    h = pseudo_inverse_graph(g, convention="negative")
    if h.has_loops:
        return False
    return are_isomorphic(h.skeleton(), g)


# -- graph isomorphism -------------------------------------------------------
#
# Backtracking search with iterated neighbor-invariant refinement; fine for
# the construction sizes used here (a few dozen vertices), not a
# general-purpose engine.


def _refine_invariants(g: Graph, rounds: int = 3):
    adj = g.neighbors()
    inv = [(len(adj[v]),) for v in range(g.n)]
    for _ in range(rounds):
        codes = {code: rank for rank, code in enumerate(sorted(set(inv)))}
        ranked = [codes[x] for x in inv]
        inv = [
            (ranked[v], tuple(sorted(ranked[w] for w in adj[v])))
            for v in range(g.n)
        ]
    codes = {code: rank for rank, code in enumerate(sorted(set(inv)))}
    return [codes[x] for x in inv]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    gi = _refine_invariants(g)
    hi = _refine_invariants(h)
    if sorted(gi) != sorted(hi):
        return False

    g_adj = [set(nb) for nb in g.neighbors()]
    h_adj = [set(nb) for nb in h.neighbors()]
    # map most-constrained (rarest invariant, highest degree) g-vertices first
    freq = {}
    for x in gi:
        freq[x] = freq.get(x, 0) + 1
    order = sorted(range(g.n), key=lambda v: (freq[gi[v]], -len(g_adj[v])))
    mapping: List[Optional[int]] = [None] * g.n
    used = [False] * h.n

    def place(idx: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        for w in range(h.n):
            if used[w] or hi[w] != gi[v]:
                continue
            ok = True
            for u in g_adj[v]:
                mu = mapping[u]
                if mu is not None and mu not in h_adj[w]:
                    ok = False
                    break
            if ok:
                for u in range(g.n):
                    mu = mapping[u]
                    if mu is not None and u not in g_adj[v] and mu in h_adj[w]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if place(idx + 1):
                return True
            mapping[v] = None
            used[w] = False
        return False

    return place(0)
