"""Signature-matrix signability and pseudo-inverse graphs.

A symmetric matrix H is positively (negatively) signable when some diagonal
+-1 signature matrix D makes D H D entrywise nonnegative (nonpositive). A
symmetric matrix A is positively / negatively pseudo-invertible when its
Moore-Penrose pseudo-inverse is signable accordingly, and a graph inherits
the notion through its adjacency matrix. All sign decisions here are exact
rational comparisons; floats never participate.

Witnesses are canonical: within every connected component of the
sign-constraint graph the lowest-index vertex carries +1, which makes all
outputs deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import NotSignable, PreconditionFailed, ShapeError
from .graphs import Graph, WeightedGraph, adjacency, weighted_adjacency, weighted_graph_of
from .ratmath import RatMatrix, Rational, bareiss_det, mat_mul, pinv_exact


class SignClass(str, Enum):
    POSITIVE_ONLY = "PositiveOnly"
    NEGATIVE_ONLY = "NegativeOnly"
    BOTH = "Both"
    NEITHER = "Neither"


def find_signature(h: RatMatrix, target: str) -> Optional[list]:
    """Canonical +-1 signature vector d with diag(d) H diag(d) single-signed.

    ``target`` is "nonneg" or "nonpos". Returns None when no signature
    exists. Diagonal entries are invariant under the signing, so any
    diagonal entry of the wrong sign disqualifies immediately; off-diagonal
    nonzeros impose d_i * d_j constraints that are propagated breadth-first
    per component, rejecting on contradiction.
    """
    if target not in ("nonneg", "nonpos"):
        raise ValueError(f"target must be 'nonneg' or 'nonpos', not {target!r}")
    if not h.is_symmetric():
        raise ShapeError("signability is defined for symmetric matrices")
    n = h.rows
    want_nonneg = target == "nonneg"
    for i in range(n):
        x = h.entry(i, i)
        if (x < 0) if want_nonneg else (x > 0):
            return None

    # constraint graph: edge (i, j) demands d_i * d_j == req[i, j]
    adj = [[] for _ in range(n)]
    for i in range(n):
        row = h.row(i)
        for j in range(i + 1, n):
            x = row[j]
            if x == 0:
                continue
            req = 1 if (x > 0) == want_nonneg else -1
            adj[i].append((j, req))
            adj[j].append((i, req))

    d = [0] * n
    for start in range(n):
        if d[start]:
            continue
        d[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, req in adj[u]:
                expected = d[u] * req
                if d[v] == 0:
                    d[v] = expected
                    queue.append(v)
                elif d[v] != expected:
                    return None
    return d


def apply_signature(h: RatMatrix, d: list) -> RatMatrix:
    """diag(d) H diag(d)."""
    n = h.rows
    if len(d) != n:
        raise ShapeError("signature length mismatch")
    return RatMatrix(n, h.cols, [d[i] * d[j] * h.entry(i, j) for i in range(n) for j in range(h.cols)])


@dataclass
class SignabilityReport:
    """Signability classification of one symmetric matrix."""

    positive: Optional[list]
    negative: Optional[list]
    sign_class: SignClass

    @classmethod
    def of(cls, h: RatMatrix) -> "SignabilityReport":
        pos = find_signature(h, "nonneg")
        neg = find_signature(h, "nonpos")
        if pos is not None and neg is not None:
            c = SignClass.BOTH
        elif pos is not None:
            c = SignClass.POSITIVE_ONLY
        elif neg is not None:
            c = SignClass.NEGATIVE_ONLY
        else:
            c = SignClass.NEITHER
        return cls(pos, neg, c)


@dataclass
class MatrixClassification:
    """Signability of the pseudo-inverse plus invertibility bookkeeping.

    ``report`` describes pinv(A). ``det`` is exact; ``integrally_invertible``
    means det = +-1, which for integer input is equivalent to the inverse
    being an integral matrix.
    """

    report: SignabilityReport
    det: Rational
    invertible: bool
    integrally_invertible: bool

    @property
    def sign_class(self) -> SignClass:
        return self.report.sign_class


def classify_matrix(a: RatMatrix) -> MatrixClassification:
    """Classify a symmetric matrix by the signability of its pseudo-inverse."""
    if not a.is_symmetric():
        raise ShapeError("classification is defined for symmetric matrices")
    report = SignabilityReport.of(pinv_exact(a))
    det = bareiss_det(a)
    return MatrixClassification(
        report=report,
        det=det,
        invertible=det != 0,
        integrally_invertible=det == 1 or det == -1,
    )


def classify_graph(g: Graph) -> MatrixClassification:
    return classify_matrix(adjacency(g))


def pseudo_inverse_graph(g, convention: str = "positive") -> WeightedGraph:
    """The weighted pseudo-inverse graph D pinv(A) D (or -D pinv(A) D).

    ``g`` may be a Graph or a WeightedGraph. The positive witness is used
    when present; ``convention="negative"`` prefers the negative witness for
    matrices signable both ways. Raises NotSignable when the pseudo-inverse
    is signable neither way.
    """
    if convention not in ("positive", "negative"):
        raise ValueError(f"convention must be 'positive' or 'negative', not {convention!r}")
    a = adjacency(g) if isinstance(g, Graph) else weighted_adjacency(g)
    p = pinv_exact(a)
    pos = find_signature(p, "nonneg")
    neg = find_signature(p, "nonpos")
    if pos is None and neg is None:
        raise NotSignable("pseudo-inverse is neither positively nor negatively signable")
    use_negative = neg is not None and (convention == "negative" or pos is None)
    if use_negative:
        weighted = -apply_signature(p, neg)
    else:
        weighted = apply_signature(p, pos)
    return weighted_graph_of(weighted)


def double_pseudo_inverse_check(g: Graph, convention: str = "positive") -> bool:
    """True iff taking the pseudo-inverse graph twice returns g itself
    (same edge set, all weights one, no loops)."""
    h = pseudo_inverse_graph(g, convention)
    back = pseudo_inverse_graph(h, convention)
    return back.equals_unit_graph(g)


@dataclass
class OffDiagonalWitness:
    """Permutation exhibiting a matrix as [[0, K], [K^T, 0]].

    ``permutation[p]`` is the original index placed at position p; the first
    ``n`` positions hold one bipartition class, the remaining ``m`` the other.
    """

    permutation: list
    n: int
    m: int
    k_block: RatMatrix


def off_diagonal_form(m: RatMatrix) -> Optional[OffDiagonalWitness]:
    """Permutation similarity to an off-diagonal block matrix, if one exists.

    Exists iff the diagonal is zero and the nonzero pattern is bipartite.
    The smaller bipartition class is listed first (ties: the class holding
    vertex 0); classes are ascending, each component 2-colored with its
    lowest vertex in the first class.
    """
    if not m.is_symmetric():
        raise ShapeError("off-diagonal form is defined for symmetric matrices")
    size = m.rows
    for i in range(size):
        if m.entry(i, i) != 0:
            return None
    pattern = Graph(size, ((i, j) for i in range(size) for j in range(i + 1, size) if m.entry(i, j) != 0))
    coloring = pattern.two_coloring()
    if coloring is None:
        return None
    class0 = [v for v in range(size) if coloring[v] == 0]
    class1 = [v for v in range(size) if coloring[v] == 1]
    if len(class1) < len(class0):
        class0, class1 = class1, class0
    perm = class0 + class1
    n, mm = len(class0), len(class1)
    k_block = m.submatrix(class0, class1)
    return OffDiagonalWitness(permutation=perm, n=n, m=mm, k_block=k_block)


def bipartite_pseudo_inverse_pattern(m: RatMatrix, n: int) -> RatMatrix:
    """Assemble pinv of an off-diagonal block matrix from pinv of its block.

    ``m`` must equal [[0, K], [K^T, 0]] with K of shape n x (N - n); the
    result is [[0, pinv(K)^T], [pinv(K), 0]].
    """
    if not m.is_symmetric():
        raise ShapeError("expected a symmetric matrix")
    size = m.rows
    if not 0 <= n <= size:
        raise ShapeError(f"block size {n} out of range")
    for i in range(size):
        for j in range(size):
            inside = (i < n) == (j < n)
            if inside and m.entry(i, j) != 0:
                raise ShapeError("matrix is not in off-diagonal block form")
    k = m.submatrix(range(n), range(n, size))
    kd = pinv_exact(k)
    out = RatMatrix.zeros(size, size).row_lists()
    for i in range(n):
        for j in range(size - n):
            out[i][n + j] = kd.entry(j, i)
            out[n + j][i] = kd.entry(j, i)
    return RatMatrix.from_rows(out) if size else RatMatrix.zeros(0, 0)


def _norm_one(a: RatMatrix) -> Rational:
    """Entrywise 1-norm: sum of absolute values of all entries."""
    return sum((x if x >= 0 else -x) for x in a._e)


def _norm_inf_vec(v: RatMatrix) -> Rational:
    return max(((x if x >= 0 else -x) for x in v._e), default=Rational(0))


def monotone_bound_check(a: RatMatrix, x: RatMatrix, b: RatMatrix) -> bool:
    """Exact check of the signable analogue of the monotone-matrix bound:

        ||pinv(A) A x||_inf <= ||pinv(A)||_1 * ||b||_inf

    Preconditions: A positively or negatively pseudo-invertible, b >= 0 and
    -b <= A x <= b entrywise; violations raise PreconditionFailed.
    """
    if x.cols != 1 or b.cols != 1 or x.rows != a.cols or b.rows != a.rows:
        raise ShapeError("x and b must be column vectors matching A")
    p = pinv_exact(a)
    if find_signature(p, "nonneg") is None and find_signature(p, "nonpos") is None:
        raise PreconditionFailed("matrix is not positively or negatively pseudo-invertible")
    if any(e < 0 for e in b._e):
        raise PreconditionFailed("b must be entrywise nonnegative")
    ax = mat_mul(a, x)
    if any(not (-bv <= av <= bv) for av, bv in zip(ax._e, b._e)):
        raise PreconditionFailed("-b <= A x <= b does not hold")
    lhs = _norm_inf_vec(mat_mul(p, ax))
    rhs = _norm_one(p) * _norm_inf_vec(b)
    return lhs <= rhs
