"""Exact rational scalar and dense matrix arithmetic.

The scalar type is ``gmpy2.mpq``: an always-reduced arbitrary-precision
fraction with positive denominator and 0/1 as the unique zero. ``Rational``
is an alias for it; anything ``mpq`` accepts (ints, "p/q" strings,
``fractions.Fraction``) can be used where a Rational is expected.

Everything here is exact: no floats enter any computation. Matrices are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import DivisionByZero, ParseError, ShapeError, SingularMatrix

Rational = mpq

ZERO = mpq(0)
ONE = mpq(1)


def rat(value, den=None) -> Rational:
    """Coerce to a reduced rational. ``rat(2, 6)`` == 1/3, ``rat("5/6")``."""
    return mpq(value) if den is None else mpq(value, den)


def rat_add(a, b) -> Rational:
    return mpq(a) + mpq(b)


def rat_mul(a, b) -> Rational:
    return mpq(a) * mpq(b)


def rat_neg(a) -> Rational:
    return -mpq(a)


def rat_inv(a) -> Rational:
    """Exact reciprocal; refuses zero."""
    a = mpq(a)
    if a == 0:
        raise DivisionByZero("cannot invert the rational zero")
    return 1 / a


def format_rational(a) -> str:
    """Render as "p/q", or "p" when the denominator is one."""
    return str(mpq(a))


def parse_rational(text: str) -> Rational:
    try:
        return mpq(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}: {exc}") from None


class RatMatrix:
    """Dense matrix of rationals, stored row-major.

    Treated as immutable: no method mutates ``self`` and the entry list must
    not be modified after construction.
    """

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative dimensions {rows}x{cols}")
        entries = [x if type(x) is mpq else mpq(x) for x in entries]
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ShapeError("ragged rows")
        return cls(nr, nc, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        e = [ZERO] * (n * n)
        for i in range(n):
            e[i * n + i] = ONE
        return cls(n, n, e)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [ONE] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        e = [ZERO] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = mpq(v)
        return cls(n, n, e)

    # -- access ---------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> Rational:
        return self._e[i * self.cols + j]

    def __getitem__(self, ij) -> Rational:
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> list:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> list:
        return self._e[j :: self.cols]

    def row_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RatMatrix":
        e = [self._e[i * self.cols + j] for i in row_idx for j in col_idx]
        return RatMatrix(len(row_idx), len(col_idx), e)

    def permuted(self, perm: Sequence[int]) -> "RatMatrix":
        """Simultaneous row/column reorder: result[p][q] = self[perm[p]][perm[q]]."""
        if self.rows != self.cols or sorted(perm) != list(range(self.rows)):
            raise ShapeError("permutation must cover a square matrix")
        return self.submatrix(perm, perm)

    # -- predicates ------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        e, n = self._e, self.cols
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._e)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._e)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._e)))

    # -- arithmetic -------------------------------------------------------

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other) -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other) -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [-a for a in self._e])

    def scaled(self, s) -> "RatMatrix":
        s = mpq(s)
        return RatMatrix(self.rows, self.cols, [s * a for a in self._e])

    def __matmul__(self, other) -> "RatMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "RatMatrix":
        e = [self._e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return RatMatrix(self.cols, self.rows, e)

    @property
    def T(self) -> "RatMatrix":
        return self.transpose()

    def to_float(self):
        """Copy into a float64 numpy array (lossy; for spectral work only)."""
        import numpy as np

        out = np.empty((self.rows, self.cols), dtype=float)
        flat = out.reshape(-1)
        for k, x in enumerate(self._e):
            flat[k] = float(x)
        return out

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a._e, b._e
    out = [ZERO] * (n * m)
    for i in range(n):
        arow = ae[i * k : (i + 1) * k]
        orow = i * m
        for p in range(k):
            x = arow[p]
            if x:
                brow = be[p * m : (p + 1) * m]
                for j in range(m):
                    if brow[j]:
                        out[orow + j] += x * brow[j]
    return RatMatrix(n, m, out)


def block_matrix(blocks) -> RatMatrix:
    """Assemble from a 2-d grid of RatMatrix blocks with consistent sizes."""
    row_heights = [grid_row[0].rows for grid_row in blocks]
    col_widths = [b.cols for b in blocks[0]]
    for gi, grid_row in enumerate(blocks):
        for gj, b in enumerate(grid_row):
            if b.rows != row_heights[gi] or b.cols != col_widths[gj]:
                raise ShapeError(f"block ({gi},{gj}) has shape {b.shape}")
    out_rows = []
    for gi, grid_row in enumerate(blocks):
        for i in range(row_heights[gi]):
            row = []
            for b in grid_row:
                row.extend(b.row(i))
            out_rows.append(row)
    return RatMatrix.from_rows(out_rows) if out_rows else RatMatrix.zeros(0, sum(col_widths))


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Kronecker product: block matrix of a[i][j] * b."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [ZERO] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.entry(i, j)
            if not x:
                continue
            for p in range(b.rows):
                base = (i * b.rows + p) * cols + j * b.cols
                brow = b.row(p)
                for q in range(b.cols):
                    out[base + q] = x * brow[q]
    return RatMatrix(rows, cols, out)


def bareiss_det(a: RatMatrix) -> Rational:
    """Exact determinant by fraction-free (Bareiss) elimination.

    On integral input every intermediate value stays integral; rational
    entries are handled by the same recurrence (divisions remain exact).
    """
    if not a.is_square():
        raise ShapeError("determinant needs a square matrix")
    n = a.rows
    if n == 0:
        return ONE
    m = a.row_lists()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi, mk = m[i], m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) / prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank_and_rref(a: RatMatrix):
    """Exact reduced row echelon form.

    Returns ``(rank, rref, pivot_cols)`` with pivot columns ascending and
    pivots normalized to one.
    """
    m = a.row_lists()
    nr, nc = a.rows, a.cols
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        mr = m[r]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                m[i] = [x - f * y for x, y in zip(row, mr)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return r, RatMatrix.from_rows(m) if nr else RatMatrix.zeros(0, nc), tuple(pivots)


def inv_exact(a: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination on [A | I]."""
    if not a.is_square():
        raise ShapeError("inverse needs a square matrix")
    n = a.rows
    eye = RatMatrix.identity(n)
    aug = RatMatrix(n, 2 * n, [x for i in range(n) for x in a.row(i) + eye.row(i)])
    rank, red, piv = rank_and_rref(aug)
    if piv[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return red.submatrix(range(n), range(n, 2 * n))


def pinv_exact(a: RatMatrix) -> RatMatrix:
    """Exact Moore-Penrose pseudo-inverse of any rational matrix.

    Uses the full-rank factorization A = F G with F the pivot columns of A
    and G the nonzero rows of the RREF, so the computation never leaves the
    rationals:

        pinv(A) = G^T (G G^T)^{-1} (F^T F)^{-1} F^T

    A rank-zero matrix maps to the zero matrix of transposed shape.
    """
    r, red, piv = rank_and_rref(a)
    if r == 0:
        return RatMatrix.zeros(a.cols, a.rows)
    f = a.submatrix(range(a.rows), piv)
    g = red.submatrix(range(r), range(a.cols))
    gt, ft = g.T, f.T
    middle = mat_mul(inv_exact(mat_mul(g, gt)), inv_exact(mat_mul(ft, f)))
    return mat_mul(gt, mat_mul(middle, ft))


# -- text format ------------------------------------------------------------
#
# First line "rows cols", then one line per row of whitespace-separated
# rationals written "p/q" or "p". Round-trips bit-exactly.


def parse_matrix(text: str) -> RatMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'rows cols', got {lines[0]!r}", line=1)
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"header must be 'rows cols', got {lines[0]!r}", line=1) from None
    if rows < 0 or cols < 0:
        raise ParseError("negative dimensions", line=1)
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} rows, got {len(lines) - 1}")
    entries = []
    for i in range(rows):
        parts = lines[1 + i].split()
        if len(parts) != cols:
            raise ParseError(f"row has {len(parts)} entries, expected {cols}", line=i + 2)
        for p in parts:
            try:
                entries.append(mpq(p))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"invalid rational {p!r}", line=i + 2) from None
    return RatMatrix(rows, cols, entries)


def format_matrix(a: RatMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    for i in range(a.rows):
        lines.append(" ".join(format_rational(x) for x in a.row(i)))
    return "\n".join(lines) + "\n"
