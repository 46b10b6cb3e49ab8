"""Floating symmetric eigensolver and spectral-gap machinery.

Eigenvalues come from a cyclic Jacobi rotation scheme, adequate for the
matrix sizes this package targets (n up to a few hundred). Zero eigenvalues
of exact inputs are never decided by floating tolerance: the exact rank from
:mod:`mpgraph.ratmath` fixes how many eigenvalues are exactly zero, and the
corresponding smallest-magnitude floating values are clamped to 0.0.

The least positive / largest negative eigenvalues of a matrix are the
reciprocals of the extreme eigenvalues of its pseudo-inverse; the bisection
routines realize that characterization as a semidefinite feasibility search
over the pseudo-inverse, and ``block_lmi_check`` evaluates the equivalent
2x2-block linear matrix inequality for compatible block systems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import (
    IncompatibleBlocks,
    NoNegativeEigenvalue,
    NoPositiveEigenvalue,
    ShapeError,
)
from .ratmath import RatMatrix, mat_mul, pinv_exact, rank_and_rref

MatrixLike = Union[RatMatrix, np.ndarray, Sequence[Sequence[float]]]

JACOBI_REL_TOL = 1e-12
MAX_SWEEPS = 64


def _as_symmetric_array(a: MatrixLike) -> np.ndarray:
    if isinstance(a, RatMatrix):
        if not a.is_symmetric():
            raise ShapeError("matrix is not symmetric")
        return a.to_float()
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise ShapeError("matrix is not symmetric")
    return arr.copy()


def sym_eigenvalues(a: MatrixLike, rel_tol: float = JACOBI_REL_TOL) -> list:
    """All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``rel_tol`` times the Frobenius norm of the input.
    """
    m = _as_symmetric_array(a)
    n = m.shape[0]
    if n == 0:
        return []
    norm = math.sqrt(float(np.sum(m * m)))
    if norm == 0.0:
        return [0.0] * n
    threshold = rel_tol * norm

    for _ in range(MAX_SWEEPS):
        off = math.sqrt(2.0 * float(np.sum(np.triu(m, 1) ** 2)))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                # stable rotation angle: tan(2*phi) = 2*apq / (aqq - app)
                diff = m[q, q] - m[p, p]
                if abs(apq) < 1e-300 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = m[p, :].copy()
                rq = m[q, :].copy()
                m[p, :] = c * rp - s * rq
                m[q, :] = s * rp + c * rq
                cp = m[:, p].copy()
                cq = m[:, q].copy()
                m[:, p] = c * cp - s * cq
                m[:, q] = s * cp + c * cq
                m[p, q] = 0.0
                m[q, p] = 0.0
    return sorted(float(x) for x in np.diag(m))


def _clamped_eigenvalues(a: RatMatrix) -> list:
    """Jacobi eigenvalues with exactly rank-deficiency many zeros."""
    eigs = sym_eigenvalues(a)
    n_zero = a.rows - rank_and_rref(a)[0]
    if n_zero == 0:
        return eigs
    order = sorted(range(len(eigs)), key=lambda i: abs(eigs[i]))
    for i in order[:n_zero]:
        eigs[i] = 0.0
    return sorted(eigs)


@dataclass
class SpectralSummary:
    """Eigenvalues plus the gap quantities of a symmetric matrix.

    ``lambda_plus`` is the least positive eigenvalue, ``lambda_minus`` the
    largest negative one; ``gap`` and ``index`` exist when both do.
    """

    eigenvalues: list
    lambda_plus: Optional[float]
    lambda_minus: Optional[float]
    gap: Optional[float]
    index: Optional[float]


def spectral_summary(a: RatMatrix, check_tol: float = 1e-8) -> SpectralSummary:
    """Eigenvalues, least positive / largest negative eigenvalue, gap, index.

    Cross-checks the reciprocal relation between the extreme eigenvalues of
    the pseudo-inverse and lambda_plus/lambda_minus as an internal sanity
    guard; a violation beyond ``check_tol`` raises ArithmeticError.
    """
    if not a.is_symmetric():
        raise ShapeError("matrix is not symmetric")
    eigs = _clamped_eigenvalues(a)
    pos = [x for x in eigs if x > 0.0]
    neg = [x for x in eigs if x < 0.0]
    lambda_plus = min(pos) if pos else None
    lambda_minus = max(neg) if neg else None
    gap = index = None
    if lambda_plus is not None and lambda_minus is not None:
        gap = lambda_plus - lambda_minus
        index = max(abs(lambda_plus), abs(lambda_minus))

    if pos or neg:
        pin_eigs = _clamped_eigenvalues(pinv_exact(a))
        if lambda_plus is not None:
            recip = 1.0 / max(pin_eigs)
            if abs(recip - lambda_plus) > check_tol * max(1.0, abs(lambda_plus)):
                raise ArithmeticError(
                    f"reciprocal check failed: lambda_plus={lambda_plus} vs {recip}"
                )
        if lambda_minus is not None:
            recip = 1.0 / min(pin_eigs)
            if abs(recip - lambda_minus) > check_tol * max(1.0, abs(lambda_minus)):
                raise ArithmeticError(
                    f"reciprocal check failed: lambda_minus={lambda_minus} vs {recip}"
                )
    return SpectralSummary(eigs, lambda_plus, lambda_minus, gap, index)


def is_psd(a: MatrixLike, tol: float) -> bool:
    """True iff the smallest eigenvalue is >= -tol."""
    eigs = sym_eigenvalues(a)
    return not eigs or eigs[0] >= -tol


_BISECT_WIDTH = 1e-10
_BISECT_PSD_TOL = 1e-12
_MAX_ITER = 200


def _max_feasible(pinv_f: np.ndarray, start: float, sign: float) -> float:
    """max mu >= 0 with I - sign*mu*pinv >= 0, located by bracketed bisection."""
    n = pinv_f.shape[0]
    eye = np.eye(n)

    def feasible(mu: float) -> bool:
        return is_psd(eye - (sign * mu) * pinv_f, _BISECT_PSD_TOL)

    hi = start
    for _ in range(_MAX_ITER):
        if not feasible(hi):
            break
        hi *= 2.0
    lo = 0.0
    for _ in range(_MAX_ITER):
        if hi - lo < _BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _bisection_bracket(a: RatMatrix):
    eigs = _clamped_eigenvalues(a)
    nonzero = [abs(x) for x in eigs if x != 0.0]
    start = 2.0 / min(nonzero) if nonzero else 1.0
    return eigs, start


def lambda_plus_by_bisection(m: RatMatrix) -> float:
    """Least positive eigenvalue as the largest mu with mu * pinv(M) <= I."""
    if not m.is_symmetric():
        raise ShapeError("matrix is not symmetric")
    eigs, start = _bisection_bracket(m)
    if not any(x > 0.0 for x in eigs):
        raise NoPositiveEigenvalue("matrix has no positive eigenvalue")
    return _max_feasible(pinv_exact(m).to_float(), start, +1.0)


def lambda_minus_by_bisection(m: RatMatrix) -> float:
    """Largest negative eigenvalue, as -max eta with -eta * pinv(M) <= I."""
    if not m.is_symmetric():
        raise ShapeError("matrix is not symmetric")
    eigs, start = _bisection_bracket(m)
    if not any(x < 0.0 for x in eigs):
        raise NoNegativeEigenvalue("matrix has no negative eigenvalue")
    return -_max_feasible(pinv_exact(m).to_float(), start, -1.0)


def block_lmi_check(a: RatMatrix, b: RatMatrix, k: RatMatrix, mu: float, side: str = "plus",
                    tol: float = 1e-8) -> bool:
    """Feasibility of mu*pinv(M) <= I (side "plus") or -mu*pinv(M) <= I ("minus")
    evaluated through the equivalent 2x2-block linear matrix inequality.

    Requires the block system to satisfy the compatibility conditions under
    which the pseudo-inverse has its explicit block form.
    """
    from .blockops import BlockSystem, compatibility, schur_complement

    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', not {side!r}")
    sys_ = BlockSystem(a, b, k)
    report = compatibility(sys_)
    if not (report.k_right and report.k_schur):
        raise IncompatibleBlocks("K is not (A,B) compatible; block LMI form unavailable")

    s_a = schur_complement(sys_, "A")
    sad_f = pinv_exact(s_a).to_float()
    bd = pinv_exact(b)
    kbd = mat_mul(k, bd)
    btktkb = mat_mul(kbd.T, kbd)  # B^† K^T K B^†
    n, m_ = a.rows, b.rows
    kbd_f = kbd.to_float()
    bd_f = bd.to_float()
    btktkb_f = btktkb.to_float()

    sign = 1.0 if side == "plus" else -1.0
    top_left = np.eye(n) - (sign * mu) * sad_f
    bottom_right = np.eye(m_) + btktkb_f - (sign * mu) * bd_f
    block = np.block([[top_left, kbd_f], [kbd_f.T, bottom_right]])
    return is_psd(block, tol)
