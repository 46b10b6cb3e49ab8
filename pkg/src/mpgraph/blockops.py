"""Generalized Schur complements and block pseudo-inverse assembly.

For a symmetric block matrix M = [[A, K], [K^T, B]] the generalized Schur
complements are S_A = A - K pinv(B) K^T and S_B = B - K^T pinv(A) K. When K
satisfies K (I - pinv(B) B) = 0 and (I - S_A pinv(S_A)) K = 0 ("K is (A,B)
compatible"), pinv(M) has an explicit block form assembled from pinv(S_A)
and pinv(B); exchanging the roles of A and B gives the dual form under the
dual conditions. All checks and assemblies here are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import IncompatibleBlocks, PreconditionFailed, ShapeError
from .ratmath import RatMatrix, bareiss_det, block_matrix, mat_mul, pinv_exact
from .signability import apply_signature, find_signature


@dataclass
class BlockSystem:
    """Symmetric block system (A, B, K) with A n x n, B m x m, K n x m."""

    a: RatMatrix
    b: RatMatrix
    k: RatMatrix

    def __post_init__(self):
        if not self.a.is_symmetric():
            raise ShapeError("A must be symmetric")
        if not self.b.is_symmetric():
            raise ShapeError("B must be symmetric")
        if self.k.rows != self.a.rows or self.k.cols != self.b.rows:
            raise ShapeError(
                f"K must be {self.a.rows}x{self.b.rows}, got {self.k.rows}x{self.k.cols}"
            )

    @property
    def n(self) -> int:
        return self.a.rows

    @property
    def m(self) -> int:
        return self.b.rows

    def assemble(self) -> RatMatrix:
        """The full (n+m) x (n+m) symmetric matrix [[A, K], [K^T, B]]."""
        return block_matrix([[self.a, self.k], [self.k.T, self.b]])


def schur_complement(sys: BlockSystem, which: str) -> RatMatrix:
    """Generalized Schur complement S_A or S_B (pseudo-inverses inside)."""
    if which == "A":
        return sys.a - mat_mul(mat_mul(sys.k, pinv_exact(sys.b)), sys.k.T)
    if which == "B":
        return sys.b - mat_mul(mat_mul(sys.k.T, pinv_exact(sys.a)), sys.k)
    raise ValueError(f"which must be 'A' or 'B', not {which!r}")


@dataclass
class CompatibilityReport:
    """The four exact structural conditions controlling the block forms.

    k_right and k_schur together say "K is (A,B) compatible" (A-form);
    kt_right and kt_schur together say "K^T is (B,A) compatible" (B-form).
    """

    k_right: bool   # K (I - pinv(B) B) = 0
    k_schur: bool   # (I - S_A pinv(S_A)) K = 0
    kt_right: bool  # (I - A pinv(A)) K = 0
    kt_schur: bool  # K (I - pinv(S_B) S_B) = 0

    @property
    def form_a(self) -> bool:
        return self.k_right and self.k_schur

    @property
    def form_b(self) -> bool:
        return self.kt_right and self.kt_schur

    @property
    def full(self) -> bool:
        return self.form_a and self.form_b


def compatibility(sys: BlockSystem) -> CompatibilityReport:
    a, b, k = sys.a, sys.b, sys.k
    eye_n = RatMatrix.identity(sys.n)
    eye_m = RatMatrix.identity(sys.m)

    bd = pinv_exact(b)
    k_right = mat_mul(k, eye_m - mat_mul(bd, b)).is_zero()

    s_a = a - mat_mul(mat_mul(k, bd), k.T)
    sad = pinv_exact(s_a)
    k_schur = mat_mul(eye_n - mat_mul(s_a, sad), k).is_zero()

    ad = pinv_exact(a)
    kt_right = mat_mul(eye_n - mat_mul(a, ad), k).is_zero()

    s_b = b - mat_mul(mat_mul(k.T, ad), k)
    sbd = pinv_exact(s_b)
    kt_schur = mat_mul(k, eye_m - mat_mul(sbd, s_b)).is_zero()

    return CompatibilityReport(k_right, k_schur, kt_right, kt_schur)


def banachiewicz_schur(sys: BlockSystem, form: str = "A") -> RatMatrix:
    """Explicit block pseudo-inverse of the assembled matrix.

    Form "A" (requires K (A,B) compatible):

        [[ pinv(S_A),                 -pinv(S_A) K pinv(B)                      ],
         [ -pinv(B) K^T pinv(S_A),     pinv(B) + pinv(B) K^T pinv(S_A) K pinv(B) ]]

    Form "B" is the mirror image built from pinv(A) and pinv(S_B).
    """
    if form not in ("A", "B"):
        raise ValueError(f"form must be 'A' or 'B', not {form!r}")
    report = compatibility(sys)
    if form == "A":
        if not report.form_a:
            raise IncompatibleBlocks(
                f"K is not (A,B) compatible: k_right={report.k_right}, k_schur={report.k_schur}"
            )
        sad = pinv_exact(schur_complement(sys, "A"))
        bd = pinv_exact(sys.b)
        bdkt = mat_mul(bd, sys.k.T)
        top_right = -mat_mul(mat_mul(sad, sys.k), bd)
        bottom_right = bd + mat_mul(mat_mul(bdkt, sad), bdkt.T)
        return block_matrix([[sad, top_right], [top_right.T, bottom_right]])
    if not report.form_b:
        raise IncompatibleBlocks(
            f"K^T is not (B,A) compatible: kt_right={report.kt_right}, kt_schur={report.kt_schur}"
        )
    sbd = pinv_exact(schur_complement(sys, "B"))
    ad = pinv_exact(sys.a)
    adk = mat_mul(ad, sys.k)
    top_left = ad + mat_mul(mat_mul(adk, sbd), adk.T)
    top_right = -mat_mul(adk, sbd)
    return block_matrix([[top_left, top_right], [top_right.T, sbd]])


def theo1_identities(sys: BlockSystem) -> Tuple[bool, bool, bool]:
    """Exact evaluation of the three Schur-complement pseudo-inverse identities

        (1) pinv(S_A) K pinv(B)  ==  pinv(A) K pinv(S_B)
        (2) pinv(S_A)  ==  pinv(A) + pinv(A) K pinv(S_B) K^T pinv(A)
        (3) pinv(S_B)  ==  pinv(B) + pinv(B) K^T pinv(S_A) K pinv(B)

    valid when K is (A,B) compatible and K^T is (B,A) compatible; anything
    less raises IncompatibleBlocks.
    """
    report = compatibility(sys)
    if not report.full:
        raise IncompatibleBlocks(f"full compatibility required, got {report}")
    ad = pinv_exact(sys.a)
    bd = pinv_exact(sys.b)
    sad = pinv_exact(schur_complement(sys, "A"))
    sbd = pinv_exact(schur_complement(sys, "B"))
    k = sys.k

    first = mat_mul(mat_mul(sad, k), bd) == mat_mul(mat_mul(ad, k), sbd)
    adk = mat_mul(ad, k)
    second = sad == ad + mat_mul(mat_mul(adk, sbd), adk.T)
    bdkt = mat_mul(bd, k.T)
    third = sbd == bd + mat_mul(mat_mul(bdkt, sad), bdkt.T)
    return first, second, third


def schur_invertibility_check(sys: BlockSystem) -> bool:
    """det(S_A) != 0, under the preconditions that make it a theorem:
    the assembled matrix is invertible and K (I - pinv(B) B) = 0."""
    if bareiss_det(sys.assemble()) == 0:
        raise PreconditionFailed("assembled block matrix is singular")
    eye_m = RatMatrix.identity(sys.m)
    bd = pinv_exact(sys.b)
    if not mat_mul(sys.k, eye_m - mat_mul(bd, sys.b)).is_zero():
        raise PreconditionFailed("K (I - pinv(B) B) != 0")
    return bareiss_det(schur_complement(sys, "A")) != 0


@dataclass
class CompositeSignatures:
    """Composite signatures of pinv(M) certified by the sufficient condition."""

    positive: Optional[list]
    negative: Optional[list]

    def __bool__(self):
        return self.positive is not None or self.negative is not None


def theo_si_sufficient(sys: BlockSystem) -> CompositeSignatures:
    """Sufficient-condition check for signability of the block pseudo-inverse.

    For each sign: if S_A and B are both pseudo-invertible with that sign
    (witnesses D_A over pinv(S_A), D_B over pinv(B)), K is (A,B) compatible,
    and D_A K D_B is single-signed, then the composite signature
    D = diag(D_A, -+ D_B) signs pinv(M) to that sign; the certified composite
    is returned per sign (None where the premises fail). Each returned
    signature is validated exactly against pinv of the assembled matrix.
    """
    report = compatibility(sys)
    if not report.form_a:
        return CompositeSignatures(None, None)

    s_a = schur_complement(sys, "A")
    sad = pinv_exact(s_a)
    bd = pinv_exact(sys.b)
    pin_m = pinv_exact(sys.assemble())

    found = {}
    for sign, target in (("positive", "nonneg"), ("negative", "nonpos")):
        found[sign] = None
        d_a = find_signature(sad, target)
        d_b = find_signature(bd, target)
        if d_a is None or d_b is None:
            continue
        signed_k = apply_signature_rect(sys.k, d_a, d_b)
        has_pos = any(x > 0 for x in signed_k._e)
        has_neg = any(x < 0 for x in signed_k._e)
        if has_pos and has_neg:
            continue
        # nonnegative D_A K D_B pairs with diag(D_A, -D_B); nonpositive with
        # diag(D_A, D_B) (zero K allows either; use the first)
        flip = -1 if has_pos or not has_neg else 1
        composite = d_a + [flip * x for x in d_b]
        signed = apply_signature(pin_m, composite)
        ok = (
            all(x >= 0 for x in signed._e)
            if target == "nonneg"
            else all(x <= 0 for x in signed._e)
        )
        if not ok:
            raise ArithmeticError("sufficient-condition certificate failed exact validation")
        found[sign] = composite
    return CompositeSignatures(found["positive"], found["negative"])


def apply_signature_rect(k: RatMatrix, d_left: list, d_right: list) -> RatMatrix:
    """diag(d_left) K diag(d_right) for a rectangular K."""
    if len(d_left) != k.rows or len(d_right) != k.cols:
        raise ShapeError("signature length mismatch")
    return RatMatrix(
        k.rows,
        k.cols,
        [d_left[i] * d_right[j] * k.entry(i, j) for i in range(k.rows) for j in range(k.cols)],
    )
