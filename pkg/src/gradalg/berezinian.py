"""The graded Berezinian of invertible degree-0 matrices, the invertibility
test through the odd ideal, and the Liouville identity over a nilpotent
extension."""

from __future__ import annotations

from . import ringmat as rm
from .errors import NotInvertibleError, RegularityError
from .matrices import GradedMatrix, redivide_2x2, require_homogeneous
from .determinant import gdet_blocks, gdet_blocks_ldu
from .series import NilpotentPoly, SeriesRing, nilpotent_exp
from .trace import gtr


def _gdet_either_route(grid, sizes, ring):
    """Both quasiminor chains compute the same polynomial; falling back to the
    mirror route when the first one hits a non-regular principal submatrix
    widens the computable domain."""
    try:
        return gdet_blocks(grid, sizes, ring).value
    except RegularityError:
        return gdet_blocks_ldu(grid, sizes, ring).value


def _strip_grid(grid):
    return [[v.strip_odd() for v in row] for row in grid]


def _odd_generator_count(ring):
    base = getattr(ring, "base", ring)
    return base.num_odd


def _block_diag_strip_inverse(X: GradedMatrix):
    """Inverse of X mod the odd ideal, lifted back: the stripped matrix is
    block diagonal under the parity redivision, so invert the two corners.
    Returns None when either corner fails to invert."""
    r = redivide_2x2(X, "parity")
    split = r.row_split
    n = X.row_ranks.total
    out = rm.zeros(X.ring, n, n)
    corners = ((0, r.x11), (split, r.x22))
    for base, corner in corners:
        size = corner.shape[0]
        if size == 0:
            continue
        stripped = _strip_grid(corner.grid())
        try:
            inv = rm.mat_inverse(stripped, X.ring)
        except NotInvertibleError:
            return None
        for i in range(size):
            for j in range(size):
                out[base + i][base + j] = inv[i][j]
    return out


def is_invertible0(X: GradedMatrix) -> bool:
    """True iff both parity-diagonal blocks are invertible modulo the odd
    ideal, which characterizes invertibility of a degree-0 matrix."""
    _require_degree0(X)
    return _block_diag_strip_inverse(X) is not None


def invert0(X: GradedMatrix) -> GradedMatrix:
    """Inverse of an invertible degree-0 matrix via the nilpotent lift.

    With Z0 the stripped block-diagonal inverse, X Z0 = I + W where W runs
    over the odd ideal and is nilpotent, so X^{-1} = Z0 (I + sum (-W)^k).
    """
    _require_degree0(X)
    z0 = _block_diag_strip_inverse(X)
    if z0 is None:
        raise NotInvertibleError(
            "a parity-diagonal block is singular modulo the odd ideal")
    n = X.row_ranks.total
    w = rm.mat_sub(rm.mat_mul(X.grid(), z0), rm.identity(X.ring, n))
    cap = (_odd_generator_count(X.ring) + 1) * max(n, 1)
    series = rm.identity(X.ring, n)
    power = rm.identity(X.ring, n)
    neg_w = rm.mat_neg(w)
    for _ in range(cap):
        power = rm.mat_mul(power, neg_w)
        if rm.is_zero_grid(power):
            break
        series = rm.mat_add(series, power)
    inv = rm.mat_mul(z0, series)
    return X.with_entries(inv)


def gber(X: GradedMatrix):
    """gdet(|X|_11) gdet(X_22)^{-1} under the parity redivision.

    The unique group homomorphism from invertible degree-0 matrices to the
    units of the commutative degree-0 scalars; on purely even matrices it
    degenerates to the graded determinant.
    """
    _require_degree0(X)
    require_homogeneous(X)
    if not is_invertible0(X):
        raise NotInvertibleError("graded Berezinian needs an invertible matrix")
    r = redivide_2x2(X, "parity")
    even_sizes = [s for s in X.row_ranks.even_sizes if s > 0]
    odd_sizes = [s for s in X.row_ranks.odd_sizes if s > 0]
    if not odd_sizes:
        return _gdet_either_route(X.grid(), even_sizes, X.ring)
    x22 = r.x22.grid()
    x22_inv = invert0(r.x22).grid()
    if even_sizes:
        corner = rm.mat_sub(
            r.x11.grid(),
            rm.mat_mul(r.x12.grid(), rm.mat_mul(x22_inv, r.x21.grid())))
        num = _gdet_either_route(corner, even_sizes, X.ring)
    else:
        num = X.ring.one()
    den = _gdet_either_route(x22, odd_sizes, X.ring)
    return num * den.inverse()


def odd_sandwich_check(X: GradedMatrix, Y: GradedMatrix):
    """Both sides of gdet(I - X12 Y21) = gdet(I + Y21 X12) under the parity
    redivision, with one elementary odd factor; the sign flip against the
    even-halves identity comes from the oddness of the off-blocks."""
    rx = redivide_2x2(X, "parity")
    ry = redivide_2x2(Y, "parity")
    a, b = rx.x12, ry.x21
    nonzero_a = sum(1 for row in a.entries for v in row if not v.is_zero)
    nonzero_b = sum(1 for row in b.entries for v in row if not v.is_zero)
    if min(nonzero_a, nonzero_b) > 1:
        raise ValueError("one off-diagonal factor must be elementary")
    even_sizes = [s for s in X.row_ranks.even_sizes if s > 0]
    odd_sizes = [s for s in X.row_ranks.odd_sizes if s > 0]
    lhs_grid = rm.mat_sub(rm.identity(X.ring, a.shape[0]),
                          rm.mat_mul(a.grid(), b.grid()))
    rhs_grid = rm.mat_add(rm.identity(X.ring, b.shape[0]),
                          rm.mat_mul(b.grid(), a.grid()))
    lhs = gdet_blocks(lhs_grid, even_sizes, X.ring).value
    rhs = gdet_blocks(rhs_grid, odd_sizes, X.ring).value
    return lhs, rhs


# -- Liouville formula ------------------------------------------------------


def series_matrix(X: GradedMatrix, sring: SeriesRing, shift: int = 0) -> GradedMatrix:
    """Lift X into the truncated polynomial ring, multiplied by zeta^shift."""
    if getattr(X.ring, "base", None) is not None:
        raise ValueError("matrix is already series-valued")
    if sring.base != X.ring:
        raise ValueError("series ring must extend the matrix ring")
    pad = (X.ring.zero(),) * shift
    grid = [[NilpotentPoly(sring, pad + (v,)) for v in row] for row in X.entries]
    return GradedMatrix(sring, X.row_ranks, X.col_ranks, X.degree, grid)


def matrix_exp_zeta(X: GradedMatrix, sring: SeriesRing) -> GradedMatrix:
    """exp(zeta X) = sum_k zeta^k X^k / k!, exact in the truncated ring."""
    _require_degree0(X)
    n = X.row_ranks.total
    powers = [rm.identity(X.ring, n)]
    fact = 1
    coeff_grids = [powers[0]]
    for k in range(1, sring.order):
        powers.append(rm.mat_mul(powers[-1], X.grid()))
        fact *= k
        coeff_grids.append(rm.mat_scale_left(X.ring.scalar(1) / fact, powers[-1]))
    grid = [[NilpotentPoly(sring, (coeff_grids[k][i][j] for k in range(sring.order)))
             for j in range(n)] for i in range(n)]
    return GradedMatrix(sring, X.row_ranks, X.col_ranks, X.degree, grid)


def liouville_check(X: GradedMatrix, order: int = 6):
    """Both sides of gber(exp(zeta X)) = exp(gtr(zeta X)) in A[zeta]/(zeta^K).

    exp(zeta X) is congruent to the identity mod zeta, hence always lands in
    the invertible degree-0 matrices.
    """
    _require_degree0(X)
    sring = SeriesRing(X.ring, order)
    lhs = gber(matrix_exp_zeta(X, sring))
    zx = series_matrix(X, sring, shift=1)
    rhs = nilpotent_exp(gtr(zx))
    return lhs, rhs


def _require_degree0(X: GradedMatrix):
    if not X.is_square:
        raise ValueError("square matrix required")
    if not X.degree.is_zero:
        raise ValueError("degree-0 matrix required")
