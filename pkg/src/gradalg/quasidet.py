"""Quasideterminants and block UDL/LDU decompositions over a ring with an
inversion oracle.

A block partition is a tuple of positive sizes summing to the matrix
dimension, with blocks numbered consecutively.  All block arithmetic runs
through the flat elimination kernel with block-aware index maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertibleError, RegularityError, SubmatrixNotInvertibleError
from . import ringmat as rm


def _offsets(sizes):
    out = [0]
    for s in sizes:
        out.append(out[-1] + s)
    return out


def quasidet(grid, i: int, j: int, ring):
    """|X|_{ij} = x_{ij} - r_i^j (X^{i,j})^{-1} c_j^i for square X.

    Defined whenever the complementary submatrix X^{i,j} is invertible, even
    if X itself is singular.
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("quasideterminant needs a square matrix")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("entry index out of range")
    if n == 1:
        return grid[0][0]
    sub = rm.submatrix(grid, {i}, {j})
    try:
        inv = rm.mat_inverse(sub, ring)
    except NotInvertibleError as exc:
        raise SubmatrixNotInvertibleError(
            f"submatrix X^{{{i},{j}}} is not invertible") from exc
    row = [grid[i][c] for c in range(n) if c != j]
    col = [grid[r][j] for r in range(n) if r != i]
    acc = grid[i][j]
    for a in range(n - 1):
        for b in range(n - 1):
            acc = acc - row[a] * inv[a][b] * col[b]
    return acc


def block_quasidet(grid, sizes, k: int, u: int, ring):
    """Block-valued quasiminor |X|_{ku}: X_{ku} - R (X^{k,u})^{-1} C.

    The diagonal blocks of the partition must be square overall; the corner
    block X_{ku} itself may be rectangular.  Returns an r_k x s_u grid.
    """
    p = len(sizes)
    if not (0 <= k < p and 0 <= u < p):
        raise IndexError("block index out of range")
    off = _offsets(sizes)
    rows_k = range(off[k], off[k + 1])
    cols_u = range(off[u], off[u + 1])
    corner = [[grid[r][c] for c in cols_u] for r in rows_k]
    if p == 1:
        return corner
    sub = rm.submatrix(grid, rows_k, cols_u)
    try:
        inv = rm.mat_inverse(sub, ring)
    except NotInvertibleError as exc:
        raise SubmatrixNotInvertibleError(
            f"block submatrix X^{{{k},{u}}} is not invertible") from exc
    rest_cols = [c for c in range(len(grid)) if c not in set(cols_u)]
    rest_rows = [r for r in range(len(grid)) if r not in set(rows_k)]
    R = [[grid[r][c] for c in rest_cols] for r in rows_k]
    C = [[grid[r][c] for c in cols_u] for r in rest_rows]
    return rm.mat_sub(corner, rm.mat_mul(R, rm.mat_mul(inv, C)))


def invert_2x2_block(grid, sizes, ring):
    """Inverse of a 2x2 block matrix ((y, d), (f, z)) via the corner formula
    built on z^{-1} and (y - d z^{-1} f)^{-1}."""
    if len(sizes) != 2:
        raise ValueError("expected a 2-block partition")
    off = _offsets(sizes)
    if off[2] != len(grid):
        raise ValueError("partition does not match the matrix dimension")
    y = [row[: off[1]] for row in grid[: off[1]]]
    d = [row[off[1]:] for row in grid[: off[1]]]
    f = [row[: off[1]] for row in grid[off[1]:]]
    z = [row[off[1]:] for row in grid[off[1]:]]
    z_inv = rm.mat_inverse(z, ring)
    schur = rm.mat_sub(y, rm.mat_mul(d, rm.mat_mul(z_inv, f)))
    h = rm.mat_inverse(schur, ring)
    top_left = h
    top_right = rm.mat_neg(rm.mat_mul(h, rm.mat_mul(d, z_inv)))
    bottom_left = rm.mat_neg(rm.mat_mul(z_inv, rm.mat_mul(f, h)))
    bottom_right = rm.mat_add(
        z_inv, rm.mat_mul(z_inv, rm.mat_mul(f, rm.mat_mul(h, rm.mat_mul(d, z_inv)))))
    return _assemble([[top_left, top_right], [bottom_left, bottom_right]])


def invert_3block(grid, sizes, ring):
    """Inverse of W = ((A,0,B),(C,D,E),(F,0,G)) with zero (1,2) and (3,2)
    blocks, through D^{-1} and the inverse of the corner matrix ((A,B),(F,G))."""
    if len(sizes) != 3:
        raise ValueError("expected a 3-block partition")
    off = _offsets(sizes)
    if off[3] != len(grid):
        raise ValueError("partition does not match the matrix dimension")

    def block(i, j):
        return [row[off[j]: off[j + 1]] for row in grid[off[i]: off[i + 1]]]

    if not (rm.is_zero_grid(block(0, 1)) and rm.is_zero_grid(block(2, 1))):
        raise ValueError("blocks (1,2) and (3,2) must vanish")
    A, B = block(0, 0), block(0, 2)
    C, D, E = block(1, 0), block(1, 1), block(1, 2)
    F, G = block(2, 0), block(2, 2)
    corner = _assemble([[A, B], [F, G]])
    corner_inv = rm.mat_inverse(corner, ring)
    s1, s3 = sizes[0], sizes[2]
    Ap = [row[:s1] for row in corner_inv[:s1]]
    Bp = [row[s1:] for row in corner_inv[:s1]]
    Fp = [row[:s1] for row in corner_inv[s1:]]
    Gp = [row[s1:] for row in corner_inv[s1:]]
    D_inv = rm.mat_inverse(D, ring)
    mid_left = rm.mat_neg(rm.mat_mul(D_inv, rm.mat_add(rm.mat_mul(C, Ap), rm.mat_mul(E, Fp))))
    mid_right = rm.mat_neg(rm.mat_mul(D_inv, rm.mat_add(rm.mat_mul(C, Bp), rm.mat_mul(E, Gp))))
    z12 = rm.zeros(ring, s1, sizes[1])
    z32 = rm.zeros(ring, s3, sizes[1])
    return _assemble([[Ap, z12, Bp], [mid_left, D_inv, mid_right], [Fp, z32, Gp]])


def _assemble(blocks):
    out = []
    for block_row in blocks:
        height = len(block_row[0])
        for r in range(height):
            row = []
            for blk in block_row:
                row.extend(blk[r])
            out.append(row)
    return out


@dataclass(frozen=True)
class TriangularFactors:
    """Unitriangular factors with the block-diagonal middle, plus the
    inverse-free companions: X = frak_u D^{-1} frak_l for the UDL order and
    X = frak_l D^{-1} frak_u for the LDU order."""

    U: list
    D: list
    L: list
    frak_u: list
    frak_l: list


def udl_decompose(grid, sizes, ring) -> TriangularFactors:
    """Block UDL decomposition: X = U D L with U upper and L lower
    unitriangular and D_kk the principal quasiminor |X^{1..k-1,1..k-1}|_{kk}.

    Requires the trailing principal submatrices to be invertible; the first
    failure is reported by name.
    """
    U, D, L = _udl(grid, list(sizes), ring, 0)
    return TriangularFactors(U, D, L, rm.mat_mul(U, D), rm.mat_mul(D, L))


def _udl(grid, sizes, ring, depth):
    _check_partition(grid, sizes)
    n = len(grid)
    if len(sizes) == 1:
        return rm.identity(ring, n), rm.copy_grid(grid), rm.identity(ring, n)
    s0 = sizes[0]
    A = [row[:s0] for row in grid[:s0]]
    B = [row[s0:] for row in grid[:s0]]
    C = [row[:s0] for row in grid[s0:]]
    D_hat = [row[s0:] for row in grid[s0:]]
    try:
        D_inv = rm.mat_inverse(D_hat, ring)
    except NotInvertibleError as exc:
        first = depth + 1
        name = "X^{1..%d,1..%d}" % (first, first)
        raise RegularityError(
            f"principal block submatrix {name} is not invertible", principal=name) from exc
    schur = rm.mat_sub(A, rm.mat_mul(B, rm.mat_mul(D_inv, C)))
    U_in, D_in, L_in = _udl(D_hat, sizes[1:], ring, depth + 1)
    upper_right = rm.mat_mul(B, rm.mat_mul(D_inv, U_in))
    lower_left = rm.mat_mul(L_in, rm.mat_mul(D_inv, C))
    z_up = rm.zeros(ring, n - s0, s0)
    z_right = rm.zeros(ring, s0, n - s0)
    U = _assemble([[rm.identity(ring, s0), upper_right], [z_up, U_in]])
    D = _assemble([[schur, z_right], [z_up, D_in]])
    L = _assemble([[rm.identity(ring, s0), z_right], [lower_left, L_in]])
    return U, D, L


def ldu_decompose(grid, sizes, ring) -> TriangularFactors:
    """Mirror decomposition X = L D U with D_kk the quasiminor of the leading
    k-block principal submatrix at its last block."""
    L, D, U = _ldu(grid, list(sizes), ring, 0)
    return TriangularFactors(U, D, L, rm.mat_mul(D, U), rm.mat_mul(L, D))


def _ldu(grid, sizes, ring, depth):
    _check_partition(grid, sizes)
    n = len(grid)
    if len(sizes) == 1:
        return rm.identity(ring, n), rm.copy_grid(grid), rm.identity(ring, n)
    s0 = sizes[0]
    A = [row[:s0] for row in grid[:s0]]
    B = [row[s0:] for row in grid[:s0]]
    C = [row[:s0] for row in grid[s0:]]
    D_hat = [row[s0:] for row in grid[s0:]]
    try:
        A_inv = rm.mat_inverse(A, ring)
    except NotInvertibleError as exc:
        name = "X^{%d..p,%d..p}" % (depth + 2, depth + 2)
        raise RegularityError(
            f"leading principal block submatrix (depth {depth + 1}, {name}) "
            "is not invertible", principal=name) from exc
    schur = rm.mat_sub(D_hat, rm.mat_mul(C, rm.mat_mul(A_inv, B)))
    L_in, D_in, U_in = _ldu(schur, sizes[1:], ring, depth + 1)
    lower_left = rm.mat_mul(C, A_inv)
    upper_right = rm.mat_mul(A_inv, B)
    z_up = rm.zeros(ring, n - s0, s0)
    z_right = rm.zeros(ring, s0, n - s0)
    L = _assemble([[rm.identity(ring, s0), z_right], [lower_left, L_in]])
    D = _assemble([[A, z_right], [z_up, D_in]])
    U = _assemble([[rm.identity(ring, s0), upper_right], [z_up, U_in]])
    return L, D, U


def _check_partition(grid, sizes):
    if any(s <= 0 for s in sizes):
        raise ValueError("block sizes must be positive")
    if sum(sizes) != len(grid):
        raise ValueError("partition does not match the matrix dimension")
