"""Dense matrix kernel over a noncommutative scalar ring.

Grids are lists of row lists whose entries support +, -, *, ``is_zero`` and
``inverse()``.  One exact elimination routine serves every block operation in
the package: pivots are searched downward for an invertible entry, mirroring
the formal regime in which all needed inverses are assumed to exist.
"""

from __future__ import annotations

from .errors import NotInvertibleError


def zeros(ring, rows: int, cols: int):
    z = ring.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(ring, size: int):
    g = zeros(ring, size, size)
    one = ring.one()
    for i in range(size):
        g[i][i] = one
    return g


def copy_grid(grid):
    return [row[:] for row in grid]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"inner dimension mismatch: {len(a[0])} vs {len(b)}")
    out = []
    for row in a:
        out_row = []
        for j in range(len(b[0]) if b else 0):
            acc = None
            for k, x in enumerate(row):
                term = x * b[k][j]
                acc = term if acc is None else acc + term
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_scale_left(s, a):
    return [[s * x for x in row] for row in a]


def mat_pow(grid, k: int, ring):
    acc = identity(ring, len(grid))
    for _ in range(k):
        acc = mat_mul(acc, grid)
    return acc


def grids_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        if any(x != y for x, y in zip(ra, rb)):
            return False
    return True


def is_zero_grid(a) -> bool:
    return all(x.is_zero for row in a for x in row)


def submatrix(grid, del_rows, del_cols):
    del_rows = set(del_rows)
    del_cols = set(del_cols)
    return [[x for c, x in enumerate(row) if c not in del_cols]
            for r, row in enumerate(grid) if r not in del_rows]


def mat_inverse(grid, ring):
    """Exact inverse by row elimination with invertible-pivot search.

    Raises NotInvertibleError when some column offers no invertible pivot;
    over a division-ring scalar this happens exactly for singular input.
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("matrix must be square")
    a = copy_grid(grid)
    inv = identity(ring, n)
    for col in range(n):
        piv_row = None
        piv_inv = None
        for r in range(col, n):
            x = a[r][col]
            if x.is_zero:
                continue
            try:
                piv_inv = x.inverse()
            except NotInvertibleError:
                continue
            piv_row = r
            break
        if piv_row is None:
            raise NotInvertibleError(f"no invertible pivot in column {col}")
        if piv_row != col:
            a[col], a[piv_row] = a[piv_row], a[col]
            inv[col], inv[piv_row] = inv[piv_row], inv[col]
        a[col] = [piv_inv * x for x in a[col]]
        inv[col] = [piv_inv * x for x in inv[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f.is_zero:
                continue
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def commutative_det(grid, ring):
    """Classical determinant by first-row cofactor expansion.

    Only meaningful when the entries commute with each other (degree-0
    diagonal quasiminors land in the commutative subalgebra).
    """
    n = len(grid)
    if n == 0:
        return ring.one()
    if any(len(row) != n for row in grid):
        raise ValueError("matrix must be square")
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    acc = None
    for j, x in enumerate(grid[0]):
        if x.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = x * commutative_det(minor, ring)
        if j & 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc if acc is not None else ring.zero()
