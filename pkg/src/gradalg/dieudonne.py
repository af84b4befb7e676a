"""Classical Dieudonne determinant of quaternionic matrices through
predeterminants: chained quasiminor products whose norm is independent of the
deletion order.  Serves as an independent oracle for the absolute value of the
graded determinant."""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertibleError, SubmatrixNotInvertibleError
from .matrices import GradedMatrix
from .quasidet import quasidet
from .scalars import Element


def _require_quaternionic(alg):
    if (alg.p, alg.q) != (0, 2) or alg.num_odd:
        raise ValueError("Dieudonne determinants live over the quaternions")


def quat_conj(a: Element) -> Element:
    """Quaternionic conjugation: negate the i, j, k components."""
    _require_quaternionic(a.algebra)
    return Element(a.algebra,
                   {k: (v if k[0] == 0 else -v) for k, v in a.terms.items()})


def quat_norm_sq(a: Element) -> Fraction:
    """||a||^2 = a conj(a), always a rational."""
    prod = a * quat_conj(a)
    if not prod.is_rational():
        raise ValueError("norm square failed to collapse to a rational")
    return prod.scalar_part()


def _as_grid(X):
    if isinstance(X, GradedMatrix):
        _require_quaternionic(X.ring)
        return X.grid(), X.ring
    raise TypeError("expected a GradedMatrix over the quaternions")


def predeterminant(X, rows=None, cols=None) -> Element:
    """D_IJ(X) = |X|_{i1 j1} |X^{i1:j1}|_{i2 j2} ... x_{iN jN}.

    ``rows`` and ``cols`` are 0-based permutations; identity by default.  The
    t-th factor is the quasiminor at the surviving position of (i_t, j_t)
    after the earlier rows and columns have been deleted.  Factors multiply in
    chain order.
    """
    grid, ring = _as_grid(X)
    n = len(grid)
    rows = list(range(n)) if rows is None else list(rows)
    cols = list(range(n)) if cols is None else list(cols)
    if sorted(rows) != list(range(n)) or sorted(cols) != list(range(n)):
        raise ValueError("row and column orders must be permutations")
    live_rows = list(range(n))
    live_cols = list(range(n))
    work = grid
    acc = ring.one()
    for i, j in zip(rows, cols):
        r = live_rows.index(i)
        c = live_cols.index(j)
        acc = acc * quasidet(work, r, c, ring)
        live_rows.pop(r)
        live_cols.pop(c)
        work = [[work[a][b] for b in range(len(work)) if b != c]
                for a in range(len(work)) if a != r]
    return acc


def _greedy_chain(grid, ring):
    """Some defined predeterminant chain, found by scanning positions in
    row-major order; succeeds whenever the matrix is invertible."""
    work = grid
    acc = ring.one()
    while work:
        hit = None
        for r in range(len(work)):
            for c in range(len(work)):
                try:
                    hit = quasidet(work, r, c, ring)
                except SubmatrixNotInvertibleError:
                    continue
                break
            if hit is not None:
                break
        if hit is None:
            raise NotInvertibleError("all predeterminant chains break down")
        acc = acc * hit
        work = [[work[a][b] for b in range(len(work)) if b != c]
                for a in range(len(work)) if a != r]
    return acc


def ddet_squared(X) -> Fraction:
    """||D_IJ(X)||^2 as an exact rational, with a deterministic fallback chain
    when the identity permutations break down."""
    grid, ring = _as_grid(X)
    try:
        d = predeterminant(X)
    except SubmatrixNotInvertibleError:
        d = _greedy_chain(grid, ring)
    return quat_norm_sq(d)


def ddet(X) -> Fraction:
    """The Dieudonne determinant when its square is a perfect rational square;
    otherwise compare squared values via ddet_squared."""
    sq = ddet_squared(X)
    root = _exact_sqrt(sq)
    if root is None:
        raise ValueError("Dieudonne determinant is irrational; use ddet_squared")
    return root


def _exact_sqrt(x: Fraction):
    if x < 0:
        return None
    num = _isqrt_exact(x.numerator)
    den = _isqrt_exact(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _isqrt_exact(n: int):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None
