"""The graded trace: the unique weight-0 Lie-algebra map from graded matrices
to scalars, normalized so a single 1 in the first diagonal slot traces to 1."""

from __future__ import annotations

from .errors import GradAlgError, NotInvertibleError
from .matrices import GradedMatrix, mat_mul, mat_pow, matrix_inverse


def gtr(X: GradedMatrix):
    """Sum over diagonal blocks of (-1)^<w_k + x, w_k> tr(X_kk).

    Arbitrary matrices are traced part by part: every homogeneous piece of a
    diagonal entry already sits in degree w_k + w_k + x = x, so its own degree
    plays the role of x and the declared degree is never consulted.
    """
    if not X.is_square:
        raise ValueError("trace needs a square matrix")
    ranks = X.row_ranks
    total = X.ring.zero()
    for alpha in range(ranks.total):
        v = X.entries[alpha][alpha]
        if v.is_zero:
            continue
        w = ranks.weight(alpha)
        for part_degree, part in v.graded_parts():
            if (w + part_degree).pair(w):
                total = total - part
            else:
                total = total + part
    return total


def lax_invariants(X: GradedMatrix, G: GradedMatrix, kmax: int):
    """gtr(X^k) for k = 1..kmax, checked against the conjugated family.

    G must be invertible of degree 0; the returned values equal
    gtr((G X G^-1)^k), which the function verifies before returning.
    """
    if not G.degree.is_zero:
        raise ValueError("conjugating matrix must have degree 0")
    try:
        G_inv = matrix_inverse(G)
    except NotInvertibleError as exc:
        raise NotInvertibleError("conjugating matrix is not invertible") from exc
    conj = mat_mul(G, mat_mul(X, G_inv))
    out = []
    for k in range(1, kmax + 1):
        lhs = gtr(mat_pow(X, k))
        rhs = gtr(mat_pow(conj, k))
        if lhs != rhs:
            raise GradAlgError(f"trace invariant gtr(X^{k}) moved under conjugation")
        out.append(lhs)
    return out
