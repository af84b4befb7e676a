"""Seeded generation of graded matrices for the property suites.

Entries are degree-respecting basis monomials times integers in [-9, 9];
invertibility is enforced by rejection sampling against the odd-ideal test.
"""

from __future__ import annotations

import random

from .berezinian import is_invertible0
from .errors import GradAlgError
from .grading import GroupElement
from .matrices import GradedMatrix, RankVector
from .scalars import Algebra


def random_element(rng: random.Random, alg: Algebra, degree: GroupElement,
                   bound: int = 9, allow_zero: bool = True):
    """A random multiple of one basis monomial of the requested degree."""
    monomials = alg.monomials_by_degree().get(degree)
    if not monomials:
        raise GradAlgError(f"algebra realizes no monomial of degree {degree}")
    if allow_zero:
        c = rng.randint(-bound, bound)
        if c == 0:
            return alg.zero()
    else:
        c = rng.randint(1, bound)
        if rng.random() < 0.5:
            c = -c
    cl, odd = rng.choice(monomials)
    return alg.monomial(cl, odd, c)


def random_matrix(rng: random.Random, alg: Algebra, ranks: RankVector,
                  degree: GroupElement = None, bound: int = 9) -> GradedMatrix:
    degree = degree if degree is not None else GroupElement.zero(ranks.m)
    n = ranks.total
    grid = []
    for r in range(n):
        wr = ranks.weight(r)
        row = []
        for c in range(n):
            want = wr + ranks.weight(c) + degree
            row.append(random_element(rng, alg, want, bound))
        grid.append(row)
    return GradedMatrix(alg, ranks, ranks, degree, grid)


def random_invertible(rng: random.Random, alg: Algebra, ranks: RankVector,
                      bound: int = 9, max_tries: int = 500) -> GradedMatrix:
    """A random invertible degree-0 matrix, by rejection."""
    for _ in range(max_tries):
        X = random_matrix(rng, alg, ranks, bound=bound)
        if is_invertible0(X):
            return X
    raise GradAlgError("could not sample an invertible matrix")


def random_graded_invertible(rng: random.Random, alg: Algebra, ranks: RankVector,
                             degree: GroupElement, bound: int = 9,
                             max_tries: int = 500) -> GradedMatrix:
    """A random invertible homogeneous matrix of the requested even degree,
    as a degree-unit multiple of an invertible degree-0 one."""
    from .determinant import _degree_unit
    from .matrices import scalar_mul

    if degree.is_zero:
        return random_invertible(rng, alg, ranks, bound, max_tries)
    q = _degree_unit(alg, degree)
    x0 = random_invertible(rng, alg, ranks, bound, max_tries)
    return scalar_mul(q, x0)
