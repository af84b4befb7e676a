"""Command-line front end: load and validate matrices, run the computations,
and drive seeded property sweeps with machine-readable reports.

Exit codes: 0 success, 1 property failure, 2 schema violation, 3 homogeneity
violation, 4 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .berezinian import gber, liouville_check
from .determinant import gdet_certified, gdet_graded, multilinear_coefficients
from .dieudonne import ddet_squared
from .errors import GradAlgError, HomogeneityError, SchemaError
from .jsonio import (canonical_json, matrix_digest, matrix_from_json,
                     ranks_from_json, terms_to_json)
from .matrices import mat_mul
from .scalars import quaternions
from .trace import gtr

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_SCHEMA = 2
EXIT_HOMOGENEITY = 3
EXIT_COMPUTE = 4

PROPERTIES = ("multiplicativity", "heredity", "homological", "liouville",
              "dieudonne", "udl")


def _load_matrix(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc
    return matrix_from_json(obj)


def _emit(obj):
    print(canonical_json(obj))


def _scalar_json(value):
    if hasattr(value, "coeffs"):
        return {"series": [terms_to_json(c) for c in value.coeffs]}
    return {"terms": terms_to_json(value)}


def cmd_gtr(args):
    X = _load_matrix(args.input)
    _emit({"gtr": _scalar_json(gtr(X))})
    return EXIT_OK


def cmd_gdet(args):
    X = _load_matrix(args.input)
    if X.degree.is_zero:
        result = gdet_certified(X, route=args.route)
        _emit({"gdet": _scalar_json(result.value),
               "factors": [_scalar_json(f) for f in result.factors],
               "route": args.route})
    else:
        value = gdet_graded(X, strict=not args.lax)
        _emit({"gdet": _scalar_json(value), "degree": list(X.degree.bits())})
    return EXIT_OK


def cmd_gdet_coeffs(args):
    pattern = _load_matrix(args.pattern)
    coeffs = multilinear_coefficients(pattern)
    table = [{"perm": list(sigma), "coeff": _scalar_json(c)}
             for sigma, c in sorted(coeffs.items())]
    if args.normalized:
        from .determinant import normalized_coefficients
        table = [{"perm": list(sigma), "coeff": _scalar_json(c)}
                 for sigma, c in sorted(normalized_coefficients(pattern).items())]
    _emit({"coefficients": table, "normalized": bool(args.normalized)})
    return EXIT_OK


def cmd_gber(args):
    X = _load_matrix(args.input)
    _emit({"gber": _scalar_json(gber(X))})
    return EXIT_OK


def cmd_ddet(args):
    X = _load_matrix(args.input)
    sq = ddet_squared(X)
    _emit({"ddet_squared": {"num": sq.numerator, "den": sq.denominator}})
    return EXIT_OK


def cmd_liouville(args):
    X = _load_matrix(args.input)
    lhs, rhs = liouville_check(X, order=args.order)
    passed = lhs == rhs
    _emit({"lhs": _scalar_json(lhs), "rhs": _scalar_json(rhs),
           "order": args.order, "result": "PASS" if passed else "FAIL"})
    return EXIT_OK if passed else EXIT_PROPERTY


def _trial_multiplicativity(rng, alg, ranks):
    from .determinant import gdet0
    from .errors import RegularityError
    from .randgen import random_invertible
    while True:
        X = random_invertible(rng, alg, ranks)
        Y = random_invertible(rng, alg, ranks)
        try:
            ok = gdet0(mat_mul(X, Y)) == gdet0(X) * gdet0(Y)
        except RegularityError:
            continue
        return ok, (X, Y)


def _trial_heredity(rng, alg, ranks):
    from .errors import NotInvertibleError, SubmatrixNotInvertibleError
    from .quasidet import block_quasidet, quasidet
    from .randgen import random_matrix
    sizes = [s for s in ranks.ranks if s > 0]
    while True:
        X = random_matrix(rng, alg, ranks)
        grid = X.grid()
        k = rng.randrange(len(sizes))
        base = sum(sizes[:k])
        try:
            inner = block_quasidet(grid, sizes, k, k, alg)
            ok = True
            for a in range(sizes[k]):
                for b in range(sizes[k]):
                    lhs = quasidet(inner, a, b, alg)
                    rhs = quasidet(grid, base + a, base + b, alg)
                    ok = ok and lhs == rhs
        except (SubmatrixNotInvertibleError, NotInvertibleError):
            continue
        return ok, (X,)


def _trial_homological(rng, alg, ranks):
    from .errors import NotInvertibleError, SubmatrixNotInvertibleError
    from .quasidet import quasidet
    from .randgen import random_matrix
    n = ranks.total
    while True:
        X = random_matrix(rng, alg, ranks)
        grid = X.grid()
        i, j = rng.randrange(n), rng.randrange(n)
        l = rng.choice([c for c in range(n) if c != j])
        r = rng.choice([a for a in range(n) if a != i])
        s = rng.choice([c for c in range(n) if c != j])

        def minor_q(di, dj, a, b):
            sub = [[grid[r2][c2] for c2 in range(n) if c2 != dj]
                   for r2 in range(n) if r2 != di]
            return quasidet(sub, a - (a > di), b - (b > dj), alg)

        try:
            row_ok = (quasidet(grid, i, j, alg) * minor_q(i, l, r, j).inverse()
                      == -(quasidet(grid, i, l, alg) * minor_q(i, j, r, l).inverse()))
            kk = rng.choice([a for a in range(n) if a != i])
            col_ok = (minor_q(kk, j, i, s).inverse() * quasidet(grid, i, j, alg)
                      == -(minor_q(i, j, kk, s).inverse() * quasidet(grid, kk, j, alg)))
        except (SubmatrixNotInvertibleError, NotInvertibleError):
            continue
        return row_ok and col_ok, (X,)


def _trial_liouville(rng, alg, ranks, order=4):
    from .randgen import random_matrix
    X = random_matrix(rng, alg, ranks, bound=5)
    lhs, rhs = liouville_check(X, order=order)
    return lhs == rhs, (X,)


def _trial_dieudonne(rng, alg, ranks):
    from .determinant import gdet0
    from .errors import NotInvertibleError, RegularityError
    from .randgen import random_invertible
    while True:
        X = random_invertible(rng, alg, ranks)
        try:
            g = gdet0(X)
            sq = ddet_squared(X)
        except (RegularityError, NotInvertibleError):
            continue
        return g * g == alg.scalar(sq), (X,)


def _trial_udl(rng, alg, ranks):
    from . import ringmat as rm
    from .errors import NotInvertibleError, RegularityError
    from .quasidet import udl_decompose
    from .randgen import random_matrix
    sizes = [s for s in ranks.ranks if s > 0]
    while True:
        X = random_matrix(rng, alg, ranks)
        grid = X.grid()
        try:
            fac = udl_decompose(grid, sizes, alg)
            d_inv = rm.mat_inverse(fac.D, alg)
        except (RegularityError, NotInvertibleError):
            continue
        ok = rm.grids_equal(rm.mat_mul(fac.U, rm.mat_mul(fac.D, fac.L)), grid)
        ok = ok and rm.grids_equal(
            rm.mat_mul(fac.frak_u, rm.mat_mul(d_inv, fac.frak_l)), grid)
        return ok, (X,)


_TRIALS = {
    "multiplicativity": _trial_multiplicativity,
    "heredity": _trial_heredity,
    "homological": _trial_homological,
    "liouville": _trial_liouville,
    "dieudonne": _trial_dieudonne,
    "udl": _trial_udl,
}


def cmd_check(args):
    alg = quaternions()
    try:
        ranks = ranks_from_json([int(r) for r in args.ranks.split(",")], alg.arity)
    except ValueError as exc:
        raise SchemaError(f"bad ranks: {exc}") from exc
    seed = args.seed
    env_seed = os.environ.get("GRADALG_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError as exc:
            raise SchemaError("GRADALG_SEED must be an integer") from exc
    rng = random.Random(seed)
    runner = _TRIALS[args.property]
    trials = []
    all_pass = True
    for index in range(args.trials):
        ok, matrices = runner(rng, alg, ranks)
        all_pass = all_pass and ok
        trials.append({
            "index": index,
            "inputs": [matrix_digest(M) for M in matrices],
            "pass": bool(ok),
        })
    report = {
        "property": args.property,
        "seed": seed,
        "ranks": list(ranks.ranks),
        "trials": trials,
        "all_pass": bool(all_pass),
    }
    _emit(report)
    return EXIT_OK if all_pass else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradalg",
        description="Exact graded linear algebra over Clifford algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gtr", help="graded trace of a matrix")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_gtr)

    p = sub.add_parser("gdet", help="graded determinant")
    p.add_argument("--input", required=True)
    p.add_argument("--route", choices=("udl", "ldu"), default="udl")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", default=True)
    mode.add_argument("--lax", action="store_true")
    p.set_defaults(func=cmd_gdet)

    p = sub.add_parser("gdet-coeffs", help="permutation coefficient table")
    p.add_argument("--pattern", required=True)
    p.add_argument("--normalized", action="store_true",
                   help="divide out the row-ordered monomial products")
    p.set_defaults(func=cmd_gdet_coeffs)

    p = sub.add_parser("gber", help="graded Berezinian")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_gber)

    p = sub.add_parser("ddet", help="squared Dieudonne determinant")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_ddet)

    p = sub.add_parser("liouville", help="check gber(exp(zX)) = exp(gtr(zX))")
    p.add_argument("--input", required=True)
    p.add_argument("--order", type=int, default=6)
    p.set_defaults(func=cmd_liouville)

    p = sub.add_parser("check", help="seeded property sweep")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ranks", default="1,1,1,1")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except HomogeneityError as exc:
        print(f"homogeneity error: {exc}", file=sys.stderr)
        return EXIT_HOMOGENEITY
    except GradAlgError as exc:
        print(f"computation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
