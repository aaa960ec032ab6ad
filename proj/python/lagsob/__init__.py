"""Exact discrete Laguerre-Sobolev orthogonal polynomials.

Polynomials are lists of ``Fraction`` coefficients in ascending order. Matrix
entries and coefficients may be given as ``int``, ``Fraction`` or ``"p/q"``
strings.
"""

from fractions import Fraction

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    InconsistencyError,
    ParseError,
    PreconditionError,
    UnsupportedRegime,
)

__all__ = [
    "laguerre_poly",
    "indefinite_sum",
    "poly_det",
    "build_R",
    "casorati",
    "construct",
    "orthogonality",
    "weighted_rank",
    "operator",
    "verify",
    "reproduce_example",
    "DimensionError",
    "DomainError",
    "InconsistencyError",
    "ParseError",
    "PreconditionError",
    "UnsupportedRegime",
]


def _s(value):
    if isinstance(value, str):
        return value
    return str(Fraction(value))


def _poly_in(p):
    return [_s(c) for c in p]


def _matrix_in(M):
    return [[_s(v) for v in row] for row in M]


def _poly(p):
    return [Fraction(c) for c in p]


def _polys(ps):
    return [_poly(p) for p in ps]


def laguerre_poly(n, alpha):
    return _poly(_core.laguerre_poly(n, _s(alpha)))


def indefinite_sum(f):
    """P with P(x) - P(x-1) = f(x) and P(0) = 0."""
    return _poly(_core.indefinite_sum(_poly_in(f)))


def poly_det(rows):
    return _poly(_core.poly_det([[_poly_in(p) for p in row] for row in rows]))


def build_R(alpha, m, M):
    return _polys(_core.build_R(alpha, m, _matrix_in(M)))


def casorati(alpha, m, M):
    out = _core.casorati(alpha, m, _matrix_in(M))
    out["omega"] = _poly(out["omega"])
    return out


def construct(alpha, m, M, N=10):
    out = _core.construct(alpha, m, _matrix_in(M), N)
    out["q"] = _polys(out["q"])
    out["betas"] = _polys(out["betas"])
    return out


def orthogonality(alpha, m, M, N=10, threads=1):
    out = _core.orthogonality(alpha, m, _matrix_in(M), N, threads)
    out["diagonal"] = _poly(out["diagonal"])
    for issue in out["issues"]:
        issue["residual"] = Fraction(issue["residual"])
    return out


def weighted_rank(M, alpha):
    out = _core.weighted_rank(_matrix_in(M), alpha)
    out["mtilde"] = _polys(out["mtilde"])
    return out


def operator(alpha, m, M, S=(1,), N=10):
    out = _core.operator(alpha, m, _matrix_in(M), _poly_in(S), N)
    for key in ("S", "omega", "PS"):
        out[key] = _poly(out[key])
    out["Mh"] = _polys(out["Mh"])
    out["D"] = _polys(out["D"])
    out["eigenvalues"] = _poly(out["eigenvalues"])
    return out


def verify(alpha, m, M, S=(1,), N=10, threads=1):
    return _core.verify(alpha, m, _matrix_in(M), _poly_in(S), N, threads)


def reproduce_example(threads=1):
    return _core.reproduce_example(threads)
