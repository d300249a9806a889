"""
Euclidean algorithms for univariate polynomials over Q and GF(p), backed by sympy.
"""

# Library imports
from fractions import Fraction
from functools import reduce
from typing import Any, Sequence
from sympy import GF, QQ, Poly, Rational, Symbol

# Local imports
from integra.rings.polynomial_rings import PolynomialRing
from integra.rings.scalar_rings import ModularRing, RationalRing

_X = Symbol("x")


def is_field_polynomial_ring(ring) -> bool:
    return isinstance(ring, PolynomialRing) and isinstance(ring.base, (RationalRing, ModularRing)) and ring.base.is_field()


def _domain(ring):
    if isinstance(ring.base, RationalRing):
        return QQ
    return GF(ring.base.m)


def _to_sympy(ring, p: Sequence[Any]) -> Poly:
    if isinstance(ring.base, RationalRing):
        coeffs = [Rational(c.numerator, c.denominator) for c in reversed(p)]
    else:
        coeffs = [int(c) for c in reversed(p)]
    return Poly(coeffs or [0], _X, domain=_domain(ring))


def _from_sympy(ring, poly: Poly) -> tuple:
    if poly.is_zero:
        return ()
    if isinstance(ring.base, RationalRing):
        coeffs = [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]
    else:
        coeffs = [int(c) % ring.base.m for c in poly.all_coeffs()]
    return tuple(reversed(coeffs))


def polynomial_gcd(ring, polys: Sequence[Sequence[Any]]) -> tuple:
    """Monic gcd of the given polynomials (zero if all are zero)."""
    nonzero = [_to_sympy(ring, p) for p in polys if p]
    if not nonzero:
        return ()
    g = reduce(lambda f, h: f.gcd(h), nonzero)
    return _from_sympy(ring, g.monic())


def polynomial_divides(ring, g: Sequence[Any], x: Sequence[Any]) -> bool:
    if not g:
        return not x
    return _to_sympy(ring, x).rem(_to_sympy(ring, g)).is_zero
