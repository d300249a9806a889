"""
Computable commutative rings, their elements, structure maps and ideals.
"""

from .base_ring import BaseRing
from .scalar_rings import IntegerRing, ModularRing, RationalRing
from .polynomial_rings import MonicQuotientRing, PolynomialRing, RingDescriptor, TowerLayer, fresh_variable
from .elements import RingElement, constant, embed, evaluate_coefficients, generator, hom, poly_eval, ring_arith, ring_eq, ring_pow
from .ideals import Ideal, conjunction, contains, extend_ideal, ideal_membership, ideal_product

__all__ = [
    "BaseRing",
    "IntegerRing",
    "ModularRing",
    "RationalRing",
    "PolynomialRing",
    "MonicQuotientRing",
    "RingDescriptor",
    "TowerLayer",
    "fresh_variable",
    "RingElement",
    "ring_arith",
    "ring_eq",
    "ring_pow",
    "embed",
    "hom",
    "poly_eval",
    "evaluate_coefficients",
    "generator",
    "constant",
    "Ideal",
    "ideal_membership",
    "ideal_product",
    "extend_ideal",
    "contains",
    "conjunction",
]
