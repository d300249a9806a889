# Library imports
import logging
from math import gcd
from typing import Any, Iterable
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_serializer, field_validator

# Local imports
from integra.rings import euclid
from integra.rings.elements import RingElement
from integra.rings.homomorphisms import map_payload
from integra.rings.polynomial_rings import RingDescriptor, TowerLayer
from integra.rings.scalar_rings import IntegerRing, ModularRing, RationalRing
from integra.utils.types import Membership, RingMismatch

logger = logging.getLogger(__name__)


def normalize_generators(ring, gens: Iterable[Any]) -> tuple:
    """
    Canonical generator list: zeros dropped, duplicates removed in first-occurrence
    order, Euclidean rings collapsed to one generator, detectable unit ideals to (1,),
    and the zero ideal to (0,).
    """
    kept: list = []
    for g in gens:
        if not ring.is_zero(g) and g not in kept:
            kept.append(g)
    if not kept:
        return (ring.zero(),)
    if isinstance(ring, IntegerRing):
        return (gcd(*kept),)
    if isinstance(ring, ModularRing):
        g = gcd(ring.m, *kept)
        return (ring.zero(),) if g == ring.m else (g,)
    if isinstance(ring, RationalRing):
        return (ring.one(),)
    if euclid.is_field_polynomial_ring(ring):
        return (euclid.polynomial_gcd(ring, kept),)
    if any(ring.is_unit(g) for g in kept):
        return (ring.one(),)
    return tuple(kept)


class Ideal(BaseModel):
    """A finitely generated ideal, kept in normalized form."""

    model_config = ConfigDict(frozen=True)

    ring: RingDescriptor
    gens: tuple[Any, ...]

    @field_validator("gens", mode="before")
    @classmethod
    def normalize(cls, value: Any, info: ValidationInfo) -> tuple:
        ring = info.data.get("ring")
        if ring is None:
            raise ValueError("ideal needs a valid ring")
        if not isinstance(value, (list, tuple)):
            raise ValueError("generators must be a list")
        return normalize_generators(ring, [ring.coerce(g) for g in value])

    @field_serializer("gens")
    def serialize_gens(self, gens: tuple) -> list:
        return [self.ring.to_json(g) for g in gens]

    @classmethod
    def of(cls, ring, gens: Iterable[Any]) -> "Ideal":
        return cls(ring=ring, gens=tuple(gens))

    @classmethod
    def unit(cls, ring) -> "Ideal":
        return cls(ring=ring, gens=(ring.one(),))

    @classmethod
    def zero_ideal(cls, ring) -> "Ideal":
        return cls(ring=ring, gens=(ring.zero(),))

    def is_unit_ideal(self) -> bool:
        return self.gens == (self.ring.one(),)

    def is_zero_ideal(self) -> bool:
        return self.gens == (self.ring.zero(),)

    def generators(self) -> list[RingElement]:
        return [RingElement.model_construct(ring=self.ring, value=g) for g in self.gens]


def conjunction(answers: Iterable[Membership]) -> Membership:
    """Three-valued AND: NotMember wins, then Unknown."""
    seen_unknown = False
    for answer in answers:
        if answer == Membership.NOT_MEMBER:
            return Membership.NOT_MEMBER
        if answer == Membership.UNKNOWN:
            seen_unknown = True
    return Membership.UNKNOWN if seen_unknown else Membership.MEMBER


def contains(ideal: Ideal, x: Any) -> Membership:
    """Membership of the payload x; never answers wrongly, may abstain."""
    ring = ideal.ring
    if ring.is_zero(x) or ideal.is_unit_ideal():
        return Membership.MEMBER
    if ideal.is_zero_ideal():
        return Membership.NOT_MEMBER
    if isinstance(ring, IntegerRing):
        return _decided(x % ideal.gens[0] == 0)
    if isinstance(ring, ModularRing):
        return _decided(x % ideal.gens[0] == 0)
    if euclid.is_field_polynomial_ring(ring):
        return _decided(euclid.polynomial_divides(ring, ideal.gens[0], x))
    if x in ideal.gens:
        return Membership.MEMBER
    if isinstance(ring, TowerLayer) and all(len(g) <= 1 for g in ideal.gens):
        # I·R[v] is I[v], and R[v]/(f) stays free on 1, ..., v^(d-1) for monic f
        constants = Ideal.of(ring.base, [g[0] for g in ideal.gens if g])
        return conjunction(contains(constants, c) for c in ring.coefficients(x))
    logger.debug("membership in %s abstains", ring.label())
    return Membership.UNKNOWN


def _decided(flag: bool) -> Membership:
    return Membership.MEMBER if flag else Membership.NOT_MEMBER


def ideal_membership(x: RingElement, ideal: Ideal) -> Membership:
    if x.ring != ideal.ring:
        raise RingMismatch(f"element of {x.ring.label()} tested against an ideal of {ideal.ring.label()}")
    return contains(ideal, x.value)


def ideal_product(left: Ideal, right: Ideal) -> Ideal:
    if left.ring != right.ring:
        raise RingMismatch("ideals live in different rings")
    ring = left.ring
    return Ideal.of(ring, [ring.mul(a, b) for a in left.gens for b in right.gens])


def extend_ideal(ideal: Ideal, target, bindings=None) -> Ideal:
    return Ideal.of(target, [map_payload(g, ideal.ring, target, bindings) for g in ideal.gens])
