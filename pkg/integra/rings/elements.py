# Library imports
from typing import Any, Literal, Mapping, Sequence
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_serializer, field_validator

# Local imports
from integra.rings import dense_poly
from integra.rings.homomorphisms import map_payload
from integra.rings.polynomial_rings import PolynomialRing, RingDescriptor
from integra.utils.types import RingMismatch


class RingElement(BaseModel):
    """An element of a ring descriptor, stored in canonical form."""

    model_config = ConfigDict(frozen=True)

    ring: RingDescriptor
    value: Any

    @field_validator("value", mode="before")
    @classmethod
    def canonicalize(cls, value: Any, info: ValidationInfo) -> Any:
        ring = info.data.get("ring")
        if ring is None:
            raise ValueError("element needs a valid ring")
        return ring.coerce(value)

    @field_serializer("value")
    def serialize_value(self, value: Any) -> Any:
        return self.ring.to_json(value)

    @classmethod
    def of(cls, ring, value: Any) -> "RingElement":
        return cls(ring=ring, value=value)

    def _same_ring(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise RingMismatch(
                f"cannot combine elements of {self.ring.label()} and "
                f"{other.ring.label() if isinstance(other, RingElement) else type(other).__name__}"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        return ring_arith("add", self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return ring_arith("sub", self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_arith("mul", self, other)

    def __neg__(self) -> "RingElement":
        return ring_arith("neg", self)

    def __pow__(self, k: int) -> "RingElement":
        return RingElement(ring=self.ring, value=self.ring.pow(self.value, k))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def __str__(self) -> str:
        return self.ring.format(self.value)


def ring_arith(op: Literal["add", "sub", "mul", "neg"], a: RingElement, b: RingElement | None = None) -> RingElement:
    ring = a.ring
    match op:
        case "neg":
            value = ring.neg(a.value)
        case "add":
            a._same_ring(b)
            value = ring.add(a.value, b.value)
        case "sub":
            a._same_ring(b)
            value = ring.sub(a.value, b.value)
        case "mul":
            a._same_ring(b)
            value = ring.mul(a.value, b.value)
        case _:
            raise ValueError(f"unknown ring operation '{op}'")
    return RingElement.model_construct(ring=ring, value=value)


def ring_eq(a: RingElement, b: RingElement) -> bool:
    a._same_ring(b)
    return a.value == b.value


def ring_pow(a: RingElement, k: int) -> RingElement:
    return RingElement.model_construct(ring=a.ring, value=a.ring.pow(a.value, k))


def generator(ring) -> RingElement:
    return RingElement.model_construct(ring=ring, value=ring.generator())


def constant(ring, c: Any) -> RingElement:
    return RingElement.model_construct(ring=ring, value=ring.constant(c))


def hom(a: RingElement, target, bindings: Mapping[str, RingElement] | None = None) -> RingElement:
    """Structure map into target; bindings send named tower variables to elements of target."""
    raw = {}
    for var, image in (bindings or {}).items():
        if image.ring != target:
            raise RingMismatch(f"binding for '{var}' does not live in {target.label()}")
        raw[var] = image.value
    return RingElement.model_construct(ring=target, value=map_payload(a.value, a.ring, target, raw))


def embed(a: RingElement, target) -> RingElement:
    return hom(a, target)


def poly_eval(p: RingElement, u: RingElement, bindings: Mapping[str, RingElement] | None = None) -> RingElement:
    """Evaluate p in A[X] at u in B: sum of embed(a_i)·u^i by Horner's scheme."""
    if not isinstance(p.ring, PolynomialRing):
        raise RingMismatch(f"{p.ring.label()} is not a polynomial ring")
    return evaluate_coefficients(p.ring.base, p.value, u, bindings)


def evaluate_coefficients(
    base, coeffs: Sequence[Any], u: RingElement, bindings: Mapping[str, RingElement] | None = None
) -> RingElement:
    raw = {var: image.value for var, image in (bindings or {}).items()}
    target = u.ring
    mapped = [map_payload(c, base, target, raw) for c in coeffs]
    return RingElement.model_construct(ring=target, value=dense_poly.evaluate(target, mapped, u.value))
