# Library imports
from functools import lru_cache
from typing import Annotated, Literal, Union
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

# Local imports
from integra.rings.homomorphisms import map_payload
from integra.rings.ideals import Ideal, ideal_product
from integra.rings.polynomial_rings import RingDescriptor
from integra.utils.types import NoCanonicalMap


class PowersRule(BaseModel):
    """(I^rho): the powers of one ideal."""

    model_config = ConfigDict(frozen=True)

    semifil: Literal["powers"] = "powers"
    ideal: Ideal

    @property
    def ring(self):
        return self.ideal.ring


class ConstantRule(BaseModel):
    """(A, I, I, I, ...)"""

    model_config = ConfigDict(frozen=True)

    semifil: Literal["const"] = "const"
    ideal: Ideal

    @property
    def ring(self):
        return self.ideal.ring


class TrivialRule(BaseModel):
    """(A, A, A, ...)"""

    model_config = ConfigDict(frozen=True)

    semifil: Literal["trivial"] = "trivial"
    ring: RingDescriptor


class ProductRule(BaseModel):
    model_config = ConfigDict(frozen=True)

    semifil: Literal["product"] = "product"
    left: "Semifiltration"
    right: "Semifiltration"

    @model_validator(mode="after")
    def check_rings(self) -> Self:
        if self.left.ring != self.right.ring:
            raise ValueError("factors of a product semifiltration must share a ring")
        return self

    @property
    def ring(self):
        return self.left.ring


class AcceleratedRule(BaseModel):
    """(I_{lambda·rho})"""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    semifil: Literal["accel"] = "accel"
    lam: int = Field(alias="lambda", ge=0)
    inner: "Semifiltration"

    @property
    def ring(self):
        return self.inner.ring


class ExtendedRule(BaseModel):
    """(I_rho·A') for an A-algebra A' reached by the canonical map."""

    model_config = ConfigDict(frozen=True)

    semifil: Literal["extend"] = "extend"
    inner: "Semifiltration"
    target: RingDescriptor

    @model_validator(mode="after")
    def check_map(self) -> Self:
        source = self.inner.ring
        try:
            map_payload(source.one(), source, self.target)
        except NoCanonicalMap as exc:
            raise ValueError(str(exc)) from exc
        return self

    @property
    def ring(self):
        return self.target


class ExplicitRule(BaseModel):
    """Listed ideals for the first indices, then the tail rule at the same index."""

    model_config = ConfigDict(frozen=True)

    semifil: Literal["explicit"] = "explicit"
    prefix: tuple[Ideal, ...]
    tail: "Semifiltration"

    @model_validator(mode="after")
    def check_rings(self) -> Self:
        if any(ideal.ring != self.tail.ring for ideal in self.prefix):
            raise ValueError("prefix ideals must live in the ring of the tail")
        return self

    @property
    def ring(self):
        return self.tail.ring


Semifiltration = Annotated[
    Union[PowersRule, ConstantRule, TrivialRule, ProductRule, AcceleratedRule, ExtendedRule, ExplicitRule],
    Field(discriminator="semifil"),
]

ProductRule.model_rebuild()
AcceleratedRule.model_rebuild()
ExtendedRule.model_rebuild()
ExplicitRule.model_rebuild()


@lru_cache(maxsize=4096)
def ideal_at(rule: Semifiltration, rho: int) -> Ideal:
    """The rho-th ideal of the semifiltration."""
    if rho < 0:
        raise ValueError("semifiltration index must be non-negative")
    ring = rule.ring
    match rule:
        case PowersRule(ideal=ideal):
            result = Ideal.unit(ring)
            for _ in range(rho):
                result = ideal_product(result, ideal)
            return result
        case ConstantRule(ideal=ideal):
            return Ideal.unit(ring) if rho == 0 else ideal
        case TrivialRule():
            return Ideal.unit(ring)
        case ProductRule(left=left, right=right):
            return ideal_product(ideal_at(left, rho), ideal_at(right, rho))
        case AcceleratedRule(lam=lam, inner=inner):
            return ideal_at(inner, lam * rho)
        case ExtendedRule(inner=inner, target=target):
            source = ideal_at(inner, rho)
            return Ideal.of(target, [map_payload(g, source.ring, target) for g in source.gens])
        case ExplicitRule(prefix=prefix, tail=tail):
            return prefix[rho] if rho < len(prefix) else ideal_at(tail, rho)
    raise TypeError(f"unknown semifiltration rule {rule!r}")


def trivial(ring) -> TrivialRule:
    return TrivialRule(ring=ring)


def powers(ideal: Ideal) -> PowersRule:
    return PowersRule(ideal=ideal)


def accelerated(inner, lam: int):
    return AcceleratedRule(inner=inner, lam=lam)


def product(left, right) -> ProductRule:
    return ProductRule(left=left, right=right)


def extended(inner, target):
    if inner.ring == target:
        return inner
    return ExtendedRule(inner=inner, target=target)
