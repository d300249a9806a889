# Library imports
from typing import Annotated, Any, Literal, Union
from pydantic import Field, ValidationInfo, field_serializer, field_validator, model_validator
from typing_extensions import Self

# Local imports
from integra.rings import dense_poly
from integra.rings.base_ring import BaseRing
from integra.rings.scalar_rings import IntegerRing, ModularRing, RationalRing


class TowerLayer(BaseRing):
    """Shared behaviour of the rings that adjoin one variable to a base ring."""

    base: "RingDescriptor"
    var: str = Field(min_length=1)

    @model_validator(mode="after")
    def check_fresh_variable(self) -> Self:
        if self.var in self.base.tower_variables():
            raise ValueError(f"variable '{self.var}' already occurs in the base ring")
        return self

    def zero(self) -> tuple:
        return ()

    def one(self) -> tuple:
        return (self.base.one(),)

    def from_int(self, n: int) -> tuple:
        return self.constant(self.base.from_int(n))

    def constant(self, c: Any) -> tuple:
        return dense_poly.strip(self.base, (c,))

    def add(self, a: tuple, b: tuple) -> tuple:
        return dense_poly.add(self.base, a, b)

    def neg(self, a: tuple) -> tuple:
        return dense_poly.neg(self.base, a)

    def sub(self, a: tuple, b: tuple) -> tuple:
        return dense_poly.sub(self.base, a, b)

    def is_zero(self, a: tuple) -> bool:
        return not a

    def coefficients(self, a: tuple) -> tuple:
        return a

    def to_json(self, a: tuple) -> list:
        return [self.base.to_json(c) for c in a]

    def is_unit(self, a: tuple) -> bool:
        return len(a) == 1 and self.base.is_unit(a[0])

    def tower_variables(self) -> tuple[str, ...]:
        return self.base.tower_variables() + (self.var,)

    def _coerce_coefficients(self, raw: Any) -> tuple:
        if not isinstance(raw, (list, tuple)):
            raise ValueError(f"expected a coefficient list for {self.label()}, got {raw!r}")
        return dense_poly.strip(self.base, [self.base.coerce(c) for c in raw])


class PolynomialRing(TowerLayer):
    ring: Literal["Poly"] = "Poly"

    def mul(self, a: tuple, b: tuple) -> tuple:
        return dense_poly.mul(self.base, a, b)

    def generator(self) -> tuple:
        return (self.base.zero(), self.base.one())

    def coerce(self, raw: Any) -> tuple:
        return self._coerce_coefficients(raw)

    def is_field(self) -> bool:
        return False

    def label(self) -> str:
        return f"{self.base.label()}[{self.var}]"


class MonicQuotientRing(TowerLayer):
    """base[var]/(mod) for a monic mod of degree at least one; a free base-module."""

    ring: Literal["QuotMonic"] = "QuotMonic"
    base: "RingDescriptor"
    mod: tuple[Any, ...]
    var: str = Field(min_length=1)

    @field_validator("mod", mode="before")
    @classmethod
    def coerce_modulus(cls, value: Any, info: ValidationInfo) -> tuple:
        base = info.data.get("base")
        if base is None:
            raise ValueError("modulus needs a valid base ring")
        if not isinstance(value, (list, tuple)):
            raise ValueError("modulus must be a coefficient list")
        coeffs = dense_poly.strip(base, [base.coerce(c) for c in value])
        if len(coeffs) < 2:
            raise ValueError("modulus must have degree at least 1")
        if not base.is_one(coeffs[-1]):
            raise ValueError("modulus must be monic")
        return coeffs

    @field_serializer("mod")
    def serialize_modulus(self, mod: tuple) -> list:
        return [self.base.to_json(c) for c in mod]

    @property
    def degree(self) -> int:
        return len(self.mod) - 1

    def one(self) -> tuple:
        return self.constant(self.base.one())

    def mul(self, a: tuple, b: tuple) -> tuple:
        return self.reduce(dense_poly.mul(self.base, a, b))

    def reduce(self, coeffs) -> tuple:
        return dense_poly.monic_remainder(self.base, coeffs, self.mod)

    def generator(self) -> tuple:
        return self.reduce((self.base.zero(), self.base.one()))

    def coerce(self, raw: Any) -> tuple:
        return self.reduce(self._coerce_coefficients(raw))

    def label(self) -> str:
        return f"{self.base.label()}[{self.var}]/(degree {self.degree})"


RingDescriptor = Annotated[
    Union[IntegerRing, ModularRing, RationalRing, PolynomialRing, MonicQuotientRing],
    Field(discriminator="ring"),
]

TowerLayer.model_rebuild()
PolynomialRing.model_rebuild()
MonicQuotientRing.model_rebuild()


def fresh_variable(prefix: str, *rings) -> str:
    taken = set()
    for ring in rings:
        taken.update(ring.tower_variables())
    if prefix not in taken:
        return prefix
    index = 1
    while f"{prefix}{index}" in taken:
        index += 1
    return f"{prefix}{index}"
