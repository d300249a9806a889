# Library imports
from typing import Any
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_serializer, field_validator, model_validator
from typing_extensions import Self

# Local imports
from integra.linalg.matrix import Matrix
from integra.rings.elements import RingElement
from integra.rings.polynomial_rings import RingDescriptor
from integra.semifiltrations.rules import Semifiltration


def _ring_from(info: ValidationInfo, name: str):
    ring = info.data.get(name)
    if ring is None:
        raise ValueError(f"a valid '{name}' ring is required first")
    return ring


class AlgebraContext(BaseModel):
    """A ring A, an A-algebra B, an element of B and optional images of A's tower variables."""

    model_config = ConfigDict(frozen=True)

    base: RingDescriptor
    algebra: RingDescriptor
    element: Any
    bindings: dict[str, Any] | None = None

    @field_validator("element", mode="before")
    @classmethod
    def coerce_element(cls, value: Any, info: ValidationInfo) -> Any:
        return _ring_from(info, "algebra").coerce(value)

    @field_validator("bindings", mode="before")
    @classmethod
    def coerce_bindings(cls, value: Any, info: ValidationInfo) -> Any:
        if value is None:
            return None
        algebra = _ring_from(info, "algebra")
        return {var: algebra.coerce(image) for var, image in dict(value).items()} or None

    @field_serializer("element")
    def serialize_element(self, value: Any) -> Any:
        return self.algebra.to_json(value)

    @field_serializer("bindings")
    def serialize_bindings(self, value: dict | None) -> dict | None:
        if value is None:
            return None
        return {var: self.algebra.to_json(image) for var, image in value.items()}

    @property
    def element_value(self) -> RingElement:
        return RingElement.model_construct(ring=self.algebra, value=self.element)

    def binding_elements(self) -> dict[str, RingElement]:
        return {var: RingElement.model_construct(ring=self.algebra, value=image) for var, image in (self.bindings or {}).items()}


class RingCertificate(AlgebraContext):
    """
    Witness that element is n-integral over base: a monic polynomial
    a_0 + a_1 X + ... + a_n X^n over base vanishing at element.
    """

    coeffs: tuple[Any, ...]

    @field_validator("coeffs", mode="before")
    @classmethod
    def coerce_coeffs(cls, value: Any, info: ValidationInfo) -> tuple:
        base = _ring_from(info, "base")
        if not isinstance(value, (list, tuple)):
            raise ValueError("coeffs must be a list")
        return tuple(base.coerce(c) for c in value)

    @field_serializer("coeffs")
    def serialize_coeffs(self, value: tuple) -> list:
        return [self.base.to_json(c) for c in value]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_elements(self) -> list[RingElement]:
        return [RingElement.model_construct(ring=self.base, value=c) for c in self.coeffs]

    def ring_part(self) -> "RingCertificate":
        return RingCertificate(
            base=self.base, algebra=self.algebra, element=self.element, coeffs=self.coeffs, bindings=self.bindings
        )


class SemifilCertificate(RingCertificate):
    """A ring certificate whose coefficients also satisfy a_i in I_{n-i}."""

    semifiltration: Semifiltration

    @model_validator(mode="after")
    def check_semifiltration_ring(self) -> Self:
        if self.semifiltration.ring != self.base:
            raise ValueError("the semifiltration must live in the base ring")
        return self


class ModulePresentation(AlgebraContext):
    """
    Generators m_1..m_n of an A-submodule of B with u·m_k = sum_i a_{k,i} m_i,
    the a_{k,i} being the rows of action.
    """

    generators: tuple[Any, ...]
    action: Matrix

    @field_validator("generators", mode="before")
    @classmethod
    def coerce_generators(cls, value: Any, info: ValidationInfo) -> tuple:
        algebra = _ring_from(info, "algebra")
        return tuple(algebra.coerce(g) for g in value)

    @field_serializer("generators")
    def serialize_generators(self, value: tuple) -> list:
        return [self.algebra.to_json(g) for g in value]

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        n = len(self.generators)
        if self.action.ring != self.base:
            raise ValueError("the action matrix must have entries in the base ring")
        if (self.action.rows, self.action.cols) != (n, n):
            raise ValueError(f"the action matrix must be {n}x{n}")
        return self
