# Library imports
from typing import Any
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

# Local imports
from integra.rings.elements import RingElement
from integra.rings.ideals import conjunction, contains
from integra.rings.polynomial_rings import PolynomialRing
from integra.semifiltrations.rules import Semifiltration, ideal_at
from integra.utils.types import HypothesisFailed, Membership, RingMismatch


class ReesHandle(BaseModel):
    """The Rees algebra A[(I_rho)*Y]: polynomials whose i-th coefficient lies in I_i."""

    model_config = ConfigDict(frozen=True)

    semifiltration: Semifiltration
    variable: str = Field(default="Y", min_length=1)

    @model_validator(mode="after")
    def check_variable(self) -> Self:
        if self.variable in self.semifiltration.ring.tower_variables():
            raise ValueError(f"Rees variable '{self.variable}' already occurs in the base ring")
        return self

    @property
    def base(self):
        return self.semifiltration.ring

    @property
    def ambient(self) -> PolynomialRing:
        return PolynomialRing(base=self.base, var=self.variable)


def rees_member_payload(handle: ReesHandle, p: Any) -> Membership:
    sf = handle.semifiltration
    return conjunction(contains(ideal_at(sf, i), c) for i, c in enumerate(p))


def rees_member(handle: ReesHandle, p: RingElement) -> Membership:
    if p.ring != handle.ambient:
        raise RingMismatch(f"{p.ring.label()} is not the ambient ring {handle.ambient.label()}")
    return rees_member_payload(handle, p.value)


def rees_product_witness(handle: ReesHandle, p: RingElement, q: RingElement) -> Membership:
    """Closure of the Rees algebra under multiplication, checked on one pair."""
    for name, factor in (("p", p), ("q", q)):
        if rees_member(handle, factor) != Membership.MEMBER:
            raise HypothesisFailed(f"{name} is not a member of the Rees algebra")
    return rees_member(handle, p * q)
