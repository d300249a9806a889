"""
Quotient towers A[z_1]/(P_1)[z_2]/(P_2)... used as free A-modules.

Coordinates put the outermost variable slowest, so for A[X]/(P)[Y]/(Q) the
basis reads 1, X, ..., X^(m-1), Y, XY, ..., X^(m-1)Y^(n-1).
"""

# Library imports
import logging
from typing import Any, Sequence
from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

# Local imports
from integra.linalg.operations import charpoly_coefficients
from integra.rings import dense_poly
from integra.rings.polynomial_rings import MonicQuotientRing, RingDescriptor, fresh_variable

logger = logging.getLogger(__name__)


class QuotientFrame(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: RingDescriptor
    top: RingDescriptor

    @model_validator(mode="after")
    def check_tower(self) -> Self:
        ring = self.top
        while ring != self.base:
            if not isinstance(ring, MonicQuotientRing):
                raise ValueError("a frame is a tower of monic quotients over its base")
            ring = ring.base
        return self

    @classmethod
    def over(cls, base) -> "QuotientFrame":
        return cls(base=base, top=base)

    def adjoin(self, coeffs: Sequence[Any], prefix: str) -> "QuotientFrame":
        """Adjoin a root of a monic polynomial with coefficients in the current top ring."""
        layer = MonicQuotientRing(base=self.top, mod=tuple(coeffs), var=fresh_variable(prefix, self.top))
        return QuotientFrame(base=self.base, top=layer)

    def layers(self) -> list[MonicQuotientRing]:
        out = []
        ring = self.top
        while ring != self.base:
            out.append(ring)
            ring = ring.base
        return out[::-1]

    @property
    def rank(self) -> int:
        rank = 1
        for layer in self.layers():
            rank *= layer.degree
        return rank

    def lift(self, a: Any, level: int) -> Any:
        """Embed a payload of the ring at the given level (0 = base) into the top ring."""
        layers = self.layers()
        for layer in layers[level:]:
            a = layer.constant(a)
        return a

    def generator(self, level: int) -> Any:
        """The adjoined root of layer number level (1-based) as an element of the top ring."""
        layer = self.layers()[level - 1]
        return self.lift(layer.generator(), level)

    def flatten(self, a: Any) -> list:
        return _flatten(self.top, self.base, a)

    def basis(self) -> list:
        return _basis(self.top, self.base)

    def multiplication_rows(self, z: Any) -> tuple:
        top = self.top
        return tuple(tuple(self.flatten(top.mul(z, b))) for b in self.basis())

    def characteristic_polynomial(self, z: Any) -> tuple:
        """Monic polynomial over the base annihilating z, of degree exactly the rank."""
        rows = self.multiplication_rows(z)
        logger.debug("frame of rank %d over %s", len(rows), self.base.label())
        return charpoly_coefficients(self.base, rows)


def _flatten(ring, base, a: Any) -> list:
    if ring == base:
        return [a]
    out = []
    for j in range(ring.degree):
        out.extend(_flatten(ring.base, base, dense_poly.coefficient(ring.base, a, j)))
    return out


def _basis(ring, base) -> list:
    if ring == base:
        return [base.one()]
    inner = _basis(ring.base, base)
    return [dense_poly.monomial(ring.base, b, j) for j in range(ring.degree) for b in inner]


def bivariate_frame(base, p: Sequence[Any], q: Sequence[Any]) -> QuotientFrame:
    """A[X,Y]/(P(X), Q(Y)) for monic P and Q over A."""
    frame = QuotientFrame.over(base).adjoin(p, "X")
    inner = frame.top
    return frame.adjoin([inner.constant(c) for c in q], "Y")
