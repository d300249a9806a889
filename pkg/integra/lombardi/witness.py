# Library imports
from typing import Any
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_serializer, field_validator, model_validator
from typing_extensions import Self

# Local imports
from integra.rings.homomorphisms import map_payload
from integra.rings.polynomial_rings import RingDescriptor
from integra.utils.types import RelationFailed

Term = tuple[int, int, Any]


class MembershipWitness(BaseModel):
    """
    Coefficients of the two membership relations

        u^n     = sum of c_ij u^i x^j   over i < n, j <= nu
        u^m x^mu = sum of d_ij u^i x^j  over (i < m, j <= mu) or (i <= m, j < mu)

    stored as (i, j, coefficient) terms. The optional algebra context names
    concrete u and x so that derived certificates can be verified.
    """

    model_config = ConfigDict(frozen=True)

    base: RingDescriptor
    n: int = Field(ge=0)
    m: int = Field(ge=0)
    mu: int = Field(ge=0)
    nu: int = Field(ge=0)
    rel1: tuple[Term, ...] = ()
    rel2: tuple[Term, ...] = ()
    algebra: RingDescriptor | None = None
    u: Any = None
    x: Any = None
    bindings: dict[str, Any] | None = None

    @field_validator("rel1", "rel2", mode="before")
    @classmethod
    def coerce_terms(cls, value: Any, info: ValidationInfo) -> tuple:
        base = info.data.get("base")
        if base is None:
            raise ValueError("a valid 'base' ring is required first")
        terms = []
        for term in value:
            if not isinstance(term, (list, tuple)) or len(term) != 3:
                raise ValueError(f"expected [i, j, coefficient], got {term!r}")
            i, j, c = term
            if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
                raise ValueError("exponents must be integers")
            terms.append((i, j, base.coerce(c)))
        return tuple(terms)

    @field_validator("u", "x", mode="before")
    @classmethod
    def coerce_context(cls, value: Any, info: ValidationInfo) -> Any:
        if value is None:
            return None
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("elements need an 'algebra'")
        return algebra.coerce(value)

    @field_validator("bindings", mode="before")
    @classmethod
    def coerce_bindings(cls, value: Any, info: ValidationInfo) -> Any:
        if not value:
            return None
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("bindings need an 'algebra'")
        return {var: algebra.coerce(image) for var, image in dict(value).items()}

    @field_serializer("rel1", "rel2")
    def serialize_terms(self, terms: tuple) -> list:
        return [[i, j, self.base.to_json(c)] for i, j, c in terms]

    @field_serializer("u", "x")
    def serialize_context(self, value: Any) -> Any:
        return None if value is None else self.algebra.to_json(value)

    @field_serializer("bindings")
    def serialize_bindings(self, value: dict | None) -> dict | None:
        if value is None:
            return None
        return {var: self.algebra.to_json(image) for var, image in value.items()}

    @model_validator(mode="after")
    def check_ranges(self) -> Self:
        if self.mu + self.nu < 1:
            raise ValueError("mu + nu must be at least 1")
        for i, j, _ in self.rel1:
            if not (0 <= i < self.n and 0 <= j <= self.nu):
                raise ValueError(f"rel1 term ({i}, {j}) outside i < {self.n}, j <= {self.nu}")
        for i, j, _ in self.rel2:
            low = 0 <= i < self.m and 0 <= j <= self.mu
            high = 0 <= i <= self.m and 0 <= j < self.mu
            if not (low or high):
                raise ValueError(f"rel2 term ({i}, {j}) outside the allowed index ranges")
        if self.algebra is not None and (self.u is None or self.x is None):
            raise ValueError("an algebra context needs both 'u' and 'x'")
        return self

    @property
    def has_context(self) -> bool:
        return self.algebra is not None

    @property
    def degree(self) -> int:
        return self.n * self.mu + self.m * self.nu

    def basis(self) -> "BasisIndexSet":
        return BasisIndexSet(n=self.n, m=self.m, mu=self.mu, nu=self.nu)

    def monomial_value(self, i: int, j: int) -> Any:
        algebra = self.algebra
        return algebra.mul(algebra.pow(self.u, i), algebra.pow(self.x, j))

    def combination_value(self, terms) -> Any:
        algebra = self.algebra
        total = algebra.zero()
        for i, j, c in terms:
            image = map_payload(c, self.base, algebra, self.bindings)
            total = algebra.add(total, algebra.mul(image, self.monomial_value(i, j)))
        return total

    def relation_defects(self) -> tuple[Any, Any]:
        """Left side minus right side of both relations, evaluated in the algebra."""
        algebra = self.algebra
        first = algebra.sub(self.monomial_value(self.n, 0), self.combination_value(self.rel1))
        second = algebra.sub(self.monomial_value(self.m, self.mu), self.combination_value(self.rel2))
        return first, second

    def check_relations(self) -> None:
        for value in self.relation_defects():
            if not self.algebra.is_zero(value):
                raise RelationFailed(self.algebra.format(value))


class BasisIndexSet(BaseModel):
    """({0..n-1} x {0..mu-1}) union ({0..m-1} x {mu..mu+nu-1}) in lexicographic order."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    mu: int
    nu: int

    @property
    def members(self) -> tuple[tuple[int, int], ...]:
        found = {(i, j) for i in range(self.n) for j in range(self.mu)}
        found |= {(i, j) for i in range(self.m) for j in range(self.mu, self.mu + self.nu)}
        return tuple(sorted(found))

    @property
    def positions(self) -> dict[tuple[int, int], int]:
        return {pair: k for k, pair in enumerate(self.members)}

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return (0 <= i < self.n and 0 <= j < self.mu) or (0 <= i < self.m and self.mu <= j < self.mu + self.nu)

    def __len__(self) -> int:
        return len(self.members)
