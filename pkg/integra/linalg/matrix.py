# Library imports
from typing import Any, Literal, Sequence
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_serializer, field_validator, model_validator
from typing_extensions import Self

# Local imports
from integra.rings.polynomial_rings import RingDescriptor
from integra.utils.types import DimensionMismatch, RingMismatch

Rows = tuple[tuple[Any, ...], ...]


class Matrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    ring: RingDescriptor
    rows: int
    cols: int
    data: Rows

    @field_validator("data", mode="before")
    @classmethod
    def coerce_entries(cls, value: Any, info: ValidationInfo) -> Rows:
        ring = info.data.get("ring")
        if ring is None:
            raise ValueError("matrix needs a valid ring")
        return tuple(tuple(ring.coerce(x) for x in row) for row in value)

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        if len(self.data) != self.rows or any(len(row) != self.cols for row in self.data):
            raise ValueError(f"data does not have shape {self.rows}x{self.cols}")
        return self

    @field_serializer("data")
    def serialize_data(self, data: Rows) -> list:
        return [[self.ring.to_json(x) for x in row] for row in data]

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence[Any]]) -> "Matrix":
        rows = tuple(tuple(row) for row in rows)
        cols = len(rows[0]) if rows else 0
        return cls(ring=ring, rows=len(rows), cols=cols, data=rows)

    @classmethod
    def identity(cls, ring, n: int) -> "Matrix":
        return cls.from_rows(ring, identity_rows(ring, n))

    @classmethod
    def zero(cls, ring, rows: int, cols: int) -> "Matrix":
        return cls(ring=ring, rows=rows, cols=cols, data=tuple((ring.zero(),) * cols for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Any:
        return self.data[i][j]

    def transpose(self) -> "Matrix":
        return Matrix.model_construct(
            ring=self.ring, rows=self.cols, cols=self.rows, data=tuple(zip(*self.data)) if self.data else ()
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_arith("add", self, other)

    def __mul__(self, other: "Matrix") -> "Matrix":
        return mat_arith("mul", self, other)


def identity_rows(ring, n: int) -> Rows:
    return tuple(tuple(ring.one() if i == j else ring.zero() for j in range(n)) for i in range(n))


def multiply_rows(ring, a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Rows:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out_row = []
        for j in range(cols):
            acc = ring.zero()
            for k in range(inner):
                if not ring.is_zero(row[k]):
                    acc = ring.add(acc, ring.mul(row[k], b[k][j]))
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def minor_rows(rows: Sequence[Sequence[Any]], i: int, j: int) -> Rows:
    return tuple(tuple(x for c, x in enumerate(row) if c != j) for r, row in enumerate(rows) if r != i)


def mat_arith(
    op: Literal["add", "mul", "scalar_mul"], a: Any, b: Any
) -> Matrix:
    """add and mul take two matrices; scalar_mul takes a payload of the ring and a matrix."""
    match op:
        case "add":
            _check_rings(a, b)
            if (a.rows, a.cols) != (b.rows, b.cols):
                raise DimensionMismatch(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
            ring = a.ring
            data = tuple(tuple(ring.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.data, b.data))
            return Matrix.model_construct(ring=ring, rows=a.rows, cols=a.cols, data=data)
        case "mul":
            _check_rings(a, b)
            if a.cols != b.rows:
                raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
            data = multiply_rows(a.ring, a.data, b.data)
            return Matrix.model_construct(ring=a.ring, rows=a.rows, cols=b.cols, data=data)
        case "scalar_mul":
            ring = b.ring
            data = tuple(tuple(ring.mul(a, x) for x in row) for row in b.data)
            return Matrix.model_construct(ring=ring, rows=b.rows, cols=b.cols, data=data)
        case _:
            raise ValueError(f"unknown matrix operation '{op}'")


def _check_rings(a: Matrix, b: Matrix) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"matrices over {a.ring.label()} and {b.ring.label()}")


def mat_poly_eval(coeffs: Sequence[Any], m: Matrix) -> Matrix:
    """Substitute a square matrix into a polynomial with coefficients in m.ring."""
    if not m.is_square:
        raise DimensionMismatch("polynomial substitution needs a square matrix")
    ring = m.ring
    n = m.rows
    acc = Matrix.zero(ring, n, n)
    eye = Matrix.identity(ring, n)
    for c in reversed(coeffs):
        acc = mat_arith("add", mat_arith("mul", acc, m), mat_arith("scalar_mul", c, eye))
    return acc
