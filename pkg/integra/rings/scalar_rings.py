# Library imports
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Literal
from pydantic import Field
from sympy import isprime

# Local imports
from integra.rings.base_ring import BaseRing


def _as_int(raw: Any) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ValueError(f"expected an integer, got {raw!r}")
    return raw


@lru_cache(maxsize=256)
def _is_prime(m: int) -> bool:
    return bool(isprime(m))


class IntegerRing(BaseRing):
    ring: Literal["Z"] = "Z"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n

    def add(self, a: int, b: int) -> int:
        return a + b

    def neg(self, a: int) -> int:
        return -a

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def pow(self, a: int, k: int) -> int:
        return a**k

    def coerce(self, raw: Any) -> int:
        return _as_int(raw)

    def to_json(self, a: int) -> int:
        return a

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def label(self) -> str:
        return "Z"


class ModularRing(BaseRing):
    ring: Literal["Zmod"] = "Zmod"
    m: int = Field(ge=2)

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.m

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.m

    def neg(self, a: int) -> int:
        return -a % self.m

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.m

    def mul(self, a: int, b: int) -> int:
        return a * b % self.m

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent")
        return pow(a, k, self.m)

    def coerce(self, raw: Any) -> int:
        return _as_int(raw) % self.m

    def to_json(self, a: int) -> int:
        return a

    def is_unit(self, a: int) -> bool:
        return gcd(a, self.m) == 1

    def is_field(self) -> bool:
        return _is_prime(self.m)

    def label(self) -> str:
        return f"Z/{self.m}"


class RationalRing(BaseRing):
    ring: Literal["Q"] = "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def coerce(self, raw: Any) -> Fraction:
        if isinstance(raw, Fraction):
            return raw
        if isinstance(raw, (list, tuple)):
            if len(raw) != 2:
                raise ValueError(f"expected [numerator, denominator], got {raw!r}")
            num, den = _as_int(raw[0]), _as_int(raw[1])
            if den == 0:
                raise ValueError("zero denominator")
            return Fraction(num, den)
        return Fraction(_as_int(raw))

    def to_json(self, a: Fraction) -> Any:
        if a.denominator == 1:
            return a.numerator
        return [a.numerator, a.denominator]

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def is_field(self) -> bool:
        return True

    def label(self) -> str:
        return "Q"
