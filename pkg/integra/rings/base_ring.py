# Library imports
import json
from abc import ABC, abstractmethod
from typing import Any
from pydantic import BaseModel, ConfigDict


class BaseRing(BaseModel, ABC):
    """
    A computable commutative ring with unity.

    Elements are plain payloads in canonical form, so payload equality is
    ring equality. Arithmetic never checks which ring a payload came from;
    that is the job of RingElement.
    """

    model_config = ConfigDict(frozen=True)

    @abstractmethod
    def zero(self) -> Any:
        pass

    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def from_int(self, n: int) -> Any:
        pass

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, a: Any) -> Any:
        pass

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def coerce(self, raw: Any) -> Any:
        """Validate a JSON-shaped or Python value and return its canonical payload."""
        pass

    @abstractmethod
    def to_json(self, a: Any) -> Any:
        pass

    @abstractmethod
    def label(self) -> str:
        pass

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero()

    def is_one(self, a: Any) -> bool:
        return a == self.one()

    def pow(self, a: Any, k: int) -> Any:
        if k < 0:
            raise ValueError("negative exponent")
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def sum(self, items) -> Any:
        total = self.zero()
        for item in items:
            total = self.add(total, item)
        return total

    def is_unit(self, a: Any) -> bool:
        """True only when a is detectably invertible."""
        return self.is_one(a) or self.is_one(self.neg(a))

    def is_field(self) -> bool:
        return False

    def tower_variables(self) -> tuple[str, ...]:
        return ()

    def format(self, a: Any) -> str:
        return json.dumps(self.to_json(a), separators=(",", ":"))
