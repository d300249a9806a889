# Library imports
from typing import Any, Protocol, Sequence


class DeterminantStrategy(Protocol):
    def determinant(self, ring, rows: Sequence[Sequence[Any]]) -> Any:
        """Determinant of a square matrix given as payload rows"""
        pass

    def characteristic_polynomial(self, ring, rows: Sequence[Sequence[Any]]) -> tuple:
        """Coefficients of det(X·I - M), lowest degree first, monic of degree n"""
        pass
