# Library imports
import logging
from typing import Any, Sequence

# Local imports
from integra.linalg.determinant_strategies import BerkowitzStrategy, CofactorStrategy, DeterminantStrategy
from integra.linalg.matrix import Matrix, minor_rows
from integra.rings.elements import RingElement
from integra.rings.polynomial_rings import PolynomialRing, fresh_variable
from integra.utils.types import DimensionMismatch

logger = logging.getLogger(__name__)

COFACTOR_LIMIT = 6

cofactor = CofactorStrategy()
berkowitz = BerkowitzStrategy()


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {m.rows}x{m.cols}")


def pick_strategy(n: int) -> DeterminantStrategy:
    return cofactor if n <= COFACTOR_LIMIT else berkowitz


def determinant_payload(ring, rows: Sequence[Sequence[Any]]) -> Any:
    return pick_strategy(len(rows)).determinant(ring, rows)


def charpoly_coefficients(ring, rows: Sequence[Sequence[Any]]) -> tuple:
    """det(X·I - M), lowest degree first."""
    logger.debug("characteristic polynomial of a %dx%d matrix over %s", len(rows), len(rows), ring.label())
    return berkowitz.characteristic_polynomial(ring, rows)


def adjugate_rows(ring, rows: Sequence[Sequence[Any]]) -> tuple:
    n = len(rows)
    if n == 1:
        return ((ring.one(),),)
    out = []
    for i in range(n):
        out_row = []
        for j in range(n):
            cofactor_value = determinant_payload(ring, minor_rows(rows, j, i))
            out_row.append(cofactor_value if (i + j) % 2 == 0 else ring.neg(cofactor_value))
        out.append(tuple(out_row))
    return tuple(out)


def det(m: Matrix) -> RingElement:
    _require_square(m)
    return RingElement.model_construct(ring=m.ring, value=determinant_payload(m.ring, m.data))


def adjugate(m: Matrix) -> Matrix:
    _require_square(m)
    return Matrix.model_construct(ring=m.ring, rows=m.rows, cols=m.cols, data=adjugate_rows(m.ring, m.data))


def charpoly(m: Matrix, var: str = "X") -> RingElement:
    """Monic characteristic polynomial as an element of m.ring[var]."""
    _require_square(m)
    poly_ring = PolynomialRing(base=m.ring, var=fresh_variable(var, m.ring))
    return RingElement.model_construct(ring=poly_ring, value=charpoly_coefficients(m.ring, m.data))
