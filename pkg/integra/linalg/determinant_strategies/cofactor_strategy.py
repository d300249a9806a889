# Library imports
from typing import Any, Sequence

# Local imports
from integra.linalg.matrix import minor_rows
from integra.rings.polynomial_rings import PolynomialRing, fresh_variable


class CofactorStrategy:
    """Laplace expansion along the first row. Exponential; meant for small n."""

    def determinant(self, ring, rows: Sequence[Sequence[Any]]) -> Any:
        n = len(rows)
        if n == 0:
            return ring.one()
        if n == 1:
            return rows[0][0]
        total = ring.zero()
        for j, a in enumerate(rows[0]):
            if ring.is_zero(a):
                continue
            term = ring.mul(a, self.determinant(ring, minor_rows(rows, 0, j)))
            total = ring.add(total, term) if j % 2 == 0 else ring.sub(total, term)
        return total

    def characteristic_polynomial(self, ring, rows: Sequence[Sequence[Any]]) -> tuple:
        poly_ring = PolynomialRing(base=ring, var=fresh_variable("X", ring))
        shifted = [
            [
                poly_ring.sub(poly_ring.generator() if i == j else poly_ring.zero(), poly_ring.constant(x))
                for j, x in enumerate(row)
            ]
            for i, row in enumerate(rows)
        ]
        return tuple(self.determinant(poly_ring, shifted))
