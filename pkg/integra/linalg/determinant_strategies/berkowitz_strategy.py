# Library imports
from typing import Any, Sequence

# Local imports
from integra.linalg.matrix import multiply_rows


class BerkowitzStrategy:
    """
    Division-free characteristic polynomial.

    Peels the top-left entry a, the rest of the first row R, the rest of the
    first column C and the trailing block A; the characteristic vector of the
    whole matrix is a lower-triangular Toeplitz matrix with first column
    (1, -a, -R·C, -R·A·C, ..., -R·A^(k-2)·C) applied to that of A.
    """

    def characteristic_polynomial(self, ring, rows: Sequence[Sequence[Any]]) -> tuple:
        n = len(rows)
        vector = [ring.one()]
        # innermost block first
        for start in range(n - 1, -1, -1):
            size = n - start
            a = rows[start][start]
            r = [rows[start][j] for j in range(start + 1, n)]
            c = [(rows[i][start],) for i in range(start + 1, n)]
            block = [tuple(rows[i][start + 1 :]) for i in range(start + 1, n)]
            diagonal = [ring.one(), ring.neg(a)]
            column = c
            for _ in range(size - 1):
                diagonal.append(ring.neg(ring.sum(ring.mul(x, y[0]) for x, y in zip(r, column))))
                column = multiply_rows(ring, block, column)
            vector = [
                ring.sum(ring.mul(diagonal[i - j], vector[j]) for j in range(min(i + 1, size)))
                for i in range(size + 1)
            ]
        # vector holds det(X·I - M) highest degree first
        return tuple(reversed(vector))

    def determinant(self, ring, rows: Sequence[Sequence[Any]]) -> Any:
        c0 = self.characteristic_polynomial(ring, rows)[0]
        return c0 if len(rows) % 2 == 0 else ring.neg(c0)
