"""
Matrices over supported rings and division-free determinant machinery.
"""

from .matrix import Matrix, mat_arith, mat_poly_eval
from .operations import adjugate, charpoly, charpoly_coefficients, det, determinant_payload

__all__ = [
    "Matrix",
    "mat_arith",
    "mat_poly_eval",
    "det",
    "adjugate",
    "charpoly",
    "charpoly_coefficients",
    "determinant_payload",
]
