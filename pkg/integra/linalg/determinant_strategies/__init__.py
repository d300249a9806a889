"""
Strategies for computing determinants and characteristic polynomials.
"""

from .determinant_strategy import DeterminantStrategy
from .cofactor_strategy import CofactorStrategy
from .berkowitz_strategy import BerkowitzStrategy

__all__ = ['DeterminantStrategy', 'CofactorStrategy', 'BerkowitzStrategy']
