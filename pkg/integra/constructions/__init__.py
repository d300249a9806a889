"""
Certificate transformers for integrality over a ring.
"""

from .frames import QuotientFrame, bivariate_frame
from .ring_integrality import (
    diff_cert,
    inverse_like_cert,
    merge_bindings,
    negate_cert,
    product_cert,
    scalar_cert,
    shift_monic,
    sum_cert,
    transitivity_cert,
    truncation_cert,
    two_sided_cert,
)

__all__ = [
    "QuotientFrame",
    "bivariate_frame",
    "merge_bindings",
    "scalar_cert",
    "shift_monic",
    "sum_cert",
    "product_cert",
    "negate_cert",
    "diff_cert",
    "transitivity_cert",
    "truncation_cert",
    "two_sided_cert",
    "inverse_like_cert",
]
