"""
Ideal semifiltrations, their bounded validation and Rees-algebra membership.
"""

from .rules import (
    AcceleratedRule,
    ConstantRule,
    ExplicitRule,
    ExtendedRule,
    PowersRule,
    ProductRule,
    Semifiltration,
    TrivialRule,
    accelerated,
    extended,
    ideal_at,
    powers,
    product,
    trivial,
)
from .validation import ValidationReport, validate
from .rees import ReesHandle, rees_member, rees_member_payload, rees_product_witness

__all__ = [
    "Semifiltration",
    "PowersRule",
    "ConstantRule",
    "TrivialRule",
    "ProductRule",
    "AcceleratedRule",
    "ExtendedRule",
    "ExplicitRule",
    "ideal_at",
    "powers",
    "trivial",
    "product",
    "accelerated",
    "extended",
    "validate",
    "ValidationReport",
    "ReesHandle",
    "rees_member",
    "rees_member_payload",
    "rees_product_witness",
]
