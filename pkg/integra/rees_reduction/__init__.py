"""
Moving certificates between semifiltration integrality and ring integrality over
Rees algebras, and the combinators built on top of that.
"""

from .models import ReesCertificate, ensure_rees_verified, verify_rees
from .transfer import (
    attach_trivial,
    detach_trivial,
    drop,
    drop_accel,
    drop_two,
    lift,
    lift_accel,
    lift_two,
    reconstruct_target,
    trivial_equiv,
)
from .combinators import (
    degree_one_test,
    semifil_mixed_product,
    semifil_product,
    semifil_sum,
    semifil_transitivity,
    semifil_truncation,
)

__all__ = [
    "ReesCertificate",
    "verify_rees",
    "ensure_rees_verified",
    "lift",
    "drop",
    "lift_two",
    "drop_two",
    "lift_accel",
    "drop_accel",
    "reconstruct_target",
    "attach_trivial",
    "detach_trivial",
    "trivial_equiv",
    "semifil_sum",
    "semifil_mixed_product",
    "semifil_product",
    "semifil_transitivity",
    "semifil_truncation",
    "degree_one_test",
]
