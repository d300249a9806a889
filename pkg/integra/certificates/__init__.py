"""
Integrality certificates over rings and over ideal semifiltrations.
"""

from .models import ModulePresentation, RingCertificate, SemifilCertificate
from .verification import check_action, ensure_verified, evaluate_claim, require_verified, verify, verify_ring, verify_semifil
from .constructors import attach_semifiltration, forget_semifiltration, module_to_cert, nilpotency_cert, pad

__all__ = [
    "RingCertificate",
    "SemifilCertificate",
    "ModulePresentation",
    "verify_ring",
    "verify_semifil",
    "verify",
    "require_verified",
    "ensure_verified",
    "evaluate_claim",
    "check_action",
    "pad",
    "nilpotency_cert",
    "module_to_cert",
    "attach_semifiltration",
    "forget_semifiltration",
]
