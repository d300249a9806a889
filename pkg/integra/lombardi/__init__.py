"""
Integrality from membership relations: the basis rewriting engine and the
joint constructions for u integral over A[x] and over A[y].
"""

from .witness import BasisIndexSet, MembershipWitness
from .rewriting import RewriteStep, action_rows, lombardi_cert, lombardi_polynomial, normal_form, rewrite_steps
from .joint import adapt_y_to_x, extract_nu, joint_cert, product_base_cert, relative_joint_cert

__all__ = [
    "MembershipWitness",
    "BasisIndexSet",
    "RewriteStep",
    "rewrite_steps",
    "normal_form",
    "action_rows",
    "lombardi_polynomial",
    "lombardi_cert",
    "adapt_y_to_x",
    "extract_nu",
    "joint_cert",
    "product_base_cert",
    "relative_joint_cert",
]
