# Library imports
import logging

# Local imports
from integra.certificates.models import ModulePresentation, RingCertificate, SemifilCertificate
from integra.linalg.operations import charpoly_coefficients
from integra.rings.elements import RingElement
from integra.rings.ideals import Ideal
from integra.semifiltrations.rules import PowersRule
from integra.utils.types import DegreeTooSmall, DimensionMismatch

logger = logging.getLogger(__name__)


def pad(c: RingCertificate, p: int) -> RingCertificate:
    """Certificate for X^(p-n)·P(X)."""
    if p < c.degree:
        raise DegreeTooSmall(p, c.degree)
    coeffs = (c.base.zero(),) * (p - c.degree) + tuple(c.coeffs)
    return c.model_copy(update={"coeffs": coeffs})


def nilpotency_cert(base, u: RingElement, n: int) -> SemifilCertificate:
    """X^n over the powers of the zero ideal; verifies exactly when u^n = 0."""
    if u.ring != base:
        raise DimensionMismatch("the element must live in the given ring")
    if n < 0:
        raise DegreeTooSmall(n, 0)
    return SemifilCertificate(
        base=base,
        algebra=base,
        element=u.value,
        coeffs=(base.zero(),) * n + (base.one(),),
        semifiltration=PowersRule(ideal=Ideal.zero_ideal(base)),
    )


def module_to_cert(mp: ModulePresentation) -> RingCertificate:
    """det(X·I - S) for the action matrix S; vanishes at u when the module is faithful."""
    if not mp.action.is_square or mp.action.rows != len(mp.generators):
        raise DimensionMismatch("action matrix does not match the generator count")
    logger.debug("module of rank %d", len(mp.generators))
    return RingCertificate(
        base=mp.base,
        algebra=mp.algebra,
        element=mp.element,
        coeffs=charpoly_coefficients(mp.base, mp.action.data),
        bindings=mp.bindings,
    )


def attach_semifiltration(c: RingCertificate, semifiltration) -> SemifilCertificate:
    return SemifilCertificate(
        base=c.base,
        algebra=c.algebra,
        element=c.element,
        coeffs=c.coeffs,
        bindings=c.bindings,
        semifiltration=semifiltration,
    )


def forget_semifiltration(c: SemifilCertificate) -> RingCertificate:
    return c.ring_part()
