# Library imports
import logging
from typing import Any

# Local imports
from integra.certificates.models import RingCertificate, SemifilCertificate
from integra.certificates.constructors import attach_semifiltration
from integra.certificates.verification import ensure_verified, require_verified
from integra.rings import dense_poly
from integra.rings.polynomial_rings import PolynomialRing, fresh_variable
from integra.rees_reduction.models import ReesCertificate, ensure_rees_verified, verify_rees
from integra.semifiltrations.rees import ReesHandle
from integra.semifiltrations.rules import AcceleratedRule, ProductRule, Semifiltration, TrivialRule
from integra.utils.types import (
    BadLambda,
    DerivationOptions,
    HypothesisFailed,
    MalformedCertificate,
    NotMonicAfterExtraction,
    RingMismatch,
    UnverifiedInput,
    VerdictStatus,
)

logger = logging.getLogger(__name__)


def rees_variable(base, algebra, prefix: str = "Y") -> str:
    return fresh_variable(prefix, base, algebra)


def lift_bindings(bindings: dict[str, Any] | None, algebra: PolynomialRing) -> dict[str, Any] | None:
    if not bindings:
        return None
    return {var: algebra.constant(image) for var, image in bindings.items()}


def drop_bindings(bindings: dict[str, Any] | None, algebra: PolynomialRing) -> dict[str, Any] | None:
    if not bindings:
        return None
    out = {}
    for var, image in bindings.items():
        if len(image) > 1:
            raise MalformedCertificate(f"binding for '{var}' involves {algebra.var}")
        out[var] = dense_poly.coefficient(algebra.base, image, 0)
    return out


def extend_scalars(c: RingCertificate, base: PolynomialRing, algebra: PolynomialRing) -> RingCertificate:
    """The same polynomial viewed over A[Y], certifying the constant u in B[Y]."""
    return RingCertificate(
        base=base,
        algebra=algebra,
        element=algebra.constant(c.element),
        coeffs=tuple(base.constant(a) for a in c.coeffs),
        bindings=lift_bindings(c.bindings, algebra),
    )


def _lift(
    c: SemifilCertificate,
    inner: Semifiltration,
    lam: int,
    outer: Semifiltration | None,
    operation: str,
    variable: str | None,
    options: DerivationOptions | None,
    accelerated: bool | None = None,
) -> ReesCertificate:
    require_verified(c)
    base, algebra = c.base, c.algebra
    handle = ReesHandle(semifiltration=inner, variable=variable or rees_variable(base, algebra))
    ambient = handle.ambient
    target = PolynomialRing(base=algebra, var=handle.variable)
    n = c.degree
    lifted = RingCertificate(
        base=ambient,
        algebra=target,
        element=dense_poly.monomial(algebra, c.element, lam),
        coeffs=tuple(dense_poly.monomial(base, a, lam * (n - k)) for k, a in enumerate(c.coeffs)),
        bindings=lift_bindings(c.bindings, target),
    )
    logger.debug("%s: degree %d, lambda %d", operation, n, lam)
    rc = ReesCertificate(
        handle=handle, outer=outer, certificate=lifted, element=c.element, lam=lam, accelerated=accelerated
    )
    return ensure_rees_verified(rc, operation, options)


def reconstruct_target(rc: ReesCertificate) -> Semifiltration:
    """Product(Accelerated(I, lambda), J) with the trivial parts left out."""
    inner = rc.handle.semifiltration
    target = inner if rc.lam == 1 and not rc.accelerated else AcceleratedRule(inner=inner, lam=rc.lam)
    if rc.outer is not None:
        target = ProductRule(left=target, right=rc.outer)
    return target


def _drop(
    rc: ReesCertificate, target: Semifiltration | None, operation: str, options: DerivationOptions | None
) -> SemifilCertificate:
    verdict = verify_rees(rc)
    if verdict.status == VerdictStatus.REFUTED:
        raise UnverifiedInput(f"Rees certificate does not verify: {verdict.line()}")
    base = rc.handle.base
    if target is None:
        target = reconstruct_target(rc)
    elif target.ring != base:
        raise RingMismatch(f"target semifiltration lives in {target.ring.label()}, expected {base.label()}")
    n, lam = rc.degree, rc.lam
    coeffs = tuple(dense_poly.coefficient(base, p, lam * (n - k)) for k, p in enumerate(rc.certificate.coeffs))
    if not base.is_one(coeffs[-1]):
        raise NotMonicAfterExtraction(base.format(coeffs[-1]))
    algebra = rc.certificate.algebra
    out = SemifilCertificate(
        base=base,
        algebra=algebra.base,
        element=rc.element,
        coeffs=coeffs,
        semifiltration=target,
        bindings=drop_bindings(rc.certificate.bindings, algebra),
    )
    return ensure_verified(out, operation, options)


def lift(
    c: SemifilCertificate, options: DerivationOptions | None = None, variable: str | None = None
) -> ReesCertificate:
    """u over (A, (I_rho)) to uY over A[(I_rho)*Y]."""
    return _lift(c, c.semifiltration, 1, None, "rees-lift", variable, options)


def drop(
    rc: ReesCertificate, target: Semifiltration | None = None, options: DerivationOptions | None = None
) -> SemifilCertificate:
    if rc.lam != 1:
        raise BadLambda(f"expected a certificate for uY, got lambda = {rc.lam}")
    return _drop(rc, target, "rees-drop", options)


def lift_two(
    c: SemifilCertificate, options: DerivationOptions | None = None, variable: str | None = None
) -> ReesCertificate:
    """u over (A, (I_rho J_rho)) to uY over (A_[I], (J_tau A_[I]))."""
    sf = c.semifiltration
    if not isinstance(sf, ProductRule):
        raise HypothesisFailed("the semifiltration must be a product I·J")
    return _lift(c, sf.left, 1, sf.right, "rees-lift2", variable, options)


def drop_two(
    rc: ReesCertificate, target: Semifiltration | None = None, options: DerivationOptions | None = None
) -> SemifilCertificate:
    if rc.outer is None:
        raise HypothesisFailed("the Rees certificate carries no outer semifiltration")
    if rc.lam != 1:
        raise BadLambda(f"expected a certificate for uY, got lambda = {rc.lam}")
    return _drop(rc, target, "rees-drop2", options)


def split_accelerated(sf: Semifiltration, lam: int) -> tuple[Semifiltration, Semifiltration | None]:
    match sf:
        case AcceleratedRule(lam=inner_lam, inner=inner) if inner_lam == lam:
            return inner, None
        case ProductRule(left=AcceleratedRule(lam=inner_lam, inner=inner), right=right) if inner_lam == lam:
            return inner, right
    if lam == 1:
        return sf, None
    raise BadLambda(f"the semifiltration is not accelerated by {lam}")


def lift_accel(
    c: SemifilCertificate, lam: int, options: DerivationOptions | None = None, variable: str | None = None
) -> ReesCertificate:
    """u over (A, (I_(lambda rho) J_rho)) to uY^lambda over (A_[I], (J_tau A_[I]))."""
    if lam < 0:
        raise BadLambda("lambda must be a natural number")
    sf = c.semifiltration
    inner, outer = split_accelerated(sf, lam)
    source = sf.left if isinstance(sf, ProductRule) else sf
    accelerated = True if isinstance(source, AcceleratedRule) and source.inner == inner else None
    return _lift(c, inner, lam, outer, "rees-accel", variable, options, accelerated)


def drop_accel(
    rc: ReesCertificate, target: Semifiltration | None = None, options: DerivationOptions | None = None
) -> SemifilCertificate:
    return _drop(rc, target, "rees-accel-backward", options)


def attach_trivial(c: RingCertificate) -> SemifilCertificate:
    return attach_semifiltration(c, TrivialRule(ring=c.base))


def detach_trivial(c: SemifilCertificate) -> RingCertificate:
    if not isinstance(c.semifiltration, TrivialRule):
        raise HypothesisFailed("the semifiltration is not the trivial one")
    return c.ring_part()


def trivial_equiv(c: RingCertificate) -> RingCertificate:
    """Detach the trivial semifiltration from a semifiltration certificate, attach it to a plain one."""
    if isinstance(c, SemifilCertificate):
        return detach_trivial(c)
    return attach_trivial(c)
