# Library imports
import logging
from typing import Any, Mapping, Sequence

# Local imports
from integra.certificates.models import RingCertificate, SemifilCertificate
from integra.certificates.constructors import attach_semifiltration
from integra.certificates.verification import require_verified
from integra.constructions.ring_integrality import product_cert, sum_cert, transitivity_cert, truncation_cert
from integra.rings import dense_poly
from integra.rings.elements import RingElement
from integra.rings.homomorphisms import map_payload
from integra.rings.ideals import Ideal, contains
from integra.rings.polynomial_rings import PolynomialRing, TowerLayer
from integra.rings.scalar_rings import IntegerRing, ModularRing, RationalRing
from integra.rees_reduction.models import ReesCertificate
from integra.rees_reduction.transfer import (
    drop,
    drop_accel,
    drop_two,
    extend_scalars,
    lift,
    lift_bindings,
    rees_variable,
)
from integra.semifiltrations.rees import ReesHandle
from integra.semifiltrations.rules import ExtendedRule, Semifiltration, extended, ideal_at
from integra.utils.types import (
    BadIndex,
    DegreeOneStatus,
    DerivationOptions,
    HypothesisFailed,
    MalformedCertificate,
    Membership,
    RingMismatch,
)

logger = logging.getLogger(__name__)


def _same_rings(cx: RingCertificate, cy: RingCertificate) -> None:
    if cx.base != cy.base or cx.algebra != cy.algebra:
        raise RingMismatch("certificates must share the base ring and the algebra")


def semifil_sum(
    cx: SemifilCertificate, cy: SemifilCertificate, options: DerivationOptions | None = None
) -> SemifilCertificate:
    """xY + yY = (x+y)Y, summed over the Rees algebra."""
    _same_rings(cx, cy)
    if cx.semifiltration != cy.semifiltration:
        raise RingMismatch("both certificates must use the same semifiltration")
    variable = rees_variable(cx.base, cx.algebra)
    lx = lift(cx, options, variable)
    ly = lift(cy, options, variable)
    total = sum_cert(lx.certificate, ly.certificate, options)
    rc = ReesCertificate(
        handle=lx.handle, certificate=total, element=cx.algebra.add(cx.element, cy.element), lam=1
    )
    return drop(rc, cx.semifiltration, options)


def semifil_mixed_product(
    cx: SemifilCertificate, cy: RingCertificate, options: DerivationOptions | None = None
) -> SemifilCertificate:
    """xY·y = xyY, with y viewed over A[Y] through its constant coefficients."""
    _same_rings(cx, cy)
    require_verified(cy, "second")
    lx = lift(cx, options)
    cert = lx.certificate
    cy_ext = extend_scalars(cy, cert.base, cert.algebra)
    prod = product_cert(cert, cy_ext, options)
    rc = ReesCertificate(
        handle=lx.handle, certificate=prod, element=cx.algebra.mul(cx.element, cy.element), lam=1
    )
    return drop(rc, cx.semifiltration, options)


def semifil_product(
    cx: SemifilCertificate, cy: SemifilCertificate, options: DerivationOptions | None = None
) -> SemifilCertificate:
    """x over (A, (I_rho)) and y over (A, (J_rho)) give xy over (A, (I_rho J_rho))."""
    _same_rings(cx, cy)
    require_verified(cy, "second")
    lx = lift(cx, options)
    ambient, target = lx.certificate.base, lx.certificate.algebra
    plain = extend_scalars(cy, ambient, target)
    cy_ext = attach_semifiltration(plain, extended(cy.semifiltration, ambient))
    inner = semifil_mixed_product(cy_ext, lx.certificate, options)
    rc = ReesCertificate(
        handle=lx.handle,
        outer=cy.semifiltration,
        certificate=inner.ring_part(),
        element=cx.algebra.mul(cx.element, cy.element),
        lam=1,
    )
    return drop_two(rc, None, options)


def semifil_transitivity(
    cv: RingCertificate, cu: SemifilCertificate, options: DerivationOptions | None = None
) -> SemifilCertificate:
    """
    cv certifies v over A; cu certifies u over (A[v], (I_rho A[v])), written over
    Poly(A, var) with var bound to v. Returns u over (A, (I_rho)).
    """
    layer = cu.base
    if not isinstance(layer, PolynomialRing) or layer.base != cv.base:
        raise RingMismatch(f"the outer certificate must live over {cv.base.label()}[v], not {layer.label()}")
    sf = cu.semifiltration
    if not isinstance(sf, ExtendedRule) or sf.inner.ring != cv.base:
        raise HypothesisFailed(f"the outer semifiltration must be extended from {cv.base.label()}")
    require_verified(cv, "inner")
    lu = lift(cu, options, rees_variable(layer, cu.algebra))
    lifted = lu.certificate
    rees_base = PolynomialRing(base=cv.base, var=lu.handle.variable)
    swapped_layer = PolynomialRing(base=rees_base, var=layer.var)
    # (A[v])[Y] and (A[Y])[v] are the same ring
    cu_swapped = RingCertificate(
        base=swapped_layer,
        algebra=lifted.algebra,
        element=lifted.element,
        coeffs=tuple(map_payload(p, lifted.base, swapped_layer) for p in lifted.coeffs),
        bindings=lifted.bindings,
    )
    cv_ext = extend_scalars(cv, rees_base, lifted.algebra)
    total = transitivity_cert(cv_ext, cu_swapped, options)
    rc = ReesCertificate(
        handle=ReesHandle(semifiltration=sf.inner, variable=lu.handle.variable),
        certificate=total,
        element=cu.element,
        lam=1,
    )
    return drop(rc, sf.inner, options)


def structure_kernel(base, algebra) -> list | None:
    """Generators of the kernel of A -> B when it is known, else None."""
    ring = algebra
    while ring != base and isinstance(ring, TowerLayer):
        ring = ring.base
    if ring == base:
        return []
    if isinstance(base, IntegerRing):
        match ring:
            case RationalRing():
                return []
            case ModularRing(m=m):
                return [m]
    return None


def degree_one_test(semifiltration: Semifiltration, algebra, u: RingElement) -> DegreeOneStatus:
    """Whether u·1_B is 1-integral over (A, (I_rho)), that is u·1_B in I_1·1_B."""
    base = semifiltration.ring
    if u.ring != base:
        raise RingMismatch(f"u lives in {u.ring.label()}, expected {base.label()}")
    kernel = structure_kernel(base, algebra)
    if kernel is None:
        logger.info("kernel of %s -> %s unknown", base.label(), algebra.label())
        return DegreeOneStatus.UNKNOWN
    first = ideal_at(semifiltration, 1)
    answer = contains(Ideal.of(base, list(first.gens) + kernel), u.value)
    match answer:
        case Membership.MEMBER:
            return DegreeOneStatus.INTEGRAL
        case Membership.NOT_MEMBER:
            return DegreeOneStatus.NOT_INTEGRAL
    return DegreeOneStatus.UNKNOWN


def semifil_truncation(
    semifiltration: Semifiltration,
    algebra,
    v: RingElement,
    coeffs: Sequence[Any],
    k: int,
    bindings: Mapping[str, Any] | None = None,
    options: DerivationOptions | None = None,
) -> SemifilCertificate:
    """
    From a_0 + ... + a_n v^n = 0 with a_i in I_(n-i), certify
    u = a_k + ... + a_n v^(n-k) over (A, (I_((n-k) rho))).
    """
    base = semifiltration.ring
    a = tuple(base.coerce(c) for c in coeffs)
    n = len(a) - 1
    if n < 1:
        raise MalformedCertificate("a relation of degree at least 1 is required")
    if not 0 <= k <= n:
        raise BadIndex(k, n)
    if v.ring != algebra:
        raise RingMismatch(f"v lives in {v.ring.label()}, expected {algebra.label()}")
    for i, c in enumerate(a):
        answer = contains(ideal_at(semifiltration, n - i), c)
        if answer == Membership.NOT_MEMBER:
            raise HypothesisFailed(f"a_{i} lies in I_{n - i}", base.format(c))
        if answer == Membership.UNKNOWN:
            logger.info("membership of a_%d in I_%d is undecided", i, n - i)

    handle = ReesHandle(semifiltration=semifiltration, variable=rees_variable(base, algebra))
    target = PolynomialRing(base=algebra, var=handle.variable)
    v_y = RingElement.model_construct(ring=target, value=dense_poly.monomial(algebra, v.value, 1))
    lifted = [dense_poly.monomial(base, c, n - i) for i, c in enumerate(a)]
    cert = truncation_cert(handle.ambient, target, v_y, lifted, k, lift_bindings(bindings, target), options)
    u = dense_poly.coefficient(algebra, cert.element, n - k)
    rc = ReesCertificate(handle=handle, certificate=cert, element=u, lam=n - k)
    return drop_accel(rc, None, options)
