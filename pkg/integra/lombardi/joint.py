# Library imports
import logging
from typing import Any, Sequence

# Local imports
from integra.certificates.models import RingCertificate, SemifilCertificate
from integra.certificates.verification import require_verified
from integra.constructions.ring_integrality import merge_bindings
from integra.lombardi.rewriting import lombardi_cert
from integra.lombardi.witness import MembershipWitness, Term
from integra.rees_reduction.models import ReesCertificate
from integra.rees_reduction.transfer import drop, lift
from integra.rings import dense_poly
from integra.rings.elements import RingElement
from integra.rings.homomorphisms import map_payload
from integra.rings.polynomial_rings import PolynomialRing, fresh_variable
from integra.semifiltrations.rees import ReesHandle
from integra.semifiltrations.rules import ExtendedRule, extended
from integra.utils.types import DerivationOptions, HypothesisFailed, RingMismatch

logger = logging.getLogger(__name__)


def adapt_y_to_x(terms: Sequence[Term], c: RingElement, mu: int) -> tuple[Term, ...]:
    """
    Multiply a relation u^m = sum a u^i y^j (j <= mu) by x^mu and use xy = c:
    each term becomes a·c^j on u^i x^(mu-j).
    """
    base = c.ring
    return tuple((i, mu - j, base.mul(a, base.pow(c.value, j))) for i, j, a in terms)


def _polynomial_layer(c: RingCertificate) -> PolynomialRing:
    if not isinstance(c.base, PolynomialRing):
        raise RingMismatch(f"coefficients must be polynomials in the adjoined element, not over {c.base.label()}")
    return c.base


def extract_nu(c: RingCertificate) -> tuple[int, tuple[Term, ...]]:
    """
    From P(u) = 0 with P monic over A[x], read u^n = -sum a_i(x) u^i as
    coefficients on u^i x^j; nu is the largest x-degree, at least 1.
    """
    layer = _polynomial_layer(c)
    require_verified(c)
    base = layer.base
    n = c.degree
    terms = []
    nu = 1
    for i, a in enumerate(c.coeffs[:n]):
        nu = max(nu, dense_poly.degree(a))
        terms.extend((i, j, base.neg(coefficient)) for j, coefficient in enumerate(a) if not base.is_zero(coefficient))
    logger.debug("extracted nu = %d from a degree-%d certificate", nu, n)
    return nu, tuple(terms)


def _bound_image(c: RingCertificate, layer: PolynomialRing, role: str) -> Any:
    image = (c.bindings or {}).get(layer.var)
    if image is None:
        raise HypothesisFailed(f"the certificate over {layer.label()} must bind '{layer.var}' to {role}")
    return image


def _without(bindings: dict | None, var: str) -> dict | None:
    return {k: v for k, v in (bindings or {}).items() if k != var} or None


def joint_cert(
    cx: RingCertificate, cy: RingCertificate, xy: RingElement, options: DerivationOptions | None = None
) -> RingCertificate:
    """u integral over A[x] and over A[y] with xy = c in A gives u integral over A."""
    lx, ly = _polynomial_layer(cx), _polynomial_layer(cy)
    base = lx.base
    if ly.base != base or xy.ring != base:
        raise RingMismatch("both certificates and xy must share the ring A")
    if cx.algebra != cy.algebra or cx.element != cy.element:
        raise RingMismatch("both certificates must be for the same element")
    algebra = cx.algebra
    x, y = _bound_image(cx, lx, "x"), _bound_image(cy, ly, "y")
    bindings = merge_bindings(_without(cx.bindings, lx.var), _without(cy.bindings, ly.var))
    product = algebra.mul(x, y)
    expected = map_payload(xy.value, base, algebra, bindings)
    if product != expected:
        raise HypothesisFailed("xy = c", algebra.format(algebra.sub(product, expected)))
    nu, rel1 = extract_nu(cx)
    mu, rel_y = extract_nu(cy)
    witness = MembershipWitness(
        base=base,
        n=cx.degree,
        m=cy.degree,
        mu=mu,
        nu=nu,
        rel1=rel1,
        rel2=adapt_y_to_x(rel_y, xy, mu),
        algebra=algebra,
        u=cx.element,
        x=x,
        bindings=bindings,
    )
    logger.debug("joint witness n=%d m=%d mu=%d nu=%d", witness.n, witness.m, mu, nu)
    return lombardi_cert(witness, options)


def _rebase(c: RingCertificate, layer: PolynomialRing, over, extra: dict[str, Any]) -> RingCertificate:
    """The same certificate with A replaced by an A-algebra `over` in the coefficient layer."""
    target = PolynomialRing(base=over, var=layer.var)
    return RingCertificate(
        base=target,
        algebra=c.algebra,
        element=c.element,
        coeffs=tuple(map_payload(a, layer, target) for a in c.coeffs),
        bindings=merge_bindings(c.bindings, extra),
    )


def product_base_cert(
    cx: RingCertificate, cy: RingCertificate, options: DerivationOptions | None = None
) -> RingCertificate:
    """
    u integral over A[x] and over A[y] gives u integral over A[t], read with t
    standing for xy.
    """
    lx, ly = _polynomial_layer(cx), _polynomial_layer(cy)
    base = lx.base
    if ly.base != base:
        raise RingMismatch("both certificates must be over polynomial rings on the same A")
    x, y = _bound_image(cx, lx, "x"), _bound_image(cy, ly, "y")
    t_ring = PolynomialRing(base=base, var=fresh_variable("t", lx, ly))
    extra = {t_ring.var: cx.algebra.mul(x, y)}
    t = RingElement.model_construct(ring=t_ring, value=t_ring.generator())
    return joint_cert(_rebase(cx, lx, t_ring, extra), _rebase(cy, ly, t_ring, extra), t, options)


def _extended_inner(c: SemifilCertificate, layer: PolynomialRing):
    sf = c.semifiltration
    if not isinstance(sf, ExtendedRule) or sf.inner.ring != layer.base:
        raise HypothesisFailed(f"the semifiltration must be extended from {layer.base.label()}")
    return sf.inner


def _swap(c: RingCertificate, outer_var: str, inner: PolynomialRing) -> RingCertificate:
    """Reorder the two adjoined variables of c.base so that outer_var is adjoined last."""
    target = PolynomialRing(base=inner, var=outer_var)
    return RingCertificate(
        base=target,
        algebra=c.algebra,
        element=c.element,
        coeffs=tuple(map_payload(p, c.base, target) for p in c.coeffs),
        bindings=c.bindings,
    )


def relative_joint_cert(
    cx: SemifilCertificate, cy: SemifilCertificate, options: DerivationOptions | None = None
) -> SemifilCertificate:
    """
    u over (A[x], (I_rho A[x])) and over (A[y], (I_rho A[y])) gives u over
    (A[t], (I_rho A[t])) with t standing for xy.
    """
    lx, ly = _polynomial_layer(cx), _polynomial_layer(cy)
    base = lx.base
    if ly.base != base:
        raise RingMismatch("both certificates must be over polynomial rings on the same A")
    inner = _extended_inner(cx, lx)
    if _extended_inner(cy, ly) != inner:
        raise RingMismatch("both certificates must extend the same semifiltration")
    variable = fresh_variable("Y", lx, ly, cx.algebra)
    rees_base = PolynomialRing(base=base, var=variable)
    ux = _swap(lift(cx, options, variable).certificate, lx.var, rees_base)
    uy = _swap(lift(cy, options, variable).certificate, ly.var, rees_base)
    over_t = product_base_cert(ux, uy, options)

    t_var = over_t.base.var
    t_ring = PolynomialRing(base=base, var=t_var)
    swapped = _swap(over_t, variable, t_ring)
    target = extended(inner, t_ring)
    rc = ReesCertificate(
        handle=ReesHandle(semifiltration=target, variable=variable),
        certificate=swapped,
        element=cx.element,
        lam=1,
    )
    return drop(rc, target, options)
