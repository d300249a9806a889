# Library imports
import logging
from typing import Any, Mapping, Sequence

# Local imports
from integra.certificates.models import RingCertificate
from integra.certificates.verification import ensure_verified, require_verified
from integra.constructions.frames import QuotientFrame, bivariate_frame
from integra.linalg.operations import charpoly_coefficients
from integra.rings import dense_poly
from integra.rings.elements import RingElement
from integra.rings.homomorphisms import map_payload
from integra.rings.polynomial_rings import PolynomialRing, fresh_variable
from integra.utils.types import (
    BadIndex,
    CoefficientDegreeTooHigh,
    DerivationOptions,
    HypothesisFailed,
    MalformedCertificate,
    RelationFailed,
    RingMismatch,
)

logger = logging.getLogger(__name__)


def merge_bindings(*sources: Mapping[str, Any] | None) -> dict[str, Any] | None:
    merged: dict[str, Any] = {}
    for bindings in sources:
        for var, image in (bindings or {}).items():
            if var in merged and merged[var] != image:
                raise RingMismatch(f"conflicting images for the variable '{var}'")
            merged[var] = image
    return merged or None


def _shared_context(cx: RingCertificate, cy: RingCertificate) -> dict[str, Any] | None:
    if cx.base != cy.base:
        raise RingMismatch(f"certificates over {cx.base.label()} and {cy.base.label()}")
    if cx.algebra != cy.algebra:
        raise RingMismatch(f"elements of {cx.algebra.label()} and {cy.algebra.label()}")
    return merge_bindings(cx.bindings, cy.bindings)


def _element(algebra, u: RingElement, role: str = "element") -> Any:
    if u.ring != algebra:
        raise RingMismatch(f"{role} lives in {u.ring.label()}, expected {algebra.label()}")
    return u.value


def _coerced(base, coeffs: Sequence[Any]) -> tuple:
    return tuple(base.coerce(c) for c in coeffs)


def _combine(cx: RingCertificate, cy: RingCertificate, operation: str, options: DerivationOptions | None):
    bindings = _shared_context(cx, cy)
    require_verified(cx, "first")
    require_verified(cy, "second")
    frame = bivariate_frame(cx.base, cx.coeffs, cy.coeffs)
    x, y = frame.generator(1), frame.generator(2)
    top = frame.top
    algebra = cx.algebra
    if operation == "sum":
        z, element = top.add(x, y), algebra.add(cx.element, cy.element)
    else:
        z, element = top.mul(x, y), algebra.mul(cx.element, cy.element)
    logger.debug("%s of degrees %d and %d", operation, cx.degree, cy.degree)
    out = RingCertificate(
        base=cx.base,
        algebra=algebra,
        element=element,
        coeffs=frame.characteristic_polynomial(z),
        bindings=bindings,
    )
    return ensure_verified(out, operation, options)


def scalar_cert(base, algebra, a: RingElement, bindings: Mapping[str, Any] | None = None) -> RingCertificate:
    """X - a, certifying the image of a in the algebra."""
    if a.ring != base:
        raise RingMismatch(f"scalar lives in {a.ring.label()}, expected {base.label()}")
    return RingCertificate(
        base=base,
        algebra=algebra,
        element=map_payload(a.value, base, algebra, bindings),
        coeffs=(base.neg(a.value), base.one()),
        bindings=bindings,
    )


def shift_monic(base, coeffs: Sequence[Any], x: RingElement, bindings: Mapping[str, Any] | None = None) -> RingElement:
    """P(X - x) as a polynomial over the ring of x."""
    target = x.ring
    mapped = [map_payload(c, base, target, bindings) for c in _coerced(base, coeffs)]
    linear = (target.neg(x.value), target.one())
    acc: tuple = ()
    for c in reversed(mapped):
        acc = dense_poly.add(target, dense_poly.mul(target, acc, linear), (c,))
    ring = PolynomialRing(base=target, var=fresh_variable("X", target))
    return RingElement.model_construct(ring=ring, value=acc)


def sum_cert(cx: RingCertificate, cy: RingCertificate, options: DerivationOptions | None = None) -> RingCertificate:
    return _combine(cx, cy, "sum", options)


def product_cert(cx: RingCertificate, cy: RingCertificate, options: DerivationOptions | None = None) -> RingCertificate:
    return _combine(cx, cy, "product", options)


def negate_cert(c: RingCertificate, options: DerivationOptions | None = None) -> RingCertificate:
    """P(-X) up to the sign making it monic; certifies -u."""
    require_verified(c)
    base = c.base
    n = c.degree
    coeffs = tuple(a if (n - i) % 2 == 0 else base.neg(a) for i, a in enumerate(c.coeffs))
    out = c.model_copy(update={"coeffs": coeffs, "element": c.algebra.neg(c.element)})
    return ensure_verified(out, "negate", options)


def diff_cert(cx: RingCertificate, cy: RingCertificate, options: DerivationOptions | None = None) -> RingCertificate:
    return sum_cert(cx, negate_cert(cy, options), options)


def transitivity_cert(
    cv: RingCertificate, cu: RingCertificate, options: DerivationOptions | None = None
) -> RingCertificate:
    """
    cv certifies v over A; cu certifies u over A[v], given as a certificate over
    Poly(A, var) whose binding sends var to v. Returns a certificate of u over A.
    """
    base = cv.base
    layer = cu.base
    if not isinstance(layer, PolynomialRing) or layer.base != base:
        raise RingMismatch(f"the outer certificate must live over {base.label()}[v], not {cu.base.label()}")
    if cu.algebra != cv.algebra:
        raise RingMismatch(f"elements of {cu.algebra.label()} and {cv.algebra.label()}")
    var = layer.var
    if (cu.bindings or {}).get(var) != cv.element:
        raise HypothesisFailed(f"the outer certificate must bind '{var}' to the certified element")
    require_verified(cv, "inner")
    require_verified(cu, "outer")
    m = cv.degree
    for i, c in enumerate(cu.coeffs):
        if dense_poly.degree(c) >= m:
            raise CoefficientDegreeTooHigh(i, dense_poly.degree(c), m)

    frame = QuotientFrame.over(base).adjoin(cv.coeffs, "V")
    inner = frame.top
    image = {var: inner.generator()}
    frame = frame.adjoin([map_payload(c, layer, inner, image) for c in cu.coeffs], "U")
    logger.debug("tower of degrees %d over %d", cu.degree, m)
    rest = {k: w for k, w in (cu.bindings or {}).items() if k != var}
    out = RingCertificate(
        base=base,
        algebra=cv.algebra,
        element=cu.element,
        coeffs=frame.characteristic_polynomial(frame.generator(2)),
        bindings=merge_bindings(cv.bindings, rest),
    )
    return ensure_verified(out, "transitivity", options)


def truncation_cert(
    base,
    algebra,
    v: RingElement,
    coeffs: Sequence[Any],
    k: int,
    bindings: Mapping[str, Any] | None = None,
    options: DerivationOptions | None = None,
) -> RingCertificate:
    """
    From a_0 + a_1 v + ... + a_n v^n = 0, certify u = a_k + a_(k+1) v + ... + a_n v^(n-k)
    through its action on 1, v, ..., v^(n-1).
    """
    a = _coerced(base, coeffs)
    n = len(a) - 1
    if n < 1:
        raise MalformedCertificate("a relation of degree at least 1 is required")
    if not 0 <= k <= n:
        raise BadIndex(k, n)
    vv = _element(algebra, v, "v")
    bindings = dict(bindings) if bindings else None
    mapped = [map_payload(c, base, algebra, bindings) for c in a]
    value = dense_poly.evaluate(algebra, mapped, vv)
    if not algebra.is_zero(value):
        raise RelationFailed(algebra.format(value))

    u = dense_poly.evaluate(algebra, mapped[k:], vv)
    rows = [[base.zero()] * n for _ in range(n)]
    for s in range(n):
        if s < k:
            for i in range(n - k + 1):
                rows[s][i + s] = base.add(rows[s][i + s], a[i + k])
        else:
            for i in range(k):
                rows[s][i + s - k] = base.sub(rows[s][i + s - k], a[i])
    out = RingCertificate(
        base=base,
        algebra=algebra,
        element=u,
        coeffs=charpoly_coefficients(base, rows),
        bindings=bindings,
    )
    return ensure_verified(out, "truncation", options)


def two_sided_cert(
    base,
    algebra,
    v: RingElement,
    u: RingElement,
    s: Sequence[Any],
    t: Sequence[Any],
    bindings: Mapping[str, Any] | None = None,
    options: DerivationOptions | None = None,
) -> RingCertificate:
    """
    u is (alpha+beta)-integral when u = s_0 + ... + s_alpha v^alpha and
    t_0 v^beta + t_1 v^(beta-1) + ... + t_beta = u v^beta.
    """
    s, t = _coerced(base, s), _coerced(base, t)
    if not s or not t:
        raise MalformedCertificate("both coefficient lists need at least one entry")
    alpha, beta = len(s) - 1, len(t) - 1
    if alpha + beta < 1:
        raise MalformedCertificate("alpha + beta must be at least 1")
    vv, uu = _element(algebra, v, "v"), _element(algebra, u, "u")
    bindings = dict(bindings) if bindings else None

    def image(c):
        return map_payload(c, base, algebra, bindings)

    left = dense_poly.evaluate(algebra, [image(c) for c in s], vv)
    if left != uu:
        raise HypothesisFailed("u = s_0 + s_1 v + ... + s_alpha v^alpha", algebra.format(algebra.sub(left, uu)))
    right = dense_poly.evaluate(algebra, [image(c) for c in reversed(t)], vv)
    target = algebra.mul(uu, algebra.pow(vv, beta))
    if right != target:
        raise HypothesisFailed(
            "t_0 v^beta + ... + t_beta = u v^beta", algebra.format(algebra.sub(right, target))
        )

    a = []
    for i in range(alpha + beta + 1):
        if i < beta:
            a.append(t[beta - i])
        elif i == beta:
            a.append(base.sub(t[0], s[0]))
        else:
            a.append(base.neg(s[i - beta]))
    # truncating at beta certifies t_0 - u
    rest = truncation_cert(base, algebra, v, a, beta, bindings, options)
    shifted = negate_cert(rest, options)
    t0 = RingElement.model_construct(ring=base, value=t[0])
    return sum_cert(scalar_cert(base, algebra, t0, bindings), shifted, options)


def inverse_like_cert(
    base,
    algebra,
    v: RingElement,
    b: Sequence[Any],
    vu_cert: RingCertificate,
    options: DerivationOptions | None = None,
) -> RingCertificate:
    """u = b_0 + b_1 v + ... + b_(n-1) v^(n-1), given a certificate for v·u over A."""
    if vu_cert.base != base or vu_cert.algebra != algebra:
        raise RingMismatch("the certificate for v·u must live over the given rings")
    b = _coerced(base, b)
    if not b:
        raise MalformedCertificate("at least one coefficient is required")
    vv = _element(algebra, v, "v")
    bindings = vu_cert.bindings
    u = dense_poly.evaluate(algebra, [map_payload(c, base, algebra, bindings) for c in b], vv)
    vu = algebra.mul(vv, u)
    if vu != vu_cert.element:
        raise HypothesisFailed("the certificate must be for v·u", algebra.format(algebra.sub(vu_cert.element, vu)))
    require_verified(vu_cert, "v·u")

    layer = PolynomialRing(base=base, var=fresh_variable("w", base, algebra))
    w = layer.generator()
    relation = [layer.neg(w)] + [layer.constant(c) for c in b]
    local = merge_bindings(bindings, {layer.var: vu})
    truncated = truncation_cert(layer, algebra, v, relation, 1, local, options)
    reduced = tuple(dense_poly.monic_remainder(base, c, vu_cert.coeffs) for c in truncated.coeffs)
    logger.debug("reduced %d coefficients modulo a degree-%d relation", len(reduced), vu_cert.degree)
    return transitivity_cert(vu_cert, truncated.model_copy(update={"coeffs": reduced}), options)
