# Library imports
import logging
from typing import Any

# Local imports
from integra.certificates.models import ModulePresentation, RingCertificate, SemifilCertificate
from integra.rings import dense_poly
from integra.rings.homomorphisms import map_payload
from integra.rings.ideals import contains
from integra.semifiltrations.rules import ideal_at
from integra.utils.types import (
    DerivationOptions,
    MalformedCertificate,
    Membership,
    ParanoidCheckFailed,
    UnverifiedInput,
    Verdict,
    VerdictStatus,
)

logger = logging.getLogger(__name__)


def _check_shape(c: RingCertificate) -> None:
    if not c.coeffs:
        raise MalformedCertificate("coefficient list is empty")
    if not c.base.is_one(c.coeffs[-1]):
        raise MalformedCertificate(f"leading coefficient {c.base.format(c.coeffs[-1])} is not 1")
    unknown = set(c.bindings or {}) - set(c.base.tower_variables())
    if unknown:
        raise MalformedCertificate(f"bindings name variables {sorted(unknown)} absent from the base ring")


def evaluate_claim(c: RingCertificate) -> Any:
    """P(u) computed in the algebra."""
    mapped = [map_payload(a, c.base, c.algebra, c.bindings) for a in c.coeffs]
    return dense_poly.evaluate(c.algebra, mapped, c.element)


def verify_ring(c: RingCertificate) -> Verdict:
    _check_shape(c)
    value = evaluate_claim(c)
    if c.algebra.is_zero(value):
        return Verdict.verified()
    return Verdict(
        status=VerdictStatus.REFUTED,
        detail=f"evaluation {c.algebra.format(value)}",
        value=c.algebra.to_json(value),
    )


def verify_semifil(c: SemifilCertificate) -> Verdict:
    verdict = verify_ring(c)
    if verdict.status == VerdictStatus.REFUTED:
        return verdict
    n = c.degree
    abstained = False
    for i, a in enumerate(c.coeffs):
        answer = contains(ideal_at(c.semifiltration, n - i), a)
        if answer == Membership.NOT_MEMBER:
            return Verdict(
                status=VerdictStatus.REFUTED,
                detail=f"coefficient {i} not in I_{n - i}",
                value=c.base.to_json(a),
                index=i,
            )
        if answer == Membership.UNKNOWN:
            logger.info("membership of coefficient %d in I_%d is undecided", i, n - i)
            abstained = True
    if abstained:
        return Verdict(status=VerdictStatus.VERIFIED_MODULO_MEMBERSHIP)
    return verdict


def verify(c: RingCertificate) -> Verdict:
    if isinstance(c, SemifilCertificate):
        return verify_semifil(c)
    return verify_ring(c)


def require_verified(c: RingCertificate, role: str = "input") -> Verdict:
    verdict = verify(c)
    if verdict.status == VerdictStatus.REFUTED:
        raise UnverifiedInput(f"{role} certificate does not verify: {verdict.line()}")
    return verdict


def ensure_verified(c: RingCertificate, operation: str, options: DerivationOptions | None = None) -> RingCertificate:
    """Re-verify a derived certificate unless paranoid checking is switched off."""
    options = options or DerivationOptions()
    if options.paranoid:
        verdict = verify(c)
        if verdict.status == VerdictStatus.REFUTED:
            raise ParanoidCheckFailed(operation, verdict, c)
        logger.debug("%s output re-verified: %s", operation, verdict.line())
    return c


def check_action(mp: ModulePresentation) -> bool:
    """Whether u·m_k = sum_i a_{k,i} m_i holds in the algebra for every k."""
    algebra = mp.algebra
    for k, m_k in enumerate(mp.generators):
        lhs = algebra.mul(mp.element, m_k)
        rhs = algebra.zero()
        for a, m_i in zip(mp.action.data[k], mp.generators):
            rhs = algebra.add(rhs, algebra.mul(map_payload(a, mp.base, algebra, mp.bindings), m_i))
        if lhs != rhs:
            return False
    return True
