# Library imports
import logging
from typing import Any
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_serializer, field_validator, model_validator
from typing_extensions import Self

# Local imports
from integra.certificates.models import RingCertificate
from integra.certificates.verification import verify_ring
from integra.rings import dense_poly
from integra.rings.ideals import conjunction, contains, ideal_product
from integra.rings.polynomial_rings import PolynomialRing
from integra.semifiltrations.rees import ReesHandle, rees_member_payload
from integra.semifiltrations.rules import Semifiltration, ideal_at
from integra.utils.types import DerivationOptions, Membership, ParanoidCheckFailed, Verdict, VerdictStatus

logger = logging.getLogger(__name__)


class ReesCertificate(BaseModel):
    """
    A certificate for u·Y^lambda in B[Y] over A[Y] whose coefficients p_k are
    constrained by a Rees algebra: p_k lies in A[(I_rho)*Y], or, when an outer
    semifiltration J is present, every Y^i-coefficient of p_k lies in J_(n-k)·I_i.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    handle: ReesHandle
    outer: Semifiltration | None = None
    certificate: RingCertificate
    element: Any
    lam: int = Field(alias="lambda", ge=0)
    accelerated: bool | None = None

    @field_validator("element", mode="before")
    @classmethod
    def coerce_element(cls, value: Any, info: ValidationInfo) -> Any:
        certificate = info.data.get("certificate")
        if certificate is None:
            raise ValueError("a valid 'certificate' is required first")
        if not isinstance(certificate.algebra, PolynomialRing):
            raise ValueError("the certificate must live in a polynomial ring B[Y]")
        return certificate.algebra.base.coerce(value)

    @field_serializer("element")
    def serialize_element(self, value: Any) -> Any:
        return self.inner_algebra.to_json(value)

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        handle, cert = self.handle, self.certificate
        if cert.base != handle.ambient:
            raise ValueError(f"certificate base must be {handle.ambient.label()}")
        if cert.algebra.var != handle.variable:
            raise ValueError(f"certificate algebra must adjoin '{handle.variable}'")
        if self.outer is not None and self.outer.ring != handle.base:
            raise ValueError("the outer semifiltration must live in the base ring of the handle")
        if cert.element != dense_poly.monomial(self.inner_algebra, self.element, self.lam):
            raise ValueError("the certified element must be element·Y^lambda")
        return self

    @property
    def inner_algebra(self):
        return self.certificate.algebra.base

    @property
    def degree(self) -> int:
        return self.certificate.degree


def coefficient_constraint(rc: ReesCertificate, k: int) -> Membership:
    p = rc.certificate.coeffs[k]
    if rc.outer is None:
        return rees_member_payload(rc.handle, p)
    n = rc.degree
    j_part = ideal_at(rc.outer, n - k)
    sf = rc.handle.semifiltration
    return conjunction(contains(ideal_product(j_part, ideal_at(sf, i)), c) for i, c in enumerate(p))


def verify_rees(rc: ReesCertificate) -> Verdict:
    verdict = verify_ring(rc.certificate)
    if verdict.status == VerdictStatus.REFUTED:
        return verdict
    abstained = False
    for k in range(rc.degree + 1):
        answer = coefficient_constraint(rc, k)
        if answer == Membership.NOT_MEMBER:
            return Verdict(
                status=VerdictStatus.REFUTED,
                detail=f"coefficient {k} outside the Rees algebra",
                value=rc.certificate.base.to_json(rc.certificate.coeffs[k]),
                index=k,
            )
        abstained = abstained or answer == Membership.UNKNOWN
    if abstained:
        return Verdict(status=VerdictStatus.VERIFIED_MODULO_MEMBERSHIP)
    return verdict


def ensure_rees_verified(rc: ReesCertificate, operation: str, options: DerivationOptions | None = None) -> ReesCertificate:
    options = options or DerivationOptions()
    if options.paranoid:
        verdict = verify_rees(rc)
        if verdict.status == VerdictStatus.REFUTED:
            raise ParanoidCheckFailed(operation, verdict, rc)
    return rc
