# Library imports
import logging
from pydantic import BaseModel, ConfigDict

# Local imports
from integra.rings.elements import RingElement
from integra.rings.ideals import contains
from integra.semifiltrations.rules import Semifiltration, ideal_at
from integra.utils.types import Membership, SemifilValidity

logger = logging.getLogger(__name__)


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: SemifilValidity
    a: int | None = None
    b: int | None = None
    witness: RingElement | None = None

    @property
    def exit_code(self) -> int:
        return {SemifilValidity.VALID: 0, SemifilValidity.INVALID: 1, SemifilValidity.UNKNOWN: 2}[self.status]

    def line(self) -> str:
        if self.status == SemifilValidity.INVALID:
            return f"INVALID {self.a} {self.b} {self.witness}"
        return self.status.value.upper()


def validate(rule: Semifiltration, bound: int = 6) -> ValidationReport:
    """
    Bounded check of I_0 = A and I_a·I_b ⊆ I_{a+b} for a + b <= bound.
    Returns the first counterexample in (a, b) order.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    ring = rule.ring
    first = contains(ideal_at(rule, 0), ring.one())
    if first == Membership.NOT_MEMBER:
        return ValidationReport(status=SemifilValidity.INVALID, a=0, b=0, witness=RingElement.of(ring, ring.one()))
    abstained = first == Membership.UNKNOWN
    for a in range(bound + 1):
        left = ideal_at(rule, a)
        for b in range(bound - a + 1):
            right = ideal_at(rule, b)
            target = ideal_at(rule, a + b)
            for g in left.gens:
                for h in right.gens:
                    product = ring.mul(g, h)
                    answer = contains(target, product)
                    if answer == Membership.NOT_MEMBER:
                        logger.debug("I_%d·I_%d not inside I_%d", a, b, a + b)
                        return ValidationReport(
                            status=SemifilValidity.INVALID, a=a, b=b, witness=RingElement.of(ring, product)
                        )
                    abstained = abstained or answer == Membership.UNKNOWN
    if abstained:
        return ValidationReport(status=SemifilValidity.UNKNOWN)
    return ValidationReport(status=SemifilValidity.VALID)
