from typing import Any
from enum import Enum
from pydantic import BaseModel, ConfigDict, Field


class VerdictStatus(str, Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    VERIFIED_MODULO_MEMBERSHIP = "VERIFIED-MODULO-MEMBERSHIP"


class Membership(str, Enum):
    MEMBER = "member"
    NOT_MEMBER = "not-member"
    UNKNOWN = "unknown"


class SemifilValidity(str, Enum):
    VALID = "valid"
    INVALID = "invalid"
    UNKNOWN = "unknown"


class DegreeOneStatus(str, Enum):
    INTEGRAL = "integral"
    NOT_INTEGRAL = "not-integral"
    UNKNOWN = "unknown"


EXIT_MALFORMED = 3


class Verdict(BaseModel):
    """Outcome of checking a certificate."""

    model_config = ConfigDict(frozen=True)

    status: VerdictStatus
    detail: str | None = None
    value: Any | None = None
    index: int | None = None

    @property
    def exit_code(self) -> int:
        match self.status:
            case VerdictStatus.VERIFIED:
                return 0
            case VerdictStatus.REFUTED:
                return 1
            case VerdictStatus.VERIFIED_MODULO_MEMBERSHIP:
                return 2

    def line(self) -> str:
        if self.status == VerdictStatus.REFUTED and self.detail:
            return f"{self.status.value} {self.detail}"
        return self.status.value

    @classmethod
    def verified(cls) -> "Verdict":
        return cls(status=VerdictStatus.VERIFIED)


class DerivationOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    paranoid: bool = True
    bound: int = Field(default=6, ge=1)


## Error types


class IntegraError(Exception):
    pass


class RingMismatch(IntegraError):
    def __init__(self, message: str = "operands live in different rings"):
        self.message = message
        super().__init__(message)


class NoCanonicalMap(IntegraError):
    def __init__(self, source: Any, target: Any, reason: str | None = None):
        self.source = source
        self.target = target
        message = f"no canonical map from {_describe(source)} to {_describe(target)}"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message)


class DimensionMismatch(IntegraError):
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class MalformedCertificate(IntegraError):
    def __init__(self, message: str):
        self.message = message
        super().__init__(f"Malformed certificate: {message}")


class DegreeTooSmall(IntegraError):
    def __init__(self, requested: int, degree: int):
        self.requested = requested
        self.degree = degree
        super().__init__(f"cannot pad a degree-{degree} certificate to degree {requested}")


class UnverifiedInput(IntegraError):
    def __init__(self, message: str = "input certificate does not verify"):
        self.message = message
        super().__init__(message)


class CoefficientDegreeTooHigh(IntegraError):
    def __init__(self, index: int, degree: int, bound: int):
        self.index = index
        self.degree = degree
        self.bound = bound
        super().__init__(
            f"coefficient {index} has degree {degree} in the adjoined element, expected < {bound}"
        )


class RelationFailed(IntegraError):
    def __init__(self, value: Any):
        self.value = value
        super().__init__(f"relation does not hold, it evaluates to {value}")


class BadIndex(IntegraError):
    def __init__(self, index: int, upper: int):
        self.index = index
        self.upper = upper
        super().__init__(f"index {index} is outside 0..{upper}")


class HypothesisFailed(IntegraError):
    def __init__(self, identity: str, value: Any = None):
        self.identity = identity
        self.value = value
        message = f"hypothesis fails: {identity}"
        if value is not None:
            message = f"{message} (difference {value})"
        super().__init__(message)


class NotMonicAfterExtraction(IntegraError):
    def __init__(self, value: Any):
        self.value = value
        super().__init__(f"leading extracted coefficient is {value}, expected 1")


class BadLambda(IntegraError):
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class IndexOutOfRange(IntegraError):
    def __init__(self, index: int, bound: int):
        self.index = index
        self.bound = bound
        super().__init__(f"exponent {index} of the adjoined element must be < {bound}")


class ParanoidCheckFailed(IntegraError):
    def __init__(self, operation: str, verdict: Verdict, document: Any = None):
        self.operation = operation
        self.verdict = verdict
        self.document = document
        super().__init__(f"{operation} produced a certificate that does not verify: {verdict.line()}")


def _describe(ring: Any) -> str:
    label = getattr(ring, "label", None)
    return label() if callable(label) else repr(ring)
