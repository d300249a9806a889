# Library imports
from pathlib import Path
from typing import Any, Literal
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

# Local imports
from integra.certificates.models import AlgebraContext, RingCertificate, SemifilCertificate
from integra.rings.polynomial_rings import RingDescriptor
from integra.semifiltrations.rules import Semifiltration
from integra.utils.serialization import DocumentError, load_json, validate_document
from integra.utils.types import DerivationOptions, IntegraError

Verb = Literal[
    "verify",
    "verify-sf",
    "pad",
    "nilpotent",
    "from-module",
    "sum",
    "prod",
    "neg",
    "diff",
    "trans",
    "trunc",
    "two-sided",
    "inv-like",
    "sf-validate",
    "rees-member",
    "rees-lift",
    "rees-drop",
    "rees-lift2",
    "rees-accel",
    "sf-sum",
    "sf-prod",
    "sf-mixed",
    "sf-trans",
    "sf-trunc",
    "sf-deg1",
    "lombardi",
    "joint",
    "joint-xy",
    "joint-relative",
]


class CommandError(IntegraError):
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class Command(BaseModel):
    model_config = ConfigDict(frozen=True)

    verb: Verb
    inputs: tuple[Path, ...] = ()
    output: Path | None = None
    paranoid: bool = True
    bound: int = Field(default=6, ge=1)
    degree: int | None = None
    lam: int | None = Field(default=None, ge=0)
    backward: bool = False
    xy: str | None = None

    @property
    def options(self) -> DerivationOptions:
        return DerivationOptions(paranoid=self.paranoid, bound=self.bound)

    def expect(self, low: int, high: int | None = None) -> tuple[Path, ...]:
        high = low if high is None else high
        if not low <= len(self.inputs) <= high:
            wanted = str(low) if low == high else f"{low} to {high}"
            raise CommandError(f"'{self.verb}' takes {wanted} input file(s), got {len(self.inputs)}")
        return self.inputs


class Outcome(BaseModel):
    """What a handler produced: a document to write, a verdict line, or a diagnostic."""

    exit_code: int = 0
    document: Any = None
    line: str | None = None
    diagnostic: str | None = None


## Parameter documents


class NilpotentParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    ring: RingDescriptor
    element: Any
    degree: int = Field(ge=0)

    @field_validator("element", mode="before")
    @classmethod
    def coerce_element(cls, value: Any, info: ValidationInfo) -> Any:
        ring = info.data.get("ring")
        if ring is None:
            raise ValueError("a valid 'ring' is required first")
        return ring.coerce(value)


class TruncationParams(AlgebraContext):
    coeffs: list[Any]
    k: int


class TwoSidedParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: RingDescriptor
    algebra: RingDescriptor
    v: Any
    u: Any
    s: list[Any]
    t: list[Any]
    bindings: dict[str, Any] | None = None

    @field_validator("v", "u", mode="before")
    @classmethod
    def coerce_elements(cls, value: Any, info: ValidationInfo) -> Any:
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("a valid 'algebra' is required first")
        return algebra.coerce(value)

    @field_validator("bindings", mode="before")
    @classmethod
    def coerce_bindings(cls, value: Any, info: ValidationInfo) -> Any:
        if not value:
            return None
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("a valid 'algebra' is required first")
        return {var: algebra.coerce(image) for var, image in dict(value).items()}


class InverseLikeParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: RingDescriptor
    algebra: RingDescriptor
    v: Any
    b: list[Any]
    certificate: RingCertificate

    @field_validator("v", mode="before")
    @classmethod
    def coerce_v(cls, value: Any, info: ValidationInfo) -> Any:
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("a valid 'algebra' is required first")
        return algebra.coerce(value)


class ReesMemberParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    semifiltration: Semifiltration
    polynomial: list[Any]
    variable: str = "Y"


class SemifilTruncationParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    semifiltration: Semifiltration
    algebra: RingDescriptor
    element: Any
    coeffs: list[Any]
    k: int
    bindings: dict[str, Any] | None = None

    @field_validator("element", mode="before")
    @classmethod
    def coerce_element(cls, value: Any, info: ValidationInfo) -> Any:
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("a valid 'algebra' is required first")
        return algebra.coerce(value)

    @field_validator("bindings", mode="before")
    @classmethod
    def coerce_bindings(cls, value: Any, info: ValidationInfo) -> Any:
        if not value:
            return None
        algebra = info.data.get("algebra")
        if algebra is None:
            raise ValueError("a valid 'algebra' is required first")
        return {var: algebra.coerce(image) for var, image in dict(value).items()}


class DegreeOneParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    semifiltration: Semifiltration
    algebra: RingDescriptor
    element: Any

    @field_validator("element", mode="before")
    @classmethod
    def coerce_element(cls, value: Any, info: ValidationInfo) -> Any:
        semifiltration = info.data.get("semifiltration")
        if semifiltration is None:
            raise ValueError("a valid 'semifiltration' is required first")
        return semifiltration.ring.coerce(value)


## Loading


def load_certificate(path: Path) -> RingCertificate:
    """A ring certificate, or a semifiltration certificate when the file names one."""
    data = load_json(path)
    if isinstance(data, dict) and "semifiltration" in data:
        return validate_document(path, data, SemifilCertificate)
    return validate_document(path, data, RingCertificate)


def load_semifil_certificate(path: Path) -> SemifilCertificate:
    data = load_json(path)
    if not isinstance(data, dict) or "semifiltration" not in data:
        raise DocumentError(path, "field 'semifiltration': Field required")
    return validate_document(path, data, SemifilCertificate)
