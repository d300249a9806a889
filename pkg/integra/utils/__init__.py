from .types import *

__all__ = [
    "VerdictStatus",
    "Verdict",
    "Membership",
    "SemifilValidity",
    "DegreeOneStatus",
    "DerivationOptions",
    "EXIT_MALFORMED",
    "IntegraError",
    "RingMismatch",
    "NoCanonicalMap",
    "DimensionMismatch",
    "MalformedCertificate",
    "DegreeTooSmall",
    "UnverifiedInput",
    "CoefficientDegreeTooHigh",
    "RelationFailed",
    "BadIndex",
    "HypothesisFailed",
    "NotMonicAfterExtraction",
    "BadLambda",
    "IndexOutOfRange",
    "ParanoidCheckFailed",
]
