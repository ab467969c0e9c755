"""Horn hypergeometric functions H1..H7 and their identity catalogue."""

from ._core import (
    AdmissibilityError,
    DomainError,
    HornError,
    NonConvergence,
    OverflowError,
    PoleError,
    QuadratureFailure,
    SamplingExhausted,
    check,
    eval,
    gamma_ln,
    identities,
    in_domain,
    pochhammer,
    pochhammer_mixed,
    registry_json,
    safe_box,
    term,
    verify,
)

__all__ = [
    "AdmissibilityError",
    "DomainError",
    "HornError",
    "NonConvergence",
    "OverflowError",
    "PoleError",
    "QuadratureFailure",
    "SamplingExhausted",
    "check",
    "eval",
    "gamma_ln",
    "identities",
    "in_domain",
    "pochhammer",
    "pochhammer_mixed",
    "registry_json",
    "safe_box",
    "term",
    "verify",
]
