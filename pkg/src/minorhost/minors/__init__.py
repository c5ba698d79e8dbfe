"""Certified minor-model and subdivision search."""
from minorhost.minors.engine import (
    FreenessResult,
    MinorModel,
    ModelVerification,
    Subdivision,
    circumference_at_least,
    find_minor_model,
    find_subdivision,
    is_minor_free,
    verify_model,
)

__all__ = [
    "FreenessResult",
    "MinorModel",
    "ModelVerification",
    "Subdivision",
    "circumference_at_least",
    "find_minor_model",
    "find_subdivision",
    "is_minor_free",
    "verify_model",
]
