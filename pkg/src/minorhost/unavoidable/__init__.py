"""Certified extraction of unavoidable minors: long cycles, C_{n,m} and wheels."""
from minorhost.unavoidable.certificates import ExtractionCertificate, Route
from minorhost.unavoidable.cycles import find_cycle_pair_minor, find_long_cycle
from minorhost.unavoidable.wheels import (
    ReductionFacts,
    check_reduction_facts,
    contract_rim,
    f_bound,
    find_wheel_minor,
    wheel_in_r2_truncation,
)

__all__ = [
    "ExtractionCertificate",
    "ReductionFacts",
    "Route",
    "check_reduction_facts",
    "contract_rim",
    "f_bound",
    "find_cycle_pair_minor",
    "find_long_cycle",
    "find_wheel_minor",
    "wheel_in_r2_truncation",
]
