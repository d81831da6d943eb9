"""
Holo Domains - Domain-of-Holomorphy Membership
==============================================

Decides whether point configurations in complexified Minkowski space lie in:
- the tube (all imaginary difference parts in the backward cone)
- the extended tube (a complex Lorentz image of the tube)
- the union of permuted extended tubes
and whether real configurations are Jost points. Inside verdicts carry a
certificate that re-verifies independently.

Usage:
    from holo_domains import Configuration, in_extended_tube_s2

    config = Configuration.build([[0, 0], [0, 1]])
    verdict = in_extended_tube_s2(config)

    if verdict:
        print(f"Inside, lambda = {verdict.certificate.scale}")
"""

from .base import (
    DEFAULT_EPSILON,
    Certificate,
    DimensionMismatchError,
    DomainCheck,
    Statistics,
    Verdict,
    VerdictState,
)
from .geometry import ComplexVector, Configuration, Metric, RealVector
from .domains import (
    in_tube,
    in_extended_tube_s2,
    in_extended_tube_search,
    is_jost_s2,
    jost_sampling,
    two_point_cut_test,
    verify_certificate,
)
from .permutation import Permutation, guess_and_verify, in_permuted_union_s2
from .classify import OrderClass, class_table, function_index, order_class
from .checks import CHECKS, run_check

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # Results
    "DEFAULT_EPSILON",
    "Certificate",
    "DimensionMismatchError",
    "DomainCheck",
    "Statistics",
    "Verdict",
    "VerdictState",
    # Geometry
    "ComplexVector",
    "Configuration",
    "Metric",
    "RealVector",
    # Decisions
    "in_tube",
    "in_extended_tube_s2",
    "in_extended_tube_search",
    "is_jost_s2",
    "jost_sampling",
    "two_point_cut_test",
    "verify_certificate",
    "Permutation",
    "guess_and_verify",
    "in_permuted_union_s2",
    # Classification
    "OrderClass",
    "class_table",
    "function_index",
    "order_class",
    # Checks
    "CHECKS",
    "run_check",
]
