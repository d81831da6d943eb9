"""
Light-Cone Tests
================

Three-valued tests against the open forward light cone V+ and the
spacelike region, with an explicit epsilon band.

Margins:
- forward cone: min(x^0, x.x)
- spacelike:    -x.x
"""

from __future__ import annotations

from ..base import DEFAULT_EPSILON, Verdict, check_epsilon
from .vectors import Metric, RealVector, square


def forward_cone_margin(x: RealVector, g: Metric) -> float:
    """Signed margin min(x^0, x.x); positive exactly on V+."""
    return min(float(x[0]), square(x, g).real)


def in_open_forward_cone(
    x: RealVector,
    g: Metric,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """
    Test membership of a real vector in the open forward light cone.

    Inside iff x^0 > epsilon and x.x > epsilon. Boundary when one
    constraint is within epsilon of its surface and the other holds up to
    epsilon. Outside otherwise.

    Raises:
        ValueError: If epsilon is not positive
    """
    epsilon = check_epsilon(epsilon)
    margin = forward_cone_margin(x, g)
    return Verdict.from_margin(
        margin,
        epsilon,
        reason=f"x0={x[0]:.6g}, x.x={square(x, g).real:.6g}",
    )


def is_spacelike(
    x: RealVector,
    g: Metric,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """Inside iff x.x < -epsilon; Boundary within epsilon of the null cone."""
    epsilon = check_epsilon(epsilon)
    sq = square(x, g).real
    return Verdict.from_margin(-sq, epsilon, reason=f"x.x={sq:.6g}")


def spectral_condition(
    p: RealVector,
    g: Metric,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """
    Check a momentum against the spectral condition.

    Momenta must lie in the open forward cone, with the vacuum p = 0 as
    the only exception. A vector within epsilon of zero in every component
    counts as the vacuum.
    """
    epsilon = check_epsilon(epsilon)
    if all(abs(component) <= epsilon for component in p.components):
        return Verdict.from_margin(
            max(1.0, 2 * epsilon),
            epsilon,
            reason="vacuum momentum p = 0",
            details={"vacuum": True},
        )
    verdict = in_open_forward_cone(p, g, epsilon)
    verdict.details["vacuum"] = False
    return verdict
