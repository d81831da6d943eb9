"""
Two-Point Cut Test
==================

For a single difference vector the extended tube is the set of xi whose
invariant square avoids the cut [0, inf) of the complex plane.
"""

from __future__ import annotations

from ..base import DEFAULT_EPSILON, Verdict, check_epsilon
from ..geometry import ComplexVector, Metric, square


def cut_distance(w: complex) -> float:
    """Distance from w to the nonnegative real axis."""
    if w.real >= 0:
        return abs(w.imag)
    return abs(w)


def two_point_cut_test(
    xi: ComplexVector, g: Metric, epsilon: float = DEFAULT_EPSILON
) -> Verdict:
    """
    Inside iff xi.xi lies farther than epsilon from the cut [0, inf).

    Points within the band around the cut are Outside with margin -Re(xi.xi);
    only the neighbourhood |xi.xi| <= epsilon of the branch point is Boundary.
    """
    epsilon = check_epsilon(epsilon)
    w = square(xi, g)
    distance = cut_distance(w)
    margin = distance if distance > epsilon else -w.real
    return Verdict.from_margin(
        margin,
        epsilon,
        reason=f"xi.xi = {w.real:.6g}{w.imag:+.6g}i, distance to cut {distance:.6g}",
        details={"square": [w.real, w.imag], "cut_distance": distance},
    )
