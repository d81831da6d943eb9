"""
Jost Points
===========

Real configurations inside the extended tube.

In s = 2 the test is exact: every difference must lie in the same open
spacelike quadrant of the light-cone plane, either all u_i < 0 < v_i or all
v_i < 0 < u_i. The certificate is lam = i for the first quadrant and
lam = -i for the second.

In any s, jost_sampling looks for a convex combination of the differences
that fails to be spacelike. A single such combination proves the
configuration is not a Jost point; not finding one is only statistical
evidence, reported as Unknown with a positive margin.
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple

import numpy as np

from ..base import DEFAULT_EPSILON, Certificate, Verdict, check_epsilon
from ..geometry import Configuration, differences, lightcone_coords
from ..geometry.configuration import difference_array
from .extended_tube import half_circle_margin, tube_arcs, verify_certificate

logger = logging.getLogger(__name__)

PROBABLY_INSIDE = "probably inside"


def _require_real(c: Configuration, epsilon: float) -> None:
    if not c.is_real(epsilon):
        raise ValueError("Jost tests need a real configuration (all imaginary parts within epsilon)")


def quadrant_margins(c: Configuration) -> Tuple[float, float]:
    """
    Signed margins of the two spacelike quadrants for real s = 2 differences.

    Returns:
        (margin for u < 0 < v, margin for v < 0 < u); at most one is positive
    """
    coords = np.array([lightcone_coords(xi.real) for xi in differences(c)], dtype=complex).real
    u, v = coords[:, 0], coords[:, 1]
    upper = float(np.min(np.minimum(-u, v)))
    lower = float(np.min(np.minimum(u, -v)))
    return upper, lower


def is_jost_s2(c: Configuration, epsilon: float = DEFAULT_EPSILON) -> Verdict:
    """
    Exact Jost test in two dimensions.

    Inside iff all differences share one open spacelike quadrant. Inside the
    quadrant the margin is the angular margin of the tube arcs, the same
    quantity in_extended_tube_s2 reports, and details["image_margin"] holds
    the tube margin of the certified image. Outside it is the signed
    quadrant margin.

    Raises:
        ValueError: If s != 2 or the configuration is not real
    """
    if c.s != 2:
        raise ValueError(f"is_jost_s2 needs s = 2, got s = {c.s}")
    epsilon = check_epsilon(epsilon)
    _require_real(c, epsilon)

    upper, lower = quadrant_margins(c)
    margin = max(upper, lower)
    details = {"quadrant_margins": {"u<0<v": upper, "v<0<u": lower}}
    if margin <= 0:
        return Verdict.from_margin(
            margin,
            epsilon,
            reason="differences do not share a spacelike quadrant",
            details=details,
        )

    real = c.with_points(p.real for p in c.points)
    lam = 1j if upper > lower else -1j
    certificate = Certificate(scale=lam)
    image = verify_certificate(real, certificate, epsilon)
    quadrant = "u<0<v" if upper > lower else "v<0<u"
    return Verdict.from_margin(
        half_circle_margin(tube_arcs(real)),
        epsilon,
        reason=f"all differences in quadrant {quadrant}",
        certificate=certificate,
        details={**details, "quadrant": quadrant, "image_margin": image.margin},
    )


def _segment_maximum(a: np.ndarray, b: np.ndarray, sig: np.ndarray) -> Tuple[float, float]:
    """
    Largest invariant square on the segment (1 - t)a + tb, t in [0, 1].

    Returns:
        (t, square) at the maximum
    """
    aa = float(np.sum(sig * a * a))
    ab = float(np.sum(sig * a * b))
    bb = float(np.sum(sig * b * b))
    # q(t) = aa + 2t(ab - aa) + t^2 (aa - 2ab + bb)
    curvature = aa - 2 * ab + bb
    candidates = [(0.0, aa), (1.0, bb)]
    if curvature < 0:
        t = (aa - ab) / curvature
        if 0 < t < 1:
            candidates.append((t, aa + 2 * t * (ab - aa) + t * t * curvature))
    return max(candidates, key=lambda pair: pair[1])


def jost_sampling(
    c: Configuration,
    samples: int = 10_000,
    seed: int = 0,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """
    Search convex combinations of the differences for a non-spacelike vector.

    Every pair of differences is first maximised exactly along its segment;
    with three or more differences, `samples` Dirichlet-distributed weight
    vectors are then drawn from default_rng(seed).

    Returns:
        Outside with details["witness"] (the weights) and
        details["witness_square"] when a combination has square >= -epsilon;
        otherwise Unknown, reason "probably inside", margin = the smallest
        observed -square

    Raises:
        ValueError: If samples <= 0 or the configuration is not real
    """
    if samples <= 0:
        raise ValueError(f"samples must be positive, got {samples}")
    epsilon = check_epsilon(epsilon)
    _require_real(c, epsilon)

    xi = difference_array(c).real
    k = xi.shape[0]
    sig = c.metric.signature

    best_square = -np.inf
    witness: Optional[np.ndarray] = None
    phase = "exact"
    for i in range(k):
        for j in range(i, k):
            t, square = _segment_maximum(xi[i], xi[j], sig)
            if square > best_square:
                weights = np.zeros(k)
                weights[i] += 1 - t
                weights[j] += t
                best_square, witness = square, weights

    if best_square < -epsilon and k > 2:
        rng = np.random.default_rng(seed)
        weights = rng.dirichlet(np.ones(k), size=samples)
        combos = weights @ xi
        squares = np.sum(sig * combos * combos, axis=1)
        top = int(np.argmax(squares))
        if squares[top] > best_square:
            best_square, witness, phase = float(squares[top]), weights[top], "sampled"

    details = {
        "witness": [float(w) for w in witness],
        "witness_square": float(best_square),
        "phase": phase,
    }
    if best_square >= -epsilon:
        logger.debug("jost_sampling: violating combination found (%s)", phase)
        return Verdict.from_margin(
            min(-2 * epsilon, -best_square),
            epsilon,
            reason=f"convex combination with square {best_square:.6g} is not spacelike",
            details=details,
        )
    logger.debug("jost_sampling: no violation among %d samples", samples)
    return Verdict.unknown(
        -best_square,
        reason=PROBABLY_INSIDE,
        details={**details, "probably_inside": True},
    )
