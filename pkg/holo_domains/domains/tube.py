"""
Tube Domain
===========

Membership in the tube domain: every difference coordinate xi_i has
-Im xi_i in the open forward light cone. Real parts are unrestricted, so a
configuration with all points real sits at the apex of every cone and can
at best be Boundary.

Also holds the consecutive-suborder projection and the containment check
built on it: a certificate that maps c into the tube maps every
consecutive suborder of c into the tube as well.
"""

from __future__ import annotations

import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..base import DEFAULT_EPSILON, Certificate, Verdict, check_epsilon
from ..geometry import Configuration
from ..geometry.configuration import difference_array

logger = logging.getLogger(__name__)


def tube_margins(c: Configuration) -> np.ndarray:
    """Per-difference margins min(y^0, y.y) with y = -Im xi_i."""
    y = -difference_array(c).imag
    squares = np.sum(c.metric.signature * y * y, axis=1)
    return np.minimum(y[:, 0], squares)


def in_tube(c: Configuration, epsilon: float = DEFAULT_EPSILON) -> Verdict:
    """
    Decide membership of c in the tube domain.

    Inside iff every -Im xi_i is Inside the open forward cone; Boundary if
    some coordinate is within the band and none is Outside; Outside
    otherwise.

    Args:
        c: Configuration with m >= 2 points
        epsilon: Width of the Boundary band

    Returns:
        Verdict with margin = min over i of the cone margins
    """
    epsilon = check_epsilon(epsilon)
    margins = tube_margins(c)
    worst = int(np.argmin(margins))
    margin = float(margins[worst])
    return Verdict.from_margin(
        margin,
        epsilon,
        reason=f"weakest difference xi_{worst + 1} has cone margin {margin:.6g}",
        details={"coordinate_margins": [float(x) for x in margins]},
    )


def project_suborder(c: Configuration, i: int, k: int) -> Configuration:
    """
    Restrict c to the k consecutive points z_i .. z_{i+k-1} (1-based).

    The differences of the result are xi_i .. xi_{i+k-2}.

    Raises:
        ValueError: Unless k >= 2, i >= 1 and i + k - 1 <= m
    """
    if k < 2 or i < 1 or i + k - 1 > c.m:
        raise ValueError(
            f"Suborder (i={i}, k={k}) out of range for m = {c.m}: "
            f"need k >= 2, i >= 1 and i + k - 1 <= m"
        )
    return Configuration(
        s=c.s,
        points=c.points[i - 1 : i - 1 + k],
        fields=c.fields[i - 1 : i - 1 + k],
    )


def suborders(m: int) -> Iterator[Tuple[int, int]]:
    """All (i, k) with k >= 2 addressing a consecutive suborder of m points."""
    for k in range(2, m + 1):
        for i in range(1, m - k + 2):
            yield i, k


def check_containment(
    c: Configuration,
    certificate: Certificate,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """
    Apply one certificate to every consecutive suborder of c.

    Inside iff each projected image is Inside the tube. The margin is the
    smallest tube margin over all projections; failing (i, k) pairs are
    listed in details["failures"].
    """
    from .extended_tube import verify_certificate

    epsilon = check_epsilon(epsilon)
    failures: List[Tuple[int, int]] = []
    worst: Optional[float] = None
    checked = 0
    for i, k in suborders(c.m):
        verdict = verify_certificate(project_suborder(c, i, k), certificate, epsilon)
        checked += 1
        if not verdict:
            failures.append((i, k))
        worst = verdict.margin if worst is None else min(worst, verdict.margin)
    logger.debug("containment: %d projections, %d failures", checked, len(failures))
    return Verdict.from_margin(
        worst,
        epsilon,
        reason=f"{checked} suborder projections, {len(failures)} failed",
        certificate=certificate,
        details={"checked": checked, "failures": failures},
    )
