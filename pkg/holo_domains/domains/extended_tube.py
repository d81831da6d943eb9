"""
Extended Tube
=============

Membership in the extended tube, the image of the tube under proper
complex Lorentz transformations.

s = 2 is decided exactly. In light-cone coordinates (u, v) the complex
group acts as u -> lam*u, v -> v/lam, and each tube condition

    Im(lam * u_i) < 0,    Im(v_i / lam) < 0

confines arg(lam) to an open half circle while |lam| drops out. The
configuration is in the extended tube iff the 2(m - 1) half circles share a
point; the certificate is lam = exp(i*theta) at the middle of the common arc.

For general s the search samples the plane-product parametrization of the
complex group. It only ever proves membership (Inside) and otherwise
answers Unknown.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import count, islice
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..base import (
    DEFAULT_EPSILON,
    Certificate,
    Verdict,
    VerdictState,
    check_epsilon,
)
from ..geometry import Configuration, Metric, differences, lightcone_coords
from ..lorentz import (
    LorentzTransform,
    apply,
    complex_rotation,
    identity,
    plane_product,
    planes,
    verify_lorentz,
)
from .tube import in_tube

logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi

# Imaginary rapidities tried on every time-space plane before random sampling
GRID_ANGLES = (np.pi / 2, -np.pi / 2, np.pi / 4, -np.pi / 4, 3 * np.pi / 4, -3 * np.pi / 4)

# Random plane parameters: real part in [-MAX_RAPIDITY, MAX_RAPIDITY], imaginary part in [-pi, pi]
MAX_RAPIDITY = 2.0

# Angular margins this close to zero are rounding noise from arcs that touch end to end
TOUCH_TOLERANCE = 64 * np.finfo(float).eps


def _wrap(theta: float) -> float:
    """Map an angle into [-pi, pi)."""
    return float((theta + np.pi) % TWO_PI - np.pi)


@dataclass(frozen=True)
class Arc:
    """Open circular arc (start, start + length), start in [-pi, pi), 0 < length <= pi."""

    start: float
    length: float

    def __post_init__(self):
        if not 0 < self.length <= np.pi:
            raise ValueError(f"Arc length must be in (0, pi], got {self.length}")
        object.__setattr__(self, "start", _wrap(self.start))

    @property
    def end(self) -> float:
        return self.start + self.length

    @property
    def center(self) -> float:
        return _wrap(self.start + self.length / 2)

    def contains(self, theta: float) -> bool:
        offset = (theta - self.start) % TWO_PI
        return 0 < offset < self.length


def tube_arcs(c: Configuration) -> List[Arc]:
    """
    The 2(m - 1) open arcs of admissible arg(lam), u-arc then v-arc per difference.

    Raises:
        ValueError: If s != 2 or a light-cone coordinate is zero
    """
    _require_s2(c)
    arcs: List[Arc] = []
    for index, xi in enumerate(differences(c), start=1):
        u, v = lightcone_coords(xi)
        if u == 0 or v == 0:
            raise ValueError(f"xi_{index} has a zero light-cone coordinate")
        arcs.append(Arc(-np.pi - np.angle(u), np.pi))
        arcs.append(Arc(np.angle(v), np.pi))
    return arcs


def _sweep(arcs: Sequence[Arc]) -> List[Tuple[float, float, int]]:
    """
    Cover count on every open segment between consecutive endpoints.

    Ends sort before starts at equal angles, so an endpoint shared by two
    arcs never counts as covered by both.
    """
    events = []
    depth = 0
    for arc in arcs:
        events.append((arc.start, 1))
        end = arc.end
        if end > np.pi:
            depth += 1
            end -= TWO_PI
        events.append((end, 0))
    events.sort()

    segments = []
    previous = -np.pi
    for angle, is_start in events:
        if angle > previous:
            segments.append((previous, angle, depth))
            previous = angle
        depth += 1 if is_start else -1
    if previous < np.pi:
        segments.append((previous, np.pi, depth))
    return segments


def arc_intersection(arcs: Sequence[Arc]) -> Optional[Arc]:
    """
    Common part of a family of open arcs, or None when empty.

    Raises:
        ValueError: If arcs is empty
    """
    if not arcs:
        raise ValueError("arc_intersection needs at least one arc")
    full = [(lo, hi) for lo, hi, depth in _sweep(arcs) if depth == len(arcs)]
    if not full:
        return None
    if len(full) == 2 and full[0][0] == -np.pi and full[1][1] == np.pi:
        # wraps across -pi
        lo, hi = full[1][0], full[0][1] + TWO_PI
    else:
        lo, hi = full[0]
    return Arc(lo, hi - lo)


def arc_depth(arcs: Sequence[Arc]) -> int:
    """Largest number of arcs sharing a common point."""
    return max((depth for _, _, depth in _sweep(arcs)), default=0)


def half_circle_margin(arcs: Sequence[Arc]) -> float:
    """
    Signed angular margin of a family of half-circle arcs.

    Half the length of the common arc when it exists, otherwise minus half
    the angle by which the arcs miss a common point. Equals (G - pi)/2 with
    G the widest gap between consecutive arc centers.
    """
    centers = np.sort(np.mod([arc.start + np.pi / 2 for arc in arcs], TWO_PI))
    gaps = np.diff(np.append(centers, centers[0] + TWO_PI))
    return float((gaps.max() - np.pi) / 2)


def arc_signature(c: Configuration, decimals: int = 9) -> Tuple[str, ...]:
    """
    Discrete cell signature of an s = 2 configuration.

    The circular order of all arc endpoints, read counterclockwise from the
    start of the first arc: "s3" is the start of arc 3, "e3" its end.
    Differences with a zero light-cone coordinate contribute "z<i>" tokens
    instead of arcs.
    """
    _require_s2(c)
    tokens: List[str] = []
    points: List[Tuple[float, int, int]] = []
    reference: Optional[float] = None
    index = 0
    for number, xi in enumerate(differences(c), start=1):
        u, v = lightcone_coords(xi)
        if u == 0 or v == 0:
            tokens.append(f"z{number}")
            continue
        for arc in (Arc(-np.pi - np.angle(u), np.pi), Arc(np.angle(v), np.pi)):
            if reference is None:
                reference = arc.start
            for angle, is_start in ((arc.start, 1), (arc.end, 0)):
                offset = round(float((angle - reference) % TWO_PI), decimals)
                if offset >= round(TWO_PI, decimals):
                    offset = 0.0
                points.append((offset, is_start, index))
            index += 1
    points.sort()
    tokens.extend(f"{'s' if is_start else 'e'}{i}" for _, is_start, i in points)
    return tuple(tokens)


def _require_s2(c: Configuration) -> None:
    if c.s != 2:
        raise ValueError(f"The exact extended-tube test needs s = 2, got s = {c.s}")


def _reorder(c: Configuration, permutation: Sequence[int]) -> Configuration:
    perm = tuple(int(p) for p in permutation)
    if sorted(perm) != list(range(1, c.m + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{c.m}")
    return Configuration(
        s=c.s,
        points=tuple(c.points[p - 1] for p in perm),
        fields=tuple(c.fields[p - 1] for p in perm),
    )


def verify_certificate(
    c: Configuration,
    certificate: Certificate,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """
    Re-check a certificate: reorder the points, apply the Lorentz element,
    and test the image against the tube.

    Returns:
        The in_tube verdict of the image; Inside iff the certificate holds
    """
    target = c
    if certificate.permutation is not None:
        target = _reorder(target, certificate.permutation)
    transform = certificate.as_transform(c.s)
    if transform is not None:
        target = apply(transform, target)
    return in_tube(target, epsilon)


def in_extended_tube_s2(c: Configuration, epsilon: float = DEFAULT_EPSILON) -> Verdict:
    """
    Exact extended-tube decision for s = 2.

    The state and margin come from the signed angular margin alone, so the
    answer does not depend on the overall size of the configuration. Arcs
    that touch end to end share no point and are Outside, with the margin
    floored by the share of conditions that fail at the best angle.

    Returns:
        Inside with a lam certificate, Boundary when the angular margin is
        within the band, Outside otherwise. details["angular_margin"] always
        carries the signed angular margin; Inside verdicts also carry
        details["image_margin"], the tube margin of the certified image.

    Raises:
        ValueError: If s != 2
    """
    _require_s2(c)
    epsilon = check_epsilon(epsilon)

    zeros = [
        index
        for index, xi in enumerate(differences(c), start=1)
        if 0 in lightcone_coords(xi)
    ]
    if zeros:
        return Verdict.from_margin(
            -np.pi / 2,
            epsilon,
            reason=f"xi_{zeros[0]} has a zero light-cone coordinate",
            details={"angular_margin": -np.pi / 2, "zero_coordinates": zeros},
        )

    arcs = tube_arcs(c)
    angular = half_circle_margin(arcs)
    details = {"angular_margin": angular, "arcs": [[a.start, a.length] for a in arcs]}
    window = arc_intersection(arcs)

    if window is None:
        total = len(arcs)
        depth = arc_depth(arcs)
        reason = f"arcs have no common point; at most {depth} of {total} conditions hold together"
        details["depth"] = depth
        if abs(angular) <= TOUCH_TOLERANCE:
            return Verdict.from_margin(
                -np.pi * (total - depth) / (2 * total),
                epsilon,
                reason=f"{reason} (arcs touch)",
                details=details,
            )
        return Verdict.from_margin(min(angular, 0.0), epsilon, reason=reason, details=details)

    details["window"] = [window.start, window.length]
    if angular <= epsilon:
        return Verdict.from_margin(
            angular,
            epsilon,
            reason=f"arcs meet on an arc of length {window.length:.6g}",
            details=details,
        )

    if in_tube(c, epsilon):
        certificate = Certificate(scale=1 + 0j)
        reason = "already inside the tube (lambda = 1)"
    else:
        certificate = Certificate(scale=complex(np.exp(1j * window.center)))
        reason = f"arcs meet on an arc of length {window.length:.6g}"
    image = verify_certificate(c, certificate, epsilon)
    details["image_margin"] = image.margin
    if not image:
        logger.debug("certified image margin %.3g is within the band", image.margin)
    return Verdict.from_margin(
        angular,
        epsilon,
        reason=reason,
        certificate=certificate,
        details=details,
    )


def search_candidates(g: Metric, seed: int) -> Iterator[LorentzTransform]:
    """
    Candidate stream for the general-s search.

    Identity first, then imaginary-rapidity boosts along each axis, then
    random plane products. Candidate k is drawn from default_rng([seed, k]),
    so the stream is reproducible independent of how far it is consumed.
    """
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    yield identity(g)
    index = 1
    for axis in range(1, g.s):
        for angle in GRID_ANGLES:
            yield complex_rotation(g, (0, axis), 1j * angle)
            index += 1
    size = len(planes(g.s))
    for index in count(index):
        rng = np.random.default_rng([seed, index])
        parameters = rng.uniform(-MAX_RAPIDITY, MAX_RAPIDITY, size) + 1j * rng.uniform(
            -np.pi, np.pi, size
        )
        yield plane_product(g, parameters)


def in_extended_tube_search(
    c: Configuration,
    budget: int = 2000,
    seed: int = 0,
    epsilon: float = DEFAULT_EPSILON,
) -> Verdict:
    """
    Semi-decide extended-tube membership in any dimension.

    Tries at most `budget` candidates from search_candidates(). Returns
    Inside with the first transform whose image is Inside the tube, or
    Unknown. Never returns Outside.

    Raises:
        ValueError: If budget <= 0
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    epsilon = check_epsilon(epsilon)
    g = c.metric
    best = -np.inf
    for index, transform in enumerate(islice(search_candidates(g, seed), budget)):
        image = in_tube(apply(transform, c), epsilon)
        best = max(best, image.margin)
        if image:
            check = verify_lorentz(transform, g)
            logger.info("extended-tube search: candidate %d succeeded", index)
            return Verdict(
                state=VerdictState.INSIDE,
                margin=image.margin,
                certificate=Certificate(transform=transform),
                reason=f"candidate {index} maps the configuration into the tube",
                details={"candidates": index + 1, "lorentz_deviation": check.max_deviation},
            )
        logger.debug("candidate %d: tube margin %.6g", index, image.margin)
    logger.warning("extended-tube search exhausted its budget of %d candidates", budget)
    return Verdict.unknown(
        best,
        reason=f"no certificate among {budget} candidates",
        details={"candidates": budget},
    )
