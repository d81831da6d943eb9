"""
Point Configurations
====================

An ordered list of m complex space-time points with one statistics flag
per point: the argument z_1 ... z_m of an m-point function.

Difference coordinates xi_i = z_i - z_{i+1} (i = 1 .. m-1) carry all the
geometry; translations of every point by the same vector leave them fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from ..base import DimensionMismatchError, Statistics
from .vectors import ComplexVector, Metric, RealVector, Vector

PointLike = Union[ComplexVector, RealVector, Sequence[complex]]


def _as_point(value: PointLike) -> ComplexVector:
    if isinstance(value, ComplexVector):
        return value
    if isinstance(value, RealVector):
        return value.to_complex()
    return ComplexVector(value)


@dataclass(frozen=True)
class Configuration:
    """
    m >= 1 complex points in s dimensions with their field statistics.

    Use Configuration.build() for plain sequences; the constructor expects
    ComplexVector points and Statistics flags.
    """

    s: int
    points: Tuple[ComplexVector, ...]
    fields: Tuple[Statistics, ...]

    def __post_init__(self):
        Metric(self.s)
        if len(self.points) < 1:
            raise ValueError("A configuration needs at least one point")
        for index, point in enumerate(self.points, start=1):
            if point.s != self.s:
                raise DimensionMismatchError(
                    f"Point {index} has {point.s} components, expected s = {self.s}"
                )
        if len(self.fields) != len(self.points):
            raise ValueError(
                f"{len(self.fields)} field flags for {len(self.points)} points"
            )

    @classmethod
    def build(
        cls,
        points: Iterable[PointLike],
        fields: Optional[Iterable[Union[str, Statistics]]] = None,
    ) -> "Configuration":
        """
        Build a configuration from nested sequences.

        Args:
            points: One component sequence (or vector) per point
            fields: "bose"/"fermi" flags; all Bose when omitted
        """
        pts = tuple(_as_point(p) for p in points)
        if not pts:
            raise ValueError("A configuration needs at least one point")
        if fields is None:
            flags = tuple(Statistics.BOSE for _ in pts)
        else:
            flags = tuple(Statistics.parse(f) for f in fields)
        return cls(s=pts[0].s, points=pts, fields=flags)

    @property
    def m(self) -> int:
        """Number of points (the function order)."""
        return len(self.points)

    @property
    def n(self) -> int:
        """Function index n = s*m, the count of complex variables."""
        return self.s * self.m

    @property
    def metric(self) -> Metric:
        return Metric(self.s)

    def as_array(self) -> np.ndarray:
        """m x s complex array of the points."""
        return np.array([p.components for p in self.points], dtype=complex)

    def is_real(self, epsilon: float = 0.0) -> bool:
        return all(p.is_real(epsilon) for p in self.points)

    def with_points(self, points: Iterable[PointLike]) -> "Configuration":
        """Same field flags, new points."""
        return Configuration(
            s=self.s,
            points=tuple(_as_point(p) for p in points),
            fields=self.fields,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return (
            self.s == other.s
            and self.fields == other.fields
            and np.array_equal(self.as_array(), other.as_array())
        )

    def __hash__(self) -> int:
        return hash((self.s, self.fields, tuple(self.points)))


def differences(c: Configuration) -> Tuple[ComplexVector, ...]:
    """
    Difference coordinates xi_i = z_i - z_{i+1}, exactly m - 1 vectors.

    Raises:
        ValueError: If the configuration has fewer than two points
    """
    if c.m < 2:
        raise ValueError(f"Difference coordinates need m >= 2 points, got m = {c.m}")
    return tuple(c.points[i] - c.points[i + 1] for i in range(c.m - 1))


def difference_array(c: Configuration) -> np.ndarray:
    """(m-1) x s complex array of the difference coordinates."""
    z = c.as_array()
    if z.shape[0] < 2:
        raise ValueError(f"Difference coordinates need m >= 2 points, got m = {c.m}")
    return z[:-1] - z[1:]


def lightcone_coords(x: Vector) -> Tuple[complex, complex]:
    """
    Light-cone coordinates (u, v) = (x^0 + x^1, x^0 - x^1) for s = 2.

    u*v equals the invariant square of x.

    Raises:
        ValueError: If s != 2
    """
    if x.s != 2:
        raise ValueError(f"Light-cone coordinates are defined for s = 2 only, got s = {x.s}")
    x0, x1 = complex(x.components[0]), complex(x.components[1])
    return x0 + x1, x0 - x1


def from_lightcone(u: complex, v: complex) -> ComplexVector:
    """Inverse of lightcone_coords."""
    return ComplexVector([(u + v) / 2, (u - v) / 2])


def translate(c: Configuration, a: PointLike) -> Configuration:
    """Shift every point by the same space-time vector a."""
    shift = _as_point(a)
    if shift.s != c.s:
        raise DimensionMismatchError(
            f"Translation has {shift.s} components, configuration has s = {c.s}"
        )
    return c.with_points(p + shift for p in c.points)
