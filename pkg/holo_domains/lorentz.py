"""
Lorentz Transformations
=======================

Real and complex Lorentz transformations in s dimensions: construction,
verification against Lambda^T G Lambda = G, and the vector action on
configurations.

Complex elements of the identity component are generated as finite
products of per-plane transforms (plane_product): a hyperbolic block in
every time-space plane (0, k) and a circular block in every space-space
plane (i, j), each with a complex parameter. For s = 2 the single plane is
also available in light-cone form, s2_scaling(lam): u -> lam*u, v -> v/lam.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .base import DimensionMismatchError
from .geometry import ComplexVector, Configuration, Metric
from .geometry.configuration import PointLike, _as_point

DEFAULT_TOLERANCE = 1e-10

Plane = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class LorentzTransform:
    """
    s x s complex matrix acting on space-time vectors.

    The flags are computed at construction:
    - real: all imaginary parts below tolerance
    - proper: det = 1 within tolerance
    - orthochronous: real and Lambda^0_0 >= 1 - tolerance

    Construction does not enforce the metric condition; verify_lorentz()
    checks it. Every generator in this module produces verified elements.
    """

    s: int
    matrix: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE
    real: bool = field(init=False)
    proper: bool = field(init=False)
    orthochronous: bool = field(init=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (self.s, self.s):
            raise DimensionMismatchError(
                f"Expected a {self.s}x{self.s} matrix, got shape {matrix.shape}"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        tol = self.tolerance
        is_real = bool(np.all(np.abs(matrix.imag) <= tol))
        object.__setattr__(self, "real", is_real)
        object.__setattr__(self, "proper", bool(abs(np.linalg.det(matrix) - 1) <= tol))
        object.__setattr__(
            self, "orthochronous", is_real and matrix[0, 0].real >= 1 - tol
        )

    @classmethod
    def from_matrix(
        cls, matrix: Sequence[Sequence[complex]], tolerance: float = DEFAULT_TOLERANCE
    ) -> "LorentzTransform":
        arr = np.array(matrix, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatchError(f"Expected a square matrix, got shape {arr.shape}")
        return cls(s=arr.shape[0], matrix=arr, tolerance=tolerance)

    @property
    def restricted(self) -> bool:
        """Real, proper and orthochronous."""
        return self.real and self.proper and self.orthochronous

    def __matmul__(self, other: "LorentzTransform") -> "LorentzTransform":
        return compose(self, other)

    def __repr__(self) -> str:
        return (
            f"LorentzTransform(s={self.s}, real={self.real}, "
            f"proper={self.proper}, orthochronous={self.orthochronous})"
        )


@dataclass(frozen=True)
class LorentzCheck:
    """Outcome of verify_lorentz: pass/fail plus the maximum entry deviation."""

    ok: bool
    max_deviation: float
    tolerance: float

    def __bool__(self):
        return self.ok


def _check_dimension(transform: LorentzTransform, g: Metric) -> None:
    if transform.s != g.s:
        raise DimensionMismatchError(
            f"Transform acts in s = {transform.s}, metric has s = {g.s}"
        )


def verify_lorentz(
    transform: LorentzTransform,
    g: Metric,
    tol: Optional[float] = None,
) -> LorentzCheck:
    """
    Check the metric condition Lambda^T G Lambda = G entrywise.

    Args:
        transform: Matrix to check
        g: Metric of the same dimension
        tol: Maximum allowed entry deviation (defaults to the transform's tolerance)

    Returns:
        LorentzCheck, truthy iff max |(Lambda^T G Lambda - G)_ij| <= tol
    """
    _check_dimension(transform, g)
    tol = transform.tolerance if tol is None else tol
    lam = transform.matrix
    deviation = lam.T @ g.matrix @ lam - g.matrix
    max_dev = float(np.max(np.abs(deviation)))
    return LorentzCheck(ok=max_dev <= tol, max_deviation=max_dev, tolerance=tol)


def identity(g: Metric) -> LorentzTransform:
    return LorentzTransform(s=g.s, matrix=np.eye(g.s))


def planes(s: int) -> List[Plane]:
    """All coordinate planes (i, j), i < j, in lexicographic order: s(s-1)/2 of them."""
    return [(i, j) for i in range(s) for j in range(i + 1, s)]


def _plane_block(s: int, plane: Plane, parameter: complex) -> np.ndarray:
    i, j = plane
    matrix = np.eye(s, dtype=complex)
    if i == 0:
        c, sh = np.cosh(parameter), np.sinh(parameter)
        matrix[0, 0] = c
        matrix[0, j] = sh
        matrix[j, 0] = sh
        matrix[j, j] = c
    else:
        c, sn = np.cos(parameter), np.sin(parameter)
        matrix[i, i] = c
        matrix[i, j] = -sn
        matrix[j, i] = sn
        matrix[j, j] = c
    return matrix


def real_boost(g: Metric, axis: int, rapidity: float) -> LorentzTransform:
    """
    Boost in the (0, axis) plane: cosh/sinh block with real rapidity.

    Raises:
        ValueError: If axis is outside 1 .. s-1
    """
    if not 1 <= axis < g.s:
        raise ValueError(f"Boost axis must be in 1..{g.s - 1}, got {axis}")
    return LorentzTransform(s=g.s, matrix=_plane_block(g.s, (0, axis), float(rapidity)).real)


def complex_rotation(g: Metric, plane: Plane, angle: complex) -> LorentzTransform:
    """
    Complex Lorentz element acting in one coordinate plane.

    For a time-space plane (0, j) this is a boost with complex rapidity;
    for a space-space plane (i, j) a rotation by a complex angle.

    Raises:
        ValueError: Unless 0 <= i < j < s
    """
    i, j = plane
    if not 0 <= i < j < g.s:
        raise ValueError(f"Plane must satisfy 0 <= i < j < {g.s}, got {plane}")
    return LorentzTransform(s=g.s, matrix=_plane_block(g.s, (i, j), complex(angle)))


def s2_scaling(lam: complex) -> LorentzTransform:
    """
    The s = 2 complex Lorentz element u -> lam*u, v -> v/lam.

    In standard coordinates the matrix is
    ((lam + 1/lam)/2, (lam - 1/lam)/2; (lam - 1/lam)/2, (lam + 1/lam)/2).

    Raises:
        ValueError: If lam == 0
    """
    lam = complex(lam)
    if lam == 0:
        raise ValueError("s2_scaling needs a nonzero scale")
    plus = (lam + 1 / lam) / 2
    minus = (lam - 1 / lam) / 2
    return LorentzTransform(s=2, matrix=np.array([[plus, minus], [minus, plus]]))


def compose(first: LorentzTransform, second: LorentzTransform) -> LorentzTransform:
    """Matrix product first @ second (second acts first)."""
    if first.s != second.s:
        raise DimensionMismatchError(f"Cannot compose s = {first.s} with s = {second.s}")
    return LorentzTransform(
        s=first.s,
        matrix=first.matrix @ second.matrix,
        tolerance=max(first.tolerance, second.tolerance),
    )


def inverse(transform: LorentzTransform, g: Metric) -> LorentzTransform:
    """Lambda^-1 = G Lambda^T G, valid for any element satisfying the metric condition."""
    _check_dimension(transform, g)
    gm = g.matrix
    return LorentzTransform(
        s=g.s, matrix=gm @ transform.matrix.T @ gm, tolerance=transform.tolerance
    )


def plane_product(
    g: Metric,
    parameters: Union[Mapping[Plane, complex], Sequence[complex]],
) -> LorentzTransform:
    """
    Product of per-plane elements, applied in lexicographic plane order.

    Args:
        g: Metric
        parameters: Either a mapping plane -> complex parameter (missing
            planes use 0) or a sequence aligned with planes(s)
    """
    plane_list = planes(g.s)
    if isinstance(parameters, Mapping):
        for plane in parameters:
            if tuple(plane) not in plane_list:
                raise ValueError(f"Invalid plane {plane} for s = {g.s}")
        values = [complex(parameters.get(p, 0.0)) for p in plane_list]
    else:
        values = [complex(v) for v in parameters]
        if len(values) != len(plane_list):
            raise ValueError(
                f"Expected {len(plane_list)} plane parameters for s = {g.s}, got {len(values)}"
            )
    matrix = np.eye(g.s, dtype=complex)
    for plane, value in zip(plane_list, values):
        if value != 0:
            matrix = matrix @ _plane_block(g.s, plane, value)
    return LorentzTransform(s=g.s, matrix=matrix)


def apply(transform: LorentzTransform, c: Configuration) -> Configuration:
    """
    Map every point of the configuration by the matrix; statistics unchanged.

    Raises:
        DimensionMismatchError: If the transform and configuration disagree on s
    """
    if transform.s != c.s:
        raise DimensionMismatchError(
            f"Transform acts in s = {transform.s}, configuration has s = {c.s}"
        )
    mapped = c.as_array() @ transform.matrix.T
    return c.with_points(ComplexVector(row) for row in mapped)


def apply_poincare(
    transform: LorentzTransform, a: PointLike, c: Configuration
) -> Configuration:
    """Inhomogeneous action z -> Lambda z + a on every point."""
    shift = _as_point(a)
    if shift.s != c.s:
        raise DimensionMismatchError(
            f"Translation has {shift.s} components, configuration has s = {c.s}"
        )
    moved = apply(transform, c)
    return moved.with_points(p + shift for p in moved.points)


def random_restricted(
    g: Metric, seed: int, max_rapidity: float = 2.0
) -> LorentzTransform:
    """
    Seeded element of the restricted group.

    Product of a spatial rotation, one boost per spatial axis with
    rapidity uniform in [-max_rapidity, max_rapidity], and a second spatial
    rotation. Deterministic in seed.

    Raises:
        ValueError: If max_rapidity <= 0
    """
    if not max_rapidity > 0:
        raise ValueError(f"max_rapidity must be positive, got {max_rapidity}")
    rng = np.random.default_rng(seed)
    spatial = [p for p in planes(g.s) if p[0] != 0]

    def rotation() -> np.ndarray:
        matrix = np.eye(g.s)
        for plane in spatial:
            matrix = matrix @ _plane_block(g.s, plane, rng.uniform(-np.pi, np.pi)).real
        return matrix

    matrix = rotation()
    for axis in range(1, g.s):
        rapidity = rng.uniform(-max_rapidity, max_rapidity)
        matrix = matrix @ _plane_block(g.s, (0, axis), rapidity).real
    matrix = matrix @ rotation()
    return LorentzTransform(s=g.s, matrix=matrix)
