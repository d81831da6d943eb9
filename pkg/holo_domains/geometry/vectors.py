"""
Minkowski Vectors
=================

Metric, real and complex space-time vectors, and the Lorentz invariant
scalar product in s dimensions (one time, s - 1 space).

Component 0 is the time component throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from ..base import DimensionMismatchError


@dataclass(frozen=True)
class Metric:
    """Diagonal metric diag(+1, -1, ..., -1) in s >= 2 dimensions."""

    s: int

    def __post_init__(self):
        if not isinstance(self.s, (int, np.integer)) or isinstance(self.s, bool):
            raise ValueError(f"Metric dimension must be an integer, got {self.s!r}")
        if self.s < 2:
            raise ValueError(f"Metric dimension must be >= 2, got {self.s}")

    @property
    def signature(self) -> np.ndarray:
        sig = -np.ones(self.s)
        sig[0] = 1.0
        return sig

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.signature)

    def product(self, x: np.ndarray, y: np.ndarray) -> complex:
        """Bilinear (not sesquilinear) product of two component arrays."""
        return complex(np.sum(self.signature * x * y))


def _as_components(values: Iterable, dtype) -> np.ndarray:
    arr = np.array(list(values), dtype=dtype)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("A space-time vector needs a flat, nonempty component list")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RealVector:
    """Real space-time vector (positions, momenta, imaginary parts)."""

    components: np.ndarray

    def __init__(self, components: Iterable[float]):
        object.__setattr__(self, "components", _as_components(components, float))

    @property
    def s(self) -> int:
        return int(self.components.size)

    def __len__(self) -> int:
        return self.s

    def __getitem__(self, index: int) -> float:
        return float(self.components[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealVector):
            return NotImplemented
        return np.array_equal(self.components, other.components)

    def __hash__(self) -> int:
        return hash(tuple(self.components.tolist()))

    def __repr__(self) -> str:
        return f"RealVector({self.components.tolist()})"

    def to_complex(self) -> "ComplexVector":
        return ComplexVector(self.components)

    def __add__(self, other: "RealVector") -> "RealVector":
        _match(self, other)
        return RealVector(self.components + other.components)

    def __sub__(self, other: "RealVector") -> "RealVector":
        _match(self, other)
        return RealVector(self.components - other.components)

    def __neg__(self) -> "RealVector":
        return RealVector(-self.components)

    def scale(self, factor: float) -> "RealVector":
        return RealVector(self.components * factor)


@dataclass(frozen=True, eq=False)
class ComplexVector:
    """Complex space-time vector z = x + iy."""

    components: np.ndarray

    def __init__(self, components: Iterable[complex]):
        object.__setattr__(self, "components", _as_components(components, complex))

    @classmethod
    def from_parts(
        cls, real: Sequence[float], imag: Sequence[float]
    ) -> "ComplexVector":
        real = np.asarray(real, dtype=float)
        imag = np.asarray(imag, dtype=float)
        if real.shape != imag.shape:
            raise DimensionMismatchError(
                f"real part has {real.size} components, imaginary part {imag.size}"
            )
        return cls(real + 1j * imag)

    @property
    def s(self) -> int:
        return int(self.components.size)

    @property
    def real(self) -> RealVector:
        return RealVector(self.components.real)

    @property
    def imag(self) -> RealVector:
        return RealVector(self.components.imag)

    def __len__(self) -> int:
        return self.s

    def __getitem__(self, index: int) -> complex:
        return complex(self.components[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexVector):
            return NotImplemented
        return np.array_equal(self.components, other.components)

    def __hash__(self) -> int:
        return hash(tuple(self.components.tolist()))

    def __repr__(self) -> str:
        return f"ComplexVector({self.components.tolist()})"

    def __add__(self, other: "ComplexVector") -> "ComplexVector":
        _match(self, other)
        return ComplexVector(self.components + other.components)

    def __sub__(self, other: "ComplexVector") -> "ComplexVector":
        _match(self, other)
        return ComplexVector(self.components - other.components)

    def __neg__(self) -> "ComplexVector":
        return ComplexVector(-self.components)

    def scale(self, factor: complex) -> "ComplexVector":
        return ComplexVector(self.components * factor)

    def is_real(self, epsilon: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.components.imag) <= epsilon))


Vector = Union[RealVector, ComplexVector]


def _match(x: Vector, y: Vector) -> None:
    if x.s != y.s:
        raise DimensionMismatchError(
            f"Dimension mismatch: {x.s} components vs {y.s} components"
        )


def _check_metric(x: Vector, g: Metric) -> None:
    if x.s != g.s:
        raise DimensionMismatchError(
            f"Vector has {x.s} components but the metric has s = {g.s}"
        )


def minkowski_product(x: Vector, y: Vector, g: Metric) -> complex:
    """
    Lorentz invariant scalar product x^0 y^0 - sum_k x^k y^k.

    Bilinear and symmetric; no complex conjugation is applied.

    Raises:
        DimensionMismatchError: If x, y and g disagree on s
    """
    _match(x, y)
    _check_metric(x, g)
    return g.product(x.components, y.components)


def square(x: Vector, g: Metric) -> complex:
    """Invariant square x.x, the quantity whose sign separates timelike from spacelike."""
    return minkowski_product(x, x, g)
