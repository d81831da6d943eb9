"""
Base Types
==========

Verdicts, certificates, field statistics and the abstract base class for
domain membership checks.

Every decision procedure in the package returns a ``Verdict``. Inside and
Outside verdicts are only issued when the signed margin clears the epsilon
band; everything inside the band is Boundary. Unknown is reserved for
semi-decision and statistical procedures.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple

if TYPE_CHECKING:
    from .geometry.configuration import Configuration
    from .lorentz import LorentzTransform


DEFAULT_EPSILON = 1e-9


class DimensionMismatchError(ValueError):
    """Vectors, matrices or configurations of different space-time dimension."""


class VerdictState(str, Enum):
    """Four-valued membership result."""

    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    UNKNOWN = "unknown"


class Statistics(str, Enum):
    """Field statistics flag carried by every point of a configuration."""

    BOSE = "bose"
    FERMI = "fermi"

    @classmethod
    def parse(cls, value: "str | Statistics") -> "Statistics":
        if isinstance(value, Statistics):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(
                f"Unknown field statistics '{value}': expected 'bose' or 'fermi'"
            ) from None


def check_epsilon(epsilon: float) -> float:
    """Reject nonpositive band widths."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return float(epsilon)


@dataclass(frozen=True)
class Certificate:
    """
    Re-checkable witness attached to an Inside verdict.

    Attributes:
        transform: Complex Lorentz element mapping the configuration into the tube
        scale: The s = 2 encoding of the same element, u -> scale*u, v -> v/scale
        permutation: Reordering of the points (1-based), for permuted-union verdicts
    """

    transform: Optional["LorentzTransform"] = None
    scale: Optional[complex] = None
    permutation: Optional[Tuple[int, ...]] = None

    def as_transform(self, s: int = 2) -> Optional["LorentzTransform"]:
        """Return the Lorentz element, expanding the s = 2 scale if needed."""
        if self.transform is not None:
            return self.transform
        if self.scale is not None:
            from .lorentz import s2_scaling

            if s != 2:
                raise DimensionMismatchError(
                    f"scale certificates only exist for s = 2, not s = {s}"
                )
            return s2_scaling(self.scale)
        return None

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form: complex numbers as [re, im] pairs."""
        out: Dict[str, Any] = {}
        if self.scale is not None:
            out["lambda"] = [float(self.scale.real), float(self.scale.imag)]
        if self.transform is not None:
            out["matrix"] = [
                [[float(z.real), float(z.imag)] for z in row]
                for row in self.transform.matrix
            ]
        if self.permutation is not None:
            out["permutation"] = list(self.permutation)
        return out


@dataclass
class Verdict:
    """Result of a membership decision."""

    state: VerdictState
    margin: float
    certificate: Optional[Certificate] = None

    # Debug info
    reason: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        """Allow using the verdict directly in if statements."""
        return self.state is VerdictState.INSIDE

    @property
    def is_inside(self) -> bool:
        return self.state is VerdictState.INSIDE

    @classmethod
    def from_margin(
        cls,
        margin: float,
        epsilon: float,
        reason: Optional[str] = None,
        certificate: Optional[Certificate] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "Verdict":
        """
        Classify a signed margin against the epsilon band.

        Inside iff margin > epsilon, Outside iff margin < -epsilon,
        Boundary otherwise. A certificate is only kept on Inside verdicts.
        """
        if margin > epsilon:
            state = VerdictState.INSIDE
        elif margin < -epsilon:
            state = VerdictState.OUTSIDE
        else:
            state = VerdictState.BOUNDARY
        return cls(
            state=state,
            margin=float(margin),
            certificate=certificate if state is VerdictState.INSIDE else None,
            reason=reason,
            details=dict(details or {}),
        )

    @classmethod
    def unknown(
        cls,
        margin: float,
        reason: str,
        details: Optional[Dict[str, Any]] = None,
    ) -> "Verdict":
        return cls(
            state=VerdictState.UNKNOWN,
            margin=float(margin),
            reason=reason,
            details=dict(details or {}),
        )

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "state": self.state.value,
            "margin": self.margin,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.reason:
            out["reason"] = self.reason
        return out


class DomainCheck(ABC):
    """
    Abstract base class for domain membership checks.

    All checks must implement:
    - default_config(): Default parameters
    - check(): Decide membership of one configuration

    Config keys shared by every check:
    - epsilon: width of the Boundary band
    """

    name: str = "check"

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the check with optional config overrides.

        Args:
            config: Dictionary of check-specific parameters
        """
        self.config = self.default_config()
        if config:
            unknown = sorted(set(config) - set(self.config))
            if unknown:
                raise ValueError(
                    f"Unknown config keys for {self.name}: {unknown}. "
                    f"Available keys: {sorted(self.config)}"
                )
            self.config.update(config)
        check_epsilon(self.config["epsilon"])

    @abstractmethod
    def default_config(self) -> Dict[str, Any]:
        """Return default configuration for this check."""
        pass

    @abstractmethod
    def check(self, configuration: "Configuration") -> Verdict:
        """
        Decide membership of the given configuration.

        Returns:
            Verdict with state, margin and (for Inside) a certificate
        """
        pass
