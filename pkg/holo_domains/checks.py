"""
Domain Checks
=============

Configurable wrappers around the decision procedures, one per CLI command.

Checks:
- tube: tube membership
- etube: extended tube (exact for s = 2, certificate search otherwise)
- jost: Jost point (exact for s = 2, convex-combination sampling otherwise)
- union: union of permuted extended tubes (s = 2)

Usage:
    from holo_domains.checks import run_check

    verdict = run_check("etube", config, {"epsilon": 1e-8, "seed": 3})
"""

import logging
from typing import Any, Dict, Optional, Type

from .base import DEFAULT_EPSILON, DomainCheck, Verdict
from .domains import (
    in_extended_tube_s2,
    in_extended_tube_search,
    in_tube,
    is_jost_s2,
    jost_sampling,
    verify_certificate,
)
from .geometry import Configuration
from .permutation import DEFAULT_GUESSES, DEFAULT_MAX_ENUMERATE, in_permuted_union_s2

logger = logging.getLogger(__name__)


def _certified(configuration: Configuration, verdict: Verdict, epsilon: float) -> Verdict:
    """
    Re-verify the certificate of an Inside verdict before it leaves the check.

    The image only has to land in the open tube: its tube margin scales with
    the size of the configuration, so it is not held to the epsilon band.
    """
    if not verdict.is_inside or verdict.certificate is None:
        return verdict
    check = verify_certificate(configuration, verdict.certificate, epsilon)
    if check.margin > 0:
        verdict.details["certificate_margin"] = check.margin
        return verdict
    logger.error("certificate failed re-verification: %s", check.reason)
    return Verdict.unknown(
        verdict.margin,
        reason=f"certificate failed re-verification ({check.reason})",
        details=verdict.details,
    )


def _reject_inexact(name: str, configuration: Configuration) -> None:
    raise ValueError(
        f"{name}: exact mode needs s = 2, got s = {configuration.s} "
        f"(drop the exact-only flag to search instead)"
    )


class TubeCheck(DomainCheck):
    """Tube membership; the only knob is epsilon."""

    name = "tube"

    def default_config(self) -> Dict[str, Any]:
        return {"epsilon": DEFAULT_EPSILON}

    def check(self, configuration: Configuration) -> Verdict:
        return in_tube(configuration, self.config["epsilon"])


class ExtendedTubeCheck(DomainCheck):
    """
    Extended-tube membership.

    Config:
    - budget: candidates tried by the search (s > 2)
    - seed: search seed
    - exact_only: reject s != 2 instead of searching
    """

    name = "etube"

    def default_config(self) -> Dict[str, Any]:
        return {
            "epsilon": DEFAULT_EPSILON,
            "budget": 2000,
            "seed": 0,
            "exact_only": False,
        }

    def check(self, configuration: Configuration) -> Verdict:
        eps = self.config["epsilon"]
        if configuration.s == 2:
            verdict = in_extended_tube_s2(configuration, eps)
        elif self.config["exact_only"]:
            _reject_inexact(self.name, configuration)
        else:
            verdict = in_extended_tube_search(
                configuration,
                budget=self.config["budget"],
                seed=self.config["seed"],
                epsilon=eps,
            )
        return _certified(configuration, verdict, eps)


class JostCheck(DomainCheck):
    """Jost-point test for real configurations."""

    name = "jost"

    def default_config(self) -> Dict[str, Any]:
        return {
            "epsilon": DEFAULT_EPSILON,
            "samples": 10_000,
            "seed": 0,
            "exact_only": False,
        }

    def check(self, configuration: Configuration) -> Verdict:
        eps = self.config["epsilon"]
        if configuration.s == 2:
            verdict = is_jost_s2(configuration, eps)
        elif self.config["exact_only"]:
            _reject_inexact(self.name, configuration)
        else:
            verdict = jost_sampling(
                configuration,
                samples=self.config["samples"],
                seed=self.config["seed"],
                epsilon=eps,
            )
        return _certified(configuration, verdict, eps)


class UnionCheck(DomainCheck):
    """Permuted-union membership, s = 2 only."""

    name = "union"

    def default_config(self) -> Dict[str, Any]:
        return {
            "epsilon": DEFAULT_EPSILON,
            "max_enumerate": DEFAULT_MAX_ENUMERATE,
            "guesses": DEFAULT_GUESSES,
            "seed": 0,
        }

    def check(self, configuration: Configuration) -> Verdict:
        eps = self.config["epsilon"]
        verdict = in_permuted_union_s2(
            configuration,
            epsilon=eps,
            max_enumerate=self.config["max_enumerate"],
            guesses=self.config["guesses"],
            seed=self.config["seed"],
        )
        return _certified(configuration, verdict, eps)


# Check registry: maps command name to check class
CHECKS: Dict[str, Type[DomainCheck]] = {
    "tube": TubeCheck,
    "etube": ExtendedTubeCheck,
    "jost": JostCheck,
    "union": UnionCheck,
}


def run_check(
    name: str,
    configuration: Configuration,
    overrides: Optional[Dict[str, Any]] = None,
) -> Verdict:
    """
    Run the named check on one configuration.

    Raises:
        ValueError: If the check name or a config key is unknown
    """
    if name not in CHECKS:
        available = ", ".join(sorted(CHECKS.keys()))
        raise ValueError(f"Unknown check '{name}'. Available: {available}")
    verdict = CHECKS[name](overrides).check(configuration)
    logger.info("%s check: %s (margin %.6g)", name, verdict.state.value, verdict.margin)
    return verdict
