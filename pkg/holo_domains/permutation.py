"""
Permuted Unions
===============

Microcausality lets a function analytic in the extended tube of one
ordering of the points be continued into the extended tubes of the other
orderings. This module decides membership in the union of those permuted
extended tubes (s = 2), by exhaustive enumeration for small m and by
guess-and-verify beyond, and keeps the Bose/Fermi sign bookkeeping.

Permutations are 1-based: (2, 1, 3) reorders z_1 z_2 z_3 into z_2 z_1 z_3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations as _lexicographic
from typing import Callable, Iterator, List, Optional, Sequence, Union

import numpy as np

from .base import (
    DEFAULT_EPSILON,
    Certificate,
    Statistics,
    Verdict,
    VerdictState,
    check_epsilon,
)
from .domains import in_extended_tube_s2, verify_certificate
from .geometry import Configuration, is_spacelike

logger = logging.getLogger(__name__)

DEFAULT_MAX_ENUMERATE = 8
DEFAULT_GUESSES = 200

CandidateSource = Callable[[np.random.Generator, int], Sequence[int]]


def verify_permutation(candidate: Sequence[int], m: int) -> bool:
    """
    True iff candidate is a bijection on {1..m}.

    One pass with a seen-table: O(m) time and space. Malformed input
    (wrong length, non-integers, out-of-range values) gives False.
    """
    try:
        values = list(candidate)
    except TypeError:
        return False
    if len(values) != m:
        return False
    seen = [False] * m
    for value in values:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            return False
        if not 1 <= value <= m or seen[value - 1]:
            return False
        seen[value - 1] = True
    return True


@dataclass(frozen=True)
class Permutation:
    """A reordering of m points, stored as the 1-based sequence pi(1) .. pi(m)."""

    mapping: tuple

    def __post_init__(self):
        mapping = tuple(int(p) for p in self.mapping)
        if not verify_permutation(mapping, len(mapping)):
            raise ValueError(f"{self.mapping} is not a permutation of 1..{len(mapping)}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @property
    def m(self) -> int:
        return len(self.mapping)

    def __len__(self) -> int:
        return self.m

    def __iter__(self) -> Iterator[int]:
        return iter(self.mapping)

    def __call__(self, j: int) -> int:
        return self.mapping[j - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """
        j -> self(other(j)).

        permute_config(permute_config(c, self), other) equals
        permute_config(c, self.compose(other)).
        """
        if other.m != self.m:
            raise ValueError(f"Cannot compose permutations of {self.m} and {other.m} points")
        return Permutation(tuple(self(other(j)) for j in range(1, self.m + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for j, p in enumerate(self.mapping, start=1):
            inv[p - 1] = j
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        """Number of pairs j < k with pi(j) > pi(k)."""
        return sum(
            1
            for j in range(self.m)
            for k in range(j + 1, self.m)
            if self.mapping[j] > self.mapping[k]
        )

    @property
    def parity(self) -> int:
        return -1 if self.inversions() % 2 else 1


PermutationLike = Union[Permutation, Sequence[int]]


def _as_permutation(value: PermutationLike) -> Permutation:
    return value if isinstance(value, Permutation) else Permutation(tuple(value))


def all_permutations(m: int) -> Iterator[Permutation]:
    """All m! permutations in lexicographic order, identity first."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    for mapping in _lexicographic(range(1, m + 1)):
        yield Permutation(mapping)


def permute_config(c: Configuration, pi: PermutationLike) -> Configuration:
    """
    Reorder points and field flags as z_pi(1) .. z_pi(m).

    Raises:
        ValueError: If the permutation length differs from m
    """
    pi = _as_permutation(pi)
    if pi.m != c.m:
        raise ValueError(f"Permutation of {pi.m} points applied to m = {c.m}")
    return Configuration(
        s=c.s,
        points=tuple(c.points[p - 1] for p in pi),
        fields=tuple(c.fields[p - 1] for p in pi),
    )


def statistics_sign(fields: Sequence[Union[str, Statistics]], pi: PermutationLike) -> int:
    """
    Sign picked up by reordering fields with the given statistics.

    (-1)^k with k the number of pairs of Fermi fields whose relative order
    the permutation reverses.

    Raises:
        ValueError: If the lengths differ
    """
    pi = _as_permutation(pi)
    flags = [Statistics.parse(f) for f in fields]
    if len(flags) != pi.m:
        raise ValueError(f"{len(flags)} field flags for a permutation of {pi.m} points")
    fermions = [p for p in pi if flags[p - 1] is Statistics.FERMI]
    swaps = sum(
        1
        for j in range(len(fermions))
        for k in range(j + 1, len(fermions))
        if fermions[j] > fermions[k]
    )
    return -1 if swaps % 2 else 1


def _union_inside(
    c: Configuration, pi: Permutation, verdict: Verdict, epsilon: float, **details
) -> Verdict:
    certificate = Certificate(scale=verdict.certificate.scale, permutation=pi.mapping)
    check = verify_certificate(c, certificate, epsilon)
    if check.margin <= 0:
        logger.error("certificate for %s failed re-verification: %s", pi.mapping, check.reason)
        return Verdict.unknown(
            check.margin, reason="certificate failed re-verification", details=details
        )
    return Verdict(
        state=VerdictState.INSIDE,
        margin=verdict.margin,
        certificate=certificate,
        reason=f"permutation {list(pi.mapping)} lands in the extended tube",
        details={
            **details,
            "statistics_sign": statistics_sign(c.fields, pi),
            "angular_margin": verdict.details.get("angular_margin"),
        },
    )


def _draw_uniform(rng: np.random.Generator, m: int) -> Sequence[int]:
    return [int(x) for x in rng.integers(1, m + 1, size=m)]


def guess_and_verify(
    c: Configuration,
    guesses: int = DEFAULT_GUESSES,
    seed: int = 0,
    epsilon: float = DEFAULT_EPSILON,
    source: Optional[CandidateSource] = None,
) -> Verdict:
    """
    Randomized search for a permutation that puts c into the extended tube.

    Each guess is a uniformly random sequence in {1..m}^m drawn from
    default_rng([seed, index]); guesses that are not permutations are thrown
    away, the rest are checked with in_extended_tube_s2.

    Args:
        c: s = 2 configuration
        guesses: Number of candidate sequences to draw
        seed: Base seed
        epsilon: Width of the Boundary band
        source: Candidate generator (rng, m) -> sequence; uniform by default

    Returns:
        Inside with a (permutation, lambda) certificate on the first success,
        otherwise Unknown. Never Outside.

    Raises:
        ValueError: If guesses <= 0 or s != 2
    """
    if guesses <= 0:
        raise ValueError(f"guesses must be positive, got {guesses}")
    if c.s != 2:
        raise ValueError(f"guess_and_verify needs s = 2, got s = {c.s}")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    epsilon = check_epsilon(epsilon)
    source = source or _draw_uniform

    well_formed = 0
    for index in range(guesses):
        candidate = source(np.random.default_rng([seed, index]), c.m)
        if not verify_permutation(candidate, c.m):
            continue
        well_formed += 1
        pi = Permutation(tuple(candidate))
        verdict = in_extended_tube_s2(permute_config(c, pi), epsilon)
        if verdict:
            logger.info("guess %d (%s) verified", index, pi.mapping)
            return _union_inside(c, pi, verdict, epsilon, guesses=index + 1, well_formed=well_formed)

    logger.info("guess_and_verify: %d guesses, %d well formed, none verified", guesses, well_formed)
    return Verdict.unknown(
        0.0,
        reason=f"none of {well_formed} well-formed guesses (out of {guesses}) verified",
        details={"guesses": guesses, "well_formed": well_formed},
    )


def in_permuted_union_s2(
    c: Configuration,
    epsilon: float = DEFAULT_EPSILON,
    max_enumerate: int = DEFAULT_MAX_ENUMERATE,
    guesses: int = DEFAULT_GUESSES,
    seed: int = 0,
) -> Verdict:
    """
    Decide membership in the union of permuted extended tubes (s = 2).

    For m <= max_enumerate all m! orderings are tried in lexicographic
    order and the first Inside wins; if none is Inside the verdict is
    Boundary when some ordering is, Outside otherwise. Larger m falls back
    to guess_and_verify and never claims Outside.

    Raises:
        ValueError: If s != 2
    """
    if c.s != 2:
        raise ValueError(f"in_permuted_union_s2 needs s = 2, got s = {c.s}")
    epsilon = check_epsilon(epsilon)

    if c.m > max_enumerate:
        logger.warning(
            "m = %d exceeds max_enumerate = %d; falling back to guess-and-verify",
            c.m,
            max_enumerate,
        )
        verdict = guess_and_verify(c, guesses=guesses, seed=seed, epsilon=epsilon)
        verdict.details["enumerated"] = False
        return verdict

    best = -np.inf
    tried = 0
    for pi in all_permutations(c.m):
        tried += 1
        verdict = in_extended_tube_s2(permute_config(c, pi), epsilon)
        if verdict:
            return _union_inside(c, pi, verdict, epsilon, tried=tried, enumerated=True)
        best = max(best, verdict.margin)

    return Verdict.from_margin(
        best,
        epsilon,
        reason=f"none of the {tried} orderings lands in the extended tube",
        details={"tried": tried, "enumerated": True},
    )


@dataclass(frozen=True)
class MicrocausalPair:
    """Two points at spacelike separation and the exchange rule between their fields."""

    i: int
    j: int
    kind: str
    square: float


def microcausal_pairs(
    c: Configuration, epsilon: float = DEFAULT_EPSILON
) -> List[MicrocausalPair]:
    """
    All pairs i < j (1-based) whose real parts are spacelike separated.

    kind is "anticommute" for two Fermi fields and "commute" otherwise.
    """
    epsilon = check_epsilon(epsilon)
    pairs = []
    for i in range(c.m):
        for j in range(i + 1, c.m):
            separation = (c.points[i] - c.points[j]).real
            verdict = is_spacelike(separation, c.metric, epsilon)
            if verdict:
                both_fermi = c.fields[i] is Statistics.FERMI and c.fields[j] is Statistics.FERMI
                pairs.append(
                    MicrocausalPair(
                        i=i + 1,
                        j=j + 1,
                        kind="anticommute" if both_fermi else "commute",
                        square=-verdict.margin,
                    )
                )
    return pairs
