"""
Order Classification
====================

Bookkeeping over space-time dimension s and function order m:

- function index n = s*m, the number of complex variables
- order classes: lower (m <= s + 1), high (m > s(s-1)/2 + 2),
  intermediate in between; s = 2 has no intermediate orders

Usage:
    from holo_domains.classify import class_table

    table = class_table(4, 9)
    table[table.order_class == "intermediate"].m.tolist()   # [6, 7, 8]
"""

from enum import Enum
from typing import Dict, NamedTuple

import pandas as pd

INDEX_LIMIT = 2**31 - 1


class OrderClass(str, Enum):
    LOWER = "lower"
    INTERMEDIATE = "intermediate"
    HIGH = "high"


def _check_int(name: str, value: int, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def function_index(s: int, m: int) -> int:
    """
    n = s*m.

    Raises:
        ValueError: If s < 2 or m < 1
        OverflowError: If n exceeds INDEX_LIMIT
    """
    _check_int("s", s, 2)
    _check_int("m", m, 1)
    n = s * m
    if n > INDEX_LIMIT:
        raise OverflowError(f"function index {s}*{m} = {n} exceeds {INDEX_LIMIT}")
    return n


def high_order_threshold(s: int) -> int:
    """Smallest high order: s(s-1)/2 + 3."""
    _check_int("s", s, 2)
    return s * (s - 1) // 2 + 3


def intermediate_band(s: int) -> range:
    """Intermediate orders s+2 .. s(s-1)/2 + 2; empty exactly for s = 2."""
    _check_int("s", s, 2)
    return range(s + 2, high_order_threshold(s))


def order_class(s: int, m: int) -> OrderClass:
    """
    Raises:
        ValueError: If s < 2 or m < 2
    """
    _check_int("s", s, 2)
    _check_int("m", m, 2)
    if m <= s + 1:
        return OrderClass.LOWER
    if m >= high_order_threshold(s):
        return OrderClass.HIGH
    return OrderClass.INTERMEDIATE


def class_table(s: int, m_max: int) -> pd.DataFrame:
    """
    One row per order m = 2 .. m_max.

    Returns:
        DataFrame with columns m, order_class (string value), n
    """
    _check_int("m_max", m_max, 2)
    rows = [
        {"m": m, "order_class": order_class(s, m).value, "n": function_index(s, m)}
        for m in range(2, m_max + 1)
    ]
    return pd.DataFrame(rows, columns=["m", "order_class", "n"])


class ProblemPart(NamedTuple):
    """One part of the domain-of-holomorphy problem."""

    title: str
    complexity: str
    implemented: str


# Parts of the problem with the complexity stratum for s = 2
PROBLEM_PARTS: Dict[str, ProblemPart] = {
    "A": ProblemPart(
        title="tube and extended-tube membership",
        complexity="P",
        implemented="full (exact for s = 2, certificate search for s > 2)",
    ),
    "B": ProblemPart(
        title="union of permuted extended tubes",
        complexity="NP",
        implemented="full (enumeration and guess-and-verify)",
    ),
    "C": ProblemPart(
        title="envelope of holomorphy",
        complexity="co-NP",
        implemented="containment property only",
    ),
}


def parts_table() -> pd.DataFrame:
    return pd.DataFrame(
        [{"part": key, **part._asdict()} for key, part in PROBLEM_PARTS.items()],
        columns=["part", "title", "complexity", "implemented"],
    )
