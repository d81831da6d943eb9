"""
Self-Test
=========

Property suites run in-process against brute-force oracles:

- cones: forward-cone verdicts vs the closed-form inequalities
- classification: order classes vs the worked statements for s = 2, 3, 4
- etube_exactness: exact s = 2 extended tube vs a 10^4-angle grid search
- inclusion: tube => extended tube => permuted union
- certificates: every Inside certificate re-verifies
- jost: quadrant test vs arc test vs convex-combination sampling
- lorentz: tube verdicts invariant under random restricted transforms
- hornsat: least models vs truth tables
- containment: one certificate covers every consecutive suborder
- statistics: signs vs adjacent-transposition counting
- formats: JSON round trips and byte-stable class tables

Every suite draws from default_rng([seed, suite_index]) so results depend
only on the seed and the quick/full switch.
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from .base import Statistics, VerdictState
from .classify import intermediate_band, order_class, OrderClass
from .domains import (
    check_containment,
    in_extended_tube_s2,
    in_tube,
    is_jost_s2,
    jost_sampling,
    project_suborder,
    suborders,
    verify_certificate,
)
from .geometry import Configuration, Metric, RealVector, in_open_forward_cone
from .geometry.configuration import difference_array
from .hornsat import HornClause, HornFormula, minimal_model
from .io import dump_configuration, parse_configuration
from .lorentz import apply, random_restricted, s2_scaling, verify_lorentz
from .permutation import (
    all_permutations,
    in_permuted_union_s2,
    statistics_sign,
)

logger = logging.getLogger(__name__)

GRID_POINTS = 10_000
GRID_SPACING = 2 * np.pi / GRID_POINTS


@dataclass
class SuiteResult:
    """Outcome of one suite."""

    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


# ==================== Generators and oracles ====================


def random_configuration(
    rng: np.random.Generator, s: int, m: int, scale: float = 10.0, real: bool = False
) -> Configuration:
    re = rng.uniform(-scale, scale, (m, s))
    im = np.zeros((m, s)) if real else rng.uniform(-scale, scale, (m, s))
    return Configuration.build(re + 1j * im)


def _from_differences(xi: np.ndarray) -> Configuration:
    """Points with z_m = 0 and z_i - z_{i+1} = xi_i."""
    tail = np.cumsum(xi[::-1], axis=0)[::-1]
    return Configuration.build(np.vstack([tail, np.zeros((1, xi.shape[1]))]))


def tube_configuration(
    rng: np.random.Generator, s: int, m: int, scale: float = 10.0
) -> Configuration:
    """Configuration with every -Im xi_i well inside the forward cone."""
    spatial = rng.uniform(-scale, scale, (m - 1, s - 1))
    y0 = np.linalg.norm(spatial, axis=1) + rng.uniform(0.1, scale, m - 1)
    y = np.column_stack([y0, spatial])
    re = rng.uniform(-scale, scale, (m - 1, s))
    return _from_differences(re - 1j * y)


def jost_configuration(
    rng: np.random.Generator, m: int, scale: float = 10.0
) -> Configuration:
    """Real s = 2 configuration with all differences in one spacelike quadrant."""
    a = rng.uniform(0.1, scale, m - 1)
    b = rng.uniform(0.1, scale, m - 1)
    sign = rng.choice([-1.0, 1.0])
    u, v = -sign * a, sign * b
    return _from_differences(np.column_stack([(u + v) / 2, (u - v) / 2]).astype(complex))


def theta_grid_oracle(c: Configuration, points: int = GRID_POINTS) -> bool:
    """True iff some lam = exp(i*theta) on the grid satisfies every tube condition."""
    xi = difference_array(c)
    u = xi[:, 0] + xi[:, 1]
    v = xi[:, 0] - xi[:, 1]
    lam = np.exp(1j * (-np.pi + 2 * np.pi * np.arange(points) / points))[:, None]
    ok = np.all((lam * u).imag < 0, axis=1) & np.all((v / lam).imag < 0, axis=1)
    return bool(ok.any())


def truth_table(formula: HornFormula) -> np.ndarray:
    """All satisfying assignments as boolean rows over formula.atoms."""
    n = len(formula.atoms)
    rows = ((np.arange(2**n)[:, None] >> np.arange(n)) & 1).astype(bool)
    ok = np.ones(rows.shape[0], dtype=bool)
    for clause in formula:
        body = [formula.atom_index(a) for a in clause.body]
        fired = np.all(rows[:, body], axis=1) if body else np.ones(rows.shape[0], bool)
        if clause.head is None:
            ok &= ~fired
        else:
            ok &= ~fired | rows[:, formula.atom_index(clause.head)]
    return rows[ok]


def random_formula(rng: np.random.Generator, atoms: int, clauses: int) -> HornFormula:
    names = [f"p{i}" for i in range(atoms)]
    formula = HornFormula()
    for name in names:
        formula.add_clause([name], name)
    for _ in range(clauses):
        size = int(rng.integers(0, min(3, atoms) + 1))
        body = [names[i] for i in rng.choice(atoms, size=size, replace=False)]
        head = int(rng.integers(-1, atoms))
        formula.add_clause(body, None if head < 0 else names[head])
    return formula


def bubble_sign(fields: Sequence[Statistics], mapping: Sequence[int]) -> int:
    """Sort back to the identity with adjacent swaps, counting Fermi-Fermi swaps."""
    order = list(mapping)
    swaps = 0
    for i in range(len(order)):
        for j in range(len(order) - 1 - i):
            if order[j] > order[j + 1]:
                a, b = fields[order[j] - 1], fields[order[j + 1] - 1]
                if a is Statistics.FERMI and b is Statistics.FERMI:
                    swaps += 1
                order[j], order[j + 1] = order[j + 1], order[j]
    return -1 if swaps % 2 else 1


def _count(
    quick: bool, quick_count: int, full_count: int, limit: Optional[int]
) -> int:
    """Random cases for one sample, capped at limit."""
    count = quick_count if quick else full_count
    return count if limit is None else min(count, limit)


def _state_from_margin(margin: float, epsilon: float) -> VerdictState:
    if margin > epsilon:
        return VerdictState.INSIDE
    if margin < -epsilon:
        return VerdictState.OUTSIDE
    return VerdictState.BOUNDARY


# ==================== Suites ====================


def suite_cones(
    rng, quick: bool, metric: Callable[[int], Metric], limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("cones")
    eps = 1e-9
    fixed = [([1.0, 0.0], VerdictState.INSIDE), ([0.0, 1.0], VerdictState.OUTSIDE)]
    fixed += [([1.0, 1.0], VerdictState.BOUNDARY), ([-1.0, 0.0], VerdictState.OUTSIDE)]
    randoms = []
    for _ in range(_count(quick, 200, 2000, limit)):
        s = int(rng.integers(2, 5))
        x = rng.uniform(-2, 2, s)
        q = x[0] ** 2 - np.sum(x[1:] ** 2)
        randoms.append((list(x), _state_from_margin(min(x[0], q), eps)))
    for components, expected in fixed + randoms:
        result.cases += 1
        verdict = in_open_forward_cone(RealVector(components), metric(len(components)), eps)
        if verdict.state is not expected:
            result.fail(f"{components}: {verdict.state.value} != {expected.value}")
    return result


def suite_classification(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("classification")
    expected = {
        2: {OrderClass.LOWER: [2, 3], OrderClass.INTERMEDIATE: []},
        3: {OrderClass.INTERMEDIATE: [5]},
        4: {OrderClass.INTERMEDIATE: [6, 7, 8]},
    }
    for s, classes in expected.items():
        for klass, orders in classes.items():
            result.cases += 1
            got = [m for m in range(2, 20) if order_class(s, m) is klass]
            if got != orders:
                result.fail(f"s={s} {klass.value}: {got} != {orders}")
    for s in range(2, 65):
        result.cases += 1
        if order_class(s, s + 1) is not OrderClass.LOWER:
            result.fail(f"s={s}: m=s+1 not lower")
        if order_class(s, s * (s - 1) // 2 + 3) is not OrderClass.HIGH:
            result.fail(f"s={s}: m=s(s-1)/2+3 not high")
        if (len(intermediate_band(s)) == 0) != (s == 2):
            result.fail(f"s={s}: intermediate band emptiness wrong")
    return result


def _mixed_sample(rng, count: int) -> List[Configuration]:
    return [random_configuration(rng, 2, int(rng.integers(2, 6))) for _ in range(count)]


def suite_etube_exactness(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("etube_exactness")
    threshold = max(1e-6, GRID_SPACING)
    for c in _mixed_sample(rng, _count(quick, 1000, 10_000, limit)):
        verdict = in_extended_tube_s2(c)
        if abs(verdict.details["angular_margin"]) <= threshold:
            continue
        result.cases += 1
        if verdict.is_inside != theta_grid_oracle(c):
            result.fail(f"{verdict.state.value} disagrees with grid oracle: {c.as_array().tolist()}")
    return result


def suite_inclusion(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("inclusion")
    sample = _mixed_sample(rng, _count(quick, 1000, 10_000, limit))
    sample += [tube_configuration(rng, 2, int(rng.integers(2, 6))) for _ in range(len(sample) // 10)]
    for c in sample:
        result.cases += 1
        tube = in_tube(c)
        etube = in_extended_tube_s2(c)
        if tube and not etube:
            result.fail(f"tube but not extended tube: {c.as_array().tolist()}")
        if etube and not in_permuted_union_s2(c):
            result.fail(f"extended tube but not union: {c.as_array().tolist()}")
    return result


def suite_certificates(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("certificates")
    sample = _mixed_sample(rng, _count(quick, 1000, 10_000, limit))
    for index, c in enumerate(sample):
        verdicts = [in_extended_tube_s2(c)]
        if index % 20 == 0:
            verdicts.append(in_permuted_union_s2(c))
        for verdict in verdicts:
            if not verdict:
                continue
            result.cases += 1
            if verify_certificate(c, verdict.certificate).margin <= 0:
                result.fail(f"certificate {verdict.certificate.to_dict()} failed")
    return result


def suite_jost(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("jost")
    count = _count(quick, 200, 1000, limit)
    samples = 1000 if quick else 10_000
    for index in range(count):
        m = int(rng.integers(2, 6))
        if index % 2:
            c = jost_configuration(rng, m)
        else:
            c = random_configuration(rng, 2, m, real=True)
        jost = is_jost_s2(c)
        etube = in_extended_tube_s2(c)
        if abs(jost.margin) <= 1e-6 or abs(etube.margin) <= 1e-6:
            continue
        result.cases += 1
        if jost.state is not etube.state:
            result.fail(f"jost {jost.state.value} vs etube {etube.state.value}")
        sampled = jost_sampling(c, samples=samples, seed=index)
        if jost.state is VerdictState.OUTSIDE and sampled.state is not VerdictState.OUTSIDE:
            result.fail(f"sampling found no violation for Outside {c.as_array().real.tolist()}")
        if jost.is_inside and sampled.state is VerdictState.OUTSIDE:
            result.fail(f"sampling contradicts Inside {c.as_array().real.tolist()}")
    return result


def _cone_robust(c: Configuration, threshold: float = 1e-3) -> bool:
    y = -difference_array(c).imag
    squares = np.sum(c.metric.signature * y * y, axis=1)
    return bool(np.all(np.abs(squares) > threshold))


def suite_lorentz(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("lorentz")
    count = _count(quick, 200, 1000, limit)
    index = 0
    while result.cases < count:
        s = int(rng.integers(2, 5))
        m = int(rng.integers(2, 5))
        if index % 2:
            c = tube_configuration(rng, s, m)
        else:
            c = random_configuration(rng, s, m)
        index += 1
        if not _cone_robust(c):
            continue
        result.cases += 1
        transform = random_restricted(c.metric, seed=index, max_rapidity=2.0)
        check = verify_lorentz(transform, c.metric)
        if check.max_deviation >= 1e-10:
            result.fail(f"Lorentz deviation {check.max_deviation:.3g} (s={s}, seed={index})")
        before = in_tube(c).state
        after = in_tube(apply(transform, c)).state
        if before is not after:
            result.fail(f"tube state {before.value} -> {after.value} (s={s}, seed={index})")
    return result


def _check_formula(formula: HornFormula, result: SuiteResult) -> None:
    result.cases += 1
    model = minimal_model(formula)
    rows = truth_table(formula)
    if not model:
        if len(rows):
            result.fail(f"UNSAT but satisfiable: {formula.to_text()!r}")
        return
    if not len(rows):
        result.fail(f"model found for unsatisfiable formula: {formula.to_text()!r}")
        return
    least = {a for a, bit in zip(formula.atoms, np.all(rows, axis=0)) if bit}
    if set(model.atoms) != least:
        result.fail(f"model {sorted(model.atoms)} is not least ({sorted(least)})")


def suite_hornsat(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("hornsat")
    clauses = [
        HornClause(frozenset(body), head)
        for size in range(3)
        for body in combinations(["a", "b"], size)
        for head in ("a", "b", None)
    ]
    for k in range(5):
        for chosen in combinations(clauses, k):
            _check_formula(HornFormula(chosen), result)
    for _ in range(_count(quick, 300, 2000, limit)):
        _check_formula(
            random_formula(rng, int(rng.integers(1, 5)), int(rng.integers(0, 5))), result
        )
    for _ in range(_count(quick, 100, 1000, limit)):
        _check_formula(random_formula(rng, 15, int(rng.integers(5, 25))), result)
    return result


def suite_containment(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("containment")
    count = _count(quick, 200, 1000, limit)
    while result.cases < count:
        base = tube_configuration(rng, 2, int(rng.integers(2, 6)))
        lam = rng.uniform(0.2, 5.0) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        c = apply(s2_scaling(lam), base)
        verdict = in_extended_tube_s2(c)
        if not verdict:
            continue
        result.cases += 1
        if not check_containment(c, verdict.certificate):
            result.fail(f"certificate does not cover all suborders: {c.as_array().tolist()}")
        for i, k in suborders(c.m):
            if not in_extended_tube_s2(project_suborder(c, i, k)):
                result.fail(f"projection ({i}, {k}) left the extended tube")
    return result


def suite_statistics(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    result = SuiteResult("statistics")
    for m in range(1, 6 if quick else 7):
        for pattern in range(2**m):
            fields = [Statistics.FERMI if pattern >> i & 1 else Statistics.BOSE for i in range(m)]
            for pi in all_permutations(m):
                result.cases += 1
                if statistics_sign(fields, pi) != bubble_sign(fields, pi.mapping):
                    result.fail(f"sign mismatch for {pi.mapping} with {[f.value for f in fields]}")
    fermions = [Statistics.FERMI] * 4
    for pi in all_permutations(4):
        for sigma in all_permutations(4):
            result.cases += 1
            composed = statistics_sign(fermions, pi.compose(sigma))
            if composed != statistics_sign(fermions, pi) * statistics_sign(fermions, sigma):
                result.fail(f"sign not multiplicative for {pi.mapping}, {sigma.mapping}")
    return result


def suite_formats(
    rng, quick: bool, metric, limit: Optional[int] = None
) -> SuiteResult:
    from .cli import render_class_table

    result = SuiteResult("formats")
    for _ in range(_count(quick, 50, 500, limit)):
        c = random_configuration(rng, int(rng.integers(2, 5)), int(rng.integers(1, 6)))
        result.cases += 1
        if parse_configuration(dump_configuration(c)) != c:
            result.fail("configuration round trip changed the value")
    for s, m_max in ((2, 4), (3, 6), (4, 9)):
        for fmt in ("table", "json"):
            result.cases += 1
            if render_class_table(s, m_max, fmt) != render_class_table(s, m_max, fmt):
                result.fail(f"class table for s={s} not byte-stable ({fmt})")
    return result


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "cones": suite_cones,
    "classification": suite_classification,
    "etube_exactness": suite_etube_exactness,
    "inclusion": suite_inclusion,
    "certificates": suite_certificates,
    "jost": suite_jost,
    "lorentz": suite_lorentz,
    "hornsat": suite_hornsat,
    "containment": suite_containment,
    "statistics": suite_statistics,
    "formats": suite_formats,
}


def run_suites(
    seed: int = 0,
    quick: bool = True,
    metric: Callable[[int], Metric] = Metric,
    only: Optional[Sequence[str]] = None,
    limit: Optional[int] = None,
) -> List[SuiteResult]:
    """
    Run the suites in order.

    Args:
        seed: Base seed; suite k draws from default_rng([seed, k])
        quick: Smaller samples
        metric: Metric factory s -> Metric used by the cone suite
        only: Names of suites to run (all by default)
        limit: Cap on the random cases each sample draws; fixed cases always run

    Raises:
        ValueError: If `only` names an unknown suite or limit is not positive
    """
    if limit is not None and limit <= 0:
        raise ValueError(f"limit must be positive, got {limit}")
    names = list(SUITES) if only is None else list(only)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}. Available: {', '.join(SUITES)}")
    results = []
    for index, name in enumerate(SUITES):
        if name not in names:
            continue
        rng = np.random.default_rng([seed, index])
        start = time.perf_counter()
        result = SUITES[name](rng, quick, metric, limit=limit)
        result.seconds = time.perf_counter() - start
        logger.info(
            "suite %s: %d cases, %d failures (%.2fs)",
            name,
            result.cases,
            len(result.failures),
            result.seconds,
        )
        results.append(result)
    return results


def summary_frame(results: Sequence[SuiteResult]) -> pd.DataFrame:
    """Deterministic summary: no timings."""
    return pd.DataFrame(
        [
            {
                "suite": r.name,
                "status": "pass" if r.passed else "FAIL",
                "cases": r.cases,
                "failures": len(r.failures),
            }
            for r in results
        ],
        columns=["suite", "status", "cases", "failures"],
    )
