"""
Jost Point Tests
================

Exact s = 2 quadrant test and convex-combination sampling.

Run with: pytest tests/test_jost.py -v
"""

import numpy as np
import pytest

from holo_domains.base import VerdictState
from holo_domains.domains import (
    PROBABLY_INSIDE,
    in_extended_tube_s2,
    is_jost_s2,
    jost_sampling,
    quadrant_margins,
)
from holo_domains.geometry import Configuration, Metric
from tests.fixtures import (
    ETUBE_OUTSIDE_REORDER_TRIPLE,
    JOST_INSIDE_PAIR,
    JOST_INSIDE_TINY_PAIR,
    JOST_INSIDE_TRIPLE,
    JOST_OUTSIDE_OPPOSED_TRIPLE,
    JOST_OUTSIDE_TIMELIKE_PAIR,
    JOST_S3_OPPOSED_TRIPLE,
    JOST_S3_SPACELIKE_PAIR,
    JOST_S3_TIMELIKE_PAIR,
    TUBE_INSIDE_PAIR,
    jost_configuration,
    random_configuration,
)


def _make_configuration(xi):
    """Points with z_m = 0 and the given real differences."""
    xi = np.asarray(xi, dtype=float)
    tail = np.cumsum(xi[::-1], axis=0)[::-1]
    return Configuration.build(np.vstack([tail, np.zeros((1, xi.shape[1]))]))


class TestIsJostS2:
    """Tests for the exact quadrant test."""

    # =========================================================================
    # INSIDE
    # =========================================================================

    def test_spacelike_pair_inside(self):
        verdict = is_jost_s2(JOST_INSIDE_PAIR)
        assert verdict.state is VerdictState.INSIDE
        assert verdict.certificate.scale == 1j
        assert verdict.details["quadrant"] == "u<0<v"

    def test_same_quadrant_triple_inside(self):
        verdict = is_jost_s2(JOST_INSIDE_TRIPLE)
        assert verdict.state is VerdictState.INSIDE

    def test_mirror_quadrant_uses_minus_i(self):
        c = Configuration.build([[0, 1], [0, 0]])
        verdict = is_jost_s2(c)
        assert verdict.state is VerdictState.INSIDE
        assert verdict.certificate.scale == -1j

    def test_margin_matches_extended_tube(self):
        jost = is_jost_s2(JOST_INSIDE_TRIPLE)
        etube = in_extended_tube_s2(JOST_INSIDE_TRIPLE)
        assert jost.margin == pytest.approx(etube.margin)

    def test_tiny_pair_inside_with_angular_margin(self):
        verdict = is_jost_s2(JOST_INSIDE_TINY_PAIR)
        assert verdict.state is VerdictState.INSIDE
        assert verdict.margin == pytest.approx(np.pi / 2)
        assert verdict.details["quadrant"] == "v<0<u"
        assert verdict.details["image_margin"] == pytest.approx(1e-10)
        assert in_extended_tube_s2(JOST_INSIDE_TINY_PAIR).state is VerdictState.INSIDE

    # =========================================================================
    # OUTSIDE
    # =========================================================================

    def test_mixed_quadrants_outside(self):
        verdict = is_jost_s2(ETUBE_OUTSIDE_REORDER_TRIPLE)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.certificate is None

    def test_timelike_pair_outside(self):
        verdict = is_jost_s2(JOST_OUTSIDE_TIMELIKE_PAIR)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.margin == pytest.approx(-1.0)

    def test_quadrant_margins(self):
        upper, lower = quadrant_margins(JOST_OUTSIDE_OPPOSED_TRIPLE)
        assert upper == pytest.approx(-1.0)
        assert lower == pytest.approx(-1.0)

    # =========================================================================
    # ERRORS
    # =========================================================================

    def test_complex_configuration_rejected(self):
        with pytest.raises(ValueError, match="real"):
            is_jost_s2(TUBE_INSIDE_PAIR)

    def test_requires_s2(self):
        with pytest.raises(ValueError, match="s = 2"):
            is_jost_s2(JOST_S3_SPACELIKE_PAIR)

    # =========================================================================
    # AGREEMENT WITH THE ARC TEST
    # =========================================================================

    def test_agrees_with_extended_tube_on_random_real_points(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            c = random_configuration(rng, 2, int(rng.integers(2, 5)), real=True)
            jost = is_jost_s2(c)
            etube = in_extended_tube_s2(c)
            if abs(jost.margin) < 1e-6 or abs(etube.margin) < 1e-6:
                continue
            assert jost.state is etube.state

    def test_generated_jost_configurations_inside(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            assert is_jost_s2(jost_configuration(rng, int(rng.integers(2, 6))))


class TestJostSampling:
    """Tests for the convex-combination search."""

    def test_opposed_pair_witness_is_midpoint(self):
        verdict = jost_sampling(JOST_OUTSIDE_OPPOSED_TRIPLE)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.details["witness"] == pytest.approx([0.5, 0.5])
        assert verdict.details["witness_square"] == pytest.approx(0.0)
        assert verdict.details["phase"] == "exact"

    def test_mixed_quadrant_witness_is_null(self):
        verdict = jost_sampling(ETUBE_OUTSIDE_REORDER_TRIPLE)
        assert verdict.state is VerdictState.OUTSIDE
        weights = np.array(verdict.details["witness"])
        assert weights.sum() == pytest.approx(1.0)
        assert (weights >= 0).all()
        combo = weights @ np.array([[0, -2], [0, 1]])
        assert float(np.sum(Metric(2).signature * combo * combo)) >= -1e-9

    def test_same_quadrant_probably_inside(self):
        verdict = jost_sampling(JOST_INSIDE_TRIPLE)
        assert verdict.state is VerdictState.UNKNOWN
        assert verdict.reason == PROBABLY_INSIDE
        assert verdict.details["probably_inside"] is True
        assert verdict.margin > 0

    def test_single_spacelike_vector_probably_inside(self):
        verdict = jost_sampling(JOST_S3_SPACELIKE_PAIR)
        assert verdict.state is VerdictState.UNKNOWN
        assert verdict.margin == pytest.approx(1.0)

    def test_timelike_vector_outside(self):
        verdict = jost_sampling(JOST_S3_TIMELIKE_PAIR)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.margin == pytest.approx(-1.0)

    def test_opposed_s3_pair_outside(self):
        assert jost_sampling(JOST_S3_OPPOSED_TRIPLE).state is VerdictState.OUTSIDE

    def test_three_directions_need_sampling(self):
        # Pairs stay spacelike; the barycenter is timelike
        angles = [0, 2 * np.pi / 3, 4 * np.pi / 3]
        xi = [[0.3, np.cos(a), np.sin(a)] for a in angles]
        verdict = jost_sampling(_make_configuration(xi), samples=10_000, seed=0)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.details["phase"] == "sampled"
        assert len(verdict.details["witness"]) == 3

    def test_same_seed_same_witness(self):
        angles = [0, 2 * np.pi / 3, 4 * np.pi / 3]
        c = _make_configuration([[0.3, np.cos(a), np.sin(a)] for a in angles])
        first = jost_sampling(c, seed=5)
        second = jost_sampling(c, seed=5)
        assert first.details["witness"] == second.details["witness"]

    def test_samples_must_be_positive(self):
        with pytest.raises(ValueError, match="samples"):
            jost_sampling(JOST_INSIDE_PAIR, samples=0)

    def test_never_contradicts_exact_inside(self):
        rng = np.random.default_rng(21)
        for _ in range(30):
            c = jost_configuration(rng, int(rng.integers(2, 6)))
            assert jost_sampling(c, samples=500).state is VerdictState.UNKNOWN
