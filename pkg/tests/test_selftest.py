"""
Self-Test Tests
===============

The property suites pass on the real implementation, are deterministic,
and catch a deliberately broken metric.

Run with: pytest tests/test_selftest.py -v
"""

from functools import partial

import numpy as np
import pytest

from holo_domains import cli
from holo_domains.base import Statistics
from holo_domains.domains import in_tube
from holo_domains.geometry import Metric
from holo_domains.selftest import (
    SUITES,
    bubble_sign,
    run_suites,
    summary_frame,
    theta_grid_oracle,
)
from tests.fixtures import (
    ETUBE_INSIDE_SPACELIKE_PAIR,
    ETUBE_OUTSIDE_TIMELIKE_PAIR,
    tube_configuration,
)

FAST_SUITES = ["cones", "classification", "hornsat", "statistics", "formats"]

# Sampled suites, run with a small case cap
CAPPED_SUITES = [
    "etube_exactness",
    "inclusion",
    "certificates",
    "jost",
    "lorentz",
    "containment",
]


class _FlippedMetric(Metric):
    """diag(-1, +1, ..., +1): wrong sign convention."""

    @property
    def signature(self) -> np.ndarray:
        return -super().signature


class TestRunSuites:
    """Tests for running the suites in-process."""

    def setup_method(self):
        self.results = run_suites(seed=0, quick=True, only=FAST_SUITES)

    def test_fast_suites_pass(self):
        for result in self.results:
            assert result.passed, (result.name, result.failures[:3])
            assert result.cases > 0

    def test_registry_order_kept(self):
        assert [r.name for r in self.results] == [s for s in SUITES if s in FAST_SUITES]

    def test_summary_is_deterministic(self):
        again = run_suites(seed=0, quick=True, only=FAST_SUITES)
        assert summary_frame(self.results).equals(summary_frame(again))

    def test_summary_columns(self):
        frame = summary_frame(self.results)
        assert list(frame.columns) == ["suite", "status", "cases", "failures"]
        assert set(frame.status) == {"pass"}

    def test_etube_exactness_quick(self):
        (result,) = run_suites(seed=1, quick=True, only=["etube_exactness"])
        assert result.passed, result.failures[:3]

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="Unknown suites"):
            run_suites(only=["envelope"])

    def test_limit_must_be_positive(self):
        with pytest.raises(ValueError, match="limit"):
            run_suites(only=["cones"], limit=0)


class TestCappedSuites:
    """Each sampled suite passes on a capped, seeded sample."""

    @pytest.mark.parametrize("name", CAPPED_SUITES)
    def test_suite_passes(self, name):
        (result,) = run_suites(seed=2, quick=True, only=[name], limit=40)
        assert result.passed, result.failures[:3]
        assert result.cases > 0

    def test_limit_caps_the_sample(self):
        (capped,) = run_suites(seed=2, quick=True, only=["lorentz"], limit=25)
        assert capped.cases == 25

    def test_fixed_cases_survive_the_cap(self):
        (result,) = run_suites(only=["cones"], limit=1)
        assert result.cases == 5


class TestBrokenMetric:
    """A sign-flipped metric must make the cone suite fail."""

    def test_cone_suite_fails(self):
        (result,) = run_suites(only=["cones"], metric=_FlippedMetric)
        assert not result.passed
        assert "[1.0, 0.0]" in result.failures[0]

    def test_selftest_command_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "run_suites", partial(run_suites, metric=_FlippedMetric))
        code = cli.main(["selftest", "--suite", "cones"])
        out, err = capsys.readouterr()
        assert code == 1
        assert "FAIL" in out
        assert "cones:" in err

    def test_selftest_command_passes(self, capsys):
        code = cli.main(["selftest", "--quick", "--suite", "statistics"])
        out, _ = capsys.readouterr()
        assert code == 0
        assert "pass" in out


class TestHelpers:
    """Tests for the generators and oracles the suites use."""

    def test_tube_configuration_is_inside(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            assert in_tube(tube_configuration(rng, 3, 4))

    def test_theta_grid_oracle(self):
        assert theta_grid_oracle(ETUBE_INSIDE_SPACELIKE_PAIR)
        assert not theta_grid_oracle(ETUBE_OUTSIDE_TIMELIKE_PAIR)

    def test_bubble_sign(self):
        fields = [Statistics.FERMI, Statistics.BOSE, Statistics.FERMI]
        assert bubble_sign(fields, (3, 2, 1)) == -1
        assert bubble_sign(fields, (2, 1, 3)) == 1
