"""
Geometry Tests
==============

Metric products, light-cone tests, configurations and difference coordinates.

Run with: pytest tests/test_geometry.py -v
"""

import numpy as np
import pytest

from holo_domains.base import DimensionMismatchError, Statistics, VerdictState
from holo_domains.geometry import (
    ComplexVector,
    Configuration,
    Metric,
    RealVector,
    difference_array,
    differences,
    forward_cone_margin,
    from_lightcone,
    in_open_forward_cone,
    is_spacelike,
    lightcone_coords,
    minkowski_product,
    spectral_condition,
    square,
    translate,
)


class TestMinkowskiProduct:
    """Tests for the bilinear metric product."""

    def setup_method(self):
        self.g2 = Metric(2)
        self.g4 = Metric(4)

    # =========================================================================
    # PRODUCTS
    # =========================================================================

    def test_time_unit_vector(self):
        assert minkowski_product(RealVector([1, 0]), RealVector([1, 0]), self.g2) == 1

    def test_space_unit_vector(self):
        assert minkowski_product(RealVector([0, 1]), RealVector([0, 1]), self.g2) == -1

    def test_product_is_bilinear_not_hermitian(self):
        """(i, 0).(i, 0) = i^2 = -1."""
        x = ComplexVector([1j, 0])
        assert minkowski_product(x, x, self.g2) == -1

    def test_dimension_mismatch_raises(self):
        with pytest.raises(DimensionMismatchError):
            minkowski_product(RealVector([1, 0]), RealVector([1, 0, 0]), self.g2)

    def test_metric_dimension_mismatch_raises(self):
        with pytest.raises(DimensionMismatchError):
            square(RealVector([1, 0, 0]), self.g2)

    # =========================================================================
    # SQUARES
    # =========================================================================

    def test_null_vector_square(self):
        assert square(RealVector([1, 1]), self.g2) == 0

    def test_spacelike_square(self):
        assert square(RealVector([0, 2]), self.g2) == -4

    def test_timelike_square_s4(self):
        assert square(RealVector([3, 0, 0, 0]), self.g4) == 9

    def test_metric_rejects_small_dimension(self):
        with pytest.raises(ValueError, match=">= 2"):
            Metric(1)

    def test_metric_signature(self):
        assert self.g4.signature.tolist() == [1.0, -1.0, -1.0, -1.0]


class TestLightCone:
    """Tests for the three-valued cone predicates."""

    def setup_method(self):
        self.g = Metric(2)

    def test_future_timelike_inside(self):
        assert in_open_forward_cone(RealVector([1, 0]), self.g).state is VerdictState.INSIDE

    def test_spacelike_outside(self):
        assert in_open_forward_cone(RealVector([0, 1]), self.g).state is VerdictState.OUTSIDE

    def test_null_vector_boundary(self):
        assert in_open_forward_cone(RealVector([1, 1]), self.g).state is VerdictState.BOUNDARY

    def test_past_timelike_outside(self):
        verdict = in_open_forward_cone(RealVector([-2, 0]), self.g)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.margin == -2

    def test_margin_is_min_of_time_and_square(self):
        assert forward_cone_margin(RealVector([2, 1]), self.g) == 2.0
        assert forward_cone_margin(RealVector([0.5, 0]), self.g) == 0.25

    def test_epsilon_must_be_positive(self):
        with pytest.raises(ValueError, match="epsilon"):
            in_open_forward_cone(RealVector([1, 0]), self.g, epsilon=0)

    def test_spacelike_predicate(self):
        assert is_spacelike(RealVector([0, 1]), self.g).state is VerdictState.INSIDE
        assert is_spacelike(RealVector([1, 0]), self.g).state is VerdictState.OUTSIDE
        assert is_spacelike(RealVector([1, 1]), self.g).state is VerdictState.BOUNDARY

    def test_spectral_condition_accepts_vacuum(self):
        verdict = spectral_condition(RealVector([0, 0]), self.g)
        assert verdict.state is VerdictState.INSIDE
        assert verdict.details["vacuum"] is True

    def test_spectral_condition_rejects_spacelike_momentum(self):
        verdict = spectral_condition(RealVector([0, 1]), self.g)
        assert verdict.state is VerdictState.OUTSIDE
        assert verdict.details["vacuum"] is False


class TestConfiguration:
    """Tests for configurations and difference coordinates."""

    def test_build_defaults_to_bose(self):
        c = Configuration.build([[0, 0], [0, 1]])
        assert c.fields == (Statistics.BOSE, Statistics.BOSE)
        assert c.m == 2
        assert c.n == 4

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionMismatchError):
            Configuration.build([[0, 0], [0, 1, 0]])

    def test_field_count_must_match(self):
        with pytest.raises(ValueError, match="field flags"):
            Configuration.build([[0, 0], [0, 1]], ["bose"])

    def test_unknown_statistics_rejected(self):
        with pytest.raises(ValueError, match="bose"):
            Configuration.build([[0, 0], [0, 1]], ["bose", "anyon"])

    def test_differences_by_subtraction(self):
        xi = differences(Configuration.build([[0, 0], [0, 1]]))
        assert xi == (ComplexVector([0, -1]),)

    def test_differences_imaginary_time(self):
        xi = differences(Configuration.build([[-1j, 0], [0, 0]]))
        assert xi == (ComplexVector([-1j, 0]),)

    def test_differences_of_three_points(self):
        xi = differences(Configuration.build([[0, 0], [0, 2], [0, 1]]))
        assert xi == (ComplexVector([0, -2]), ComplexVector([0, 1]))

    def test_difference_array_matches_vectors(self):
        c = Configuration.build([[0, 0], [0, 2], [0, 1]])
        expected = np.array([[0, -2], [0, 1]], dtype=complex)
        assert np.array_equal(difference_array(c), expected)

    def test_single_point_has_no_differences(self):
        with pytest.raises(ValueError, match="m >= 2"):
            differences(Configuration.build([[0, 0]]))

    def test_equality_compares_values(self):
        a = Configuration.build([[0, 0], [0, 1]])
        b = Configuration.build([[0.0, 0.0], [0.0, 1.0]])
        assert a == b
        assert hash(a) == hash(b)

    def test_translation_leaves_differences(self):
        c = Configuration.build([[0, 0], [0, 2], [0, 1]])
        moved = translate(c, [3, -1])
        assert differences(moved) == differences(c)

    def test_is_real(self):
        assert Configuration.build([[0, 0], [0, 1]]).is_real()
        assert not Configuration.build([[-1j, 0], [0, 0]]).is_real()


class TestLightconeCoordinates:
    """Tests for (u, v) = (x0 + x1, x0 - x1)."""

    def test_spacelike_unit(self):
        assert lightcone_coords(ComplexVector([0, 1])) == (1, -1)

    def test_timelike_unit(self):
        assert lightcone_coords(ComplexVector([1, 0])) == (1, 1)

    def test_imaginary_time(self):
        assert lightcone_coords(ComplexVector([-1j, 0])) == (-1j, -1j)

    def test_product_is_square(self):
        x = ComplexVector([0.3 + 1j, -2 + 0.5j])
        u, v = lightcone_coords(x)
        assert np.isclose(u * v, square(x, Metric(2)))

    def test_inverse(self):
        x = ComplexVector([0.3 + 1j, -2 + 0.5j])
        assert np.allclose(from_lightcone(*lightcone_coords(x)).components, x.components)

    def test_only_s2(self):
        with pytest.raises(ValueError, match="s = 2"):
            lightcone_coords(ComplexVector([1, 0, 0]))
