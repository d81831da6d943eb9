"""
Lorentz Group Tests
===================

Verification of the metric condition, boosts, complex rotations, the s = 2
scaling element and seeded restricted transforms.

Run with: pytest tests/test_lorentz.py -v
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holo_domains.base import DimensionMismatchError
from holo_domains.geometry import Configuration, Metric, differences, lightcone_coords, square
from holo_domains.lorentz import (
    DEFAULT_TOLERANCE,
    LorentzTransform,
    apply,
    apply_poincare,
    complex_rotation,
    compose,
    identity,
    inverse,
    plane_product,
    planes,
    random_restricted,
    real_boost,
    s2_scaling,
    verify_lorentz,
)
from tests.fixtures import SEEDS


class TestVerifyLorentz:
    """Tests for the metric condition check."""

    def setup_method(self):
        self.g = Metric(2)

    def test_identity_passes_tight_tolerance(self):
        assert verify_lorentz(identity(self.g), self.g, tol=1e-12)

    def test_scaling_matrix_fails(self):
        check = verify_lorentz(LorentzTransform.from_matrix([[1, 0], [0, 2]]), self.g)
        assert not check
        assert check.max_deviation == pytest.approx(3.0)

    def test_boost_passes(self):
        check = verify_lorentz(real_boost(self.g, 1, 0.5), self.g)
        assert check
        assert check.max_deviation < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            verify_lorentz(identity(Metric(3)), self.g)

    def test_non_square_matrix_rejected(self):
        with pytest.raises(DimensionMismatchError):
            LorentzTransform.from_matrix([[1, 0, 0], [0, 1, 0]])


class TestGenerators:
    """Tests for boosts, complex rotations and the s = 2 scaling."""

    def setup_method(self):
        self.g = Metric(2)

    # =========================================================================
    # REAL BOOSTS
    # =========================================================================

    def test_zero_rapidity_is_identity(self):
        assert np.allclose(real_boost(self.g, 1, 0.0).matrix, np.eye(2))

    def test_unit_rapidity_matrix(self):
        boost = real_boost(self.g, 1, 1.0)
        expected = [[np.cosh(1), np.sinh(1)], [np.sinh(1), np.cosh(1)]]
        assert np.allclose(boost.matrix, expected)
        assert verify_lorentz(boost, self.g)
        assert boost.restricted

    def test_rapidities_add(self):
        product = compose(real_boost(self.g, 1, 0.4), real_boost(self.g, 1, 0.7))
        assert np.allclose(product.matrix, real_boost(self.g, 1, 1.1).matrix, atol=1e-10)

    def test_boost_axis_checked(self):
        with pytest.raises(ValueError, match="axis"):
            real_boost(self.g, 2, 0.1)

    # =========================================================================
    # COMPLEX ROTATIONS
    # =========================================================================

    def test_zero_angle_is_identity(self):
        assert np.allclose(complex_rotation(self.g, (0, 1), 0).matrix, np.eye(2))

    def test_imaginary_rapidity_turns_time_into_imaginary_space(self):
        rotation = complex_rotation(self.g, (0, 1), 1j * np.pi / 2)
        image = rotation.matrix @ np.array([1, 0])
        assert np.allclose(image, [0, 1j])
        assert verify_lorentz(rotation, self.g)
        assert not rotation.real

    def test_complex_rotations_close(self):
        g = Metric(4)
        a = complex_rotation(g, (0, 2), 0.3 + 1.1j)
        b = complex_rotation(g, (1, 3), -0.8 + 0.2j)
        assert verify_lorentz(compose(a, b), g, tol=1e-10)

    def test_invalid_plane(self):
        with pytest.raises(ValueError, match="Plane"):
            complex_rotation(self.g, (1, 1), 0.5)

    # =========================================================================
    # s = 2 SCALING
    # =========================================================================

    def test_unit_scale_is_identity(self):
        assert np.allclose(s2_scaling(1).matrix, np.eye(2))

    def test_real_scale_is_boost(self):
        assert np.allclose(s2_scaling(np.exp(0.3)).matrix, real_boost(self.g, 1, 0.3).matrix)

    def test_scales_multiply(self):
        square_of_i = compose(s2_scaling(1j), s2_scaling(1j))
        assert np.allclose(square_of_i.matrix, s2_scaling(-1).matrix, atol=1e-12)

    def test_scaling_acts_on_lightcone_coordinates(self):
        lam = 0.6 + 0.8j
        c = Configuration.build([[0, 1], [0, 0]])
        (xi,) = differences(apply(s2_scaling(lam), c))
        u, v = lightcone_coords(xi)
        assert np.isclose(u, lam)
        assert np.isclose(v, -1 / lam)

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            s2_scaling(0)


class TestGroupOperations:
    """Tests for composition, inverses, plane products and the action."""

    def test_inverse_undoes_transform(self):
        g = Metric(3)
        t = plane_product(g, [0.2 + 0.5j, -0.4j, 1.0])
        assert np.allclose(compose(t, inverse(t, g)).matrix, np.eye(3), atol=1e-10)

    def test_planes_count(self):
        assert planes(4) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def test_plane_product_mapping_matches_sequence(self):
        g = Metric(3)
        a = plane_product(g, {(0, 1): 0.3j, (1, 2): 0.5})
        b = plane_product(g, [0.3j, 0, 0.5])
        assert np.allclose(a.matrix, b.matrix)

    def test_plane_product_wrong_length(self):
        with pytest.raises(ValueError, match="plane parameters"):
            plane_product(Metric(3), [0.1, 0.2])

    def test_plane_product_unknown_plane(self):
        with pytest.raises(ValueError, match="Invalid plane"):
            plane_product(Metric(3), {(0, 3): 0.1})

    def test_identity_action(self):
        c = Configuration.build([[0.5j, 1], [0, 2 - 1j]])
        assert apply(identity(Metric(2)), c) == c

    def test_boost_preserves_squares(self):
        g = Metric(2)
        c = Configuration.build([[0, 0], [1, 3], [4, -2]])
        moved = apply(real_boost(g, 1, 0.9), c)
        for before, after in zip(differences(c), differences(moved)):
            assert square(after, g).real == pytest.approx(square(before, g).real, abs=1e-10)

    def test_poincare_shift(self):
        c = Configuration.build([[0, 0], [1, 0]])
        moved = apply_poincare(identity(Metric(2)), [2, 3], c)
        assert moved == Configuration.build([[2, 3], [3, 3]])

    def test_action_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            apply(identity(Metric(3)), Configuration.build([[0, 0], [0, 1]]))


class TestRandomRestricted:
    """Tests for the seeded restricted transforms."""

    def test_same_seed_same_matrix(self):
        g = Metric(4)
        assert np.array_equal(random_restricted(g, 7).matrix, random_restricted(g, 7).matrix)

    def test_seed_1_s2_is_lorentz(self):
        g = Metric(2)
        assert verify_lorentz(random_restricted(g, 1), g)

    def test_seed_2_s4_orthochronous(self):
        t = random_restricted(Metric(4), 2)
        assert t.matrix[0, 0].real >= 1
        assert t.restricted

    def test_rapidity_bound_positive(self):
        with pytest.raises(ValueError, match="max_rapidity"):
            random_restricted(Metric(3), 0, max_rapidity=0)


class TestClosure:
    """Products of verified transforms stay in the group."""

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=2, max_value=4), SEEDS, SEEDS)
    def test_restricted_products_verify_at_double_tolerance(self, s, a, b):
        g = Metric(s)
        first = random_restricted(g, seed=a, max_rapidity=1.0)
        second = random_restricted(g, seed=b, max_rapidity=1.0)
        assert verify_lorentz(first, g)
        assert verify_lorentz(second, g)
        assert verify_lorentz(compose(first, second), g, tol=2 * DEFAULT_TOLERANCE)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=2, max_value=4), st.data())
    def test_complex_plane_products_verify_at_double_tolerance(self, s, data):
        g = Metric(s)
        count = len(planes(s))
        part = st.floats(min_value=-1.0, max_value=1.0)
        parameters = st.lists(st.builds(complex, part, part), min_size=count, max_size=count)
        first = plane_product(g, data.draw(parameters))
        second = plane_product(g, data.draw(parameters))
        assert verify_lorentz(first, g)
        assert verify_lorentz(second, g)
        assert verify_lorentz(compose(first, second), g, tol=2 * DEFAULT_TOLERANCE)
