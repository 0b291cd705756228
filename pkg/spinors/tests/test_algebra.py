import math

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings

from ..algebra import (
    EPSILON,
    IDENTITY2,
    SIGMA,
    FourVector,
    boost_exp,
    is_hermitian,
    is_unitary,
    lorentz_factor,
    minkowski_dot,
    pauli,
    pauli_product_identity_residual,
    random_unit_vector,
    require_unit,
    su2_exp,
)
from ..exceptions import DomainError
from ..liealg import anticommutator, commutator
from .strategies import angles, assert_close, rapidities, unit_vectors, vectors3


class PauliTests(SimpleTestCase):
    def test_sigma_zero_is_identity(self):
        np.testing.assert_array_equal(pauli(0), IDENTITY2)

    def test_sigma_y(self):
        np.testing.assert_array_equal(pauli(2), np.array([[0, -1j], [1j, 0]]))

    def test_out_of_range_index(self):
        for index in (-1, 4, 1.0, True):
            with self.subTest(index=index), self.assertRaises(DomainError):
                pauli(index)

    def test_returned_matrix_is_a_copy(self):
        m = pauli(1)
        m[0, 0] = 5
        self.assertEqual(SIGMA[1][0, 0], 0)

    def test_commutators_exact(self):
        x, y, z = SIGMA[1], SIGMA[2], SIGMA[3]
        np.testing.assert_array_equal(commutator(x, y), 2j * z)
        np.testing.assert_array_equal(commutator(y, z), 2j * x)
        np.testing.assert_array_equal(commutator(z, x), 2j * y)

    def test_anticommutators_exact(self):
        for i in range(1, 4):
            for j in range(1, 4):
                expected = 2 * IDENTITY2 if i == j else np.zeros((2, 2))
                np.testing.assert_array_equal(anticommutator(SIGMA[i], SIGMA[j]), expected)

    def test_epsilon_squares_to_minus_identity(self):
        np.testing.assert_array_equal(EPSILON @ EPSILON, -IDENTITY2)

    def test_constants_are_read_only(self):
        with self.assertRaises(ValueError):
            SIGMA[0, 0, 0] = 2


class Su2ExpTests(SimpleTestCase):
    @given(unit_vectors, angles)
    @settings(max_examples=200)
    def test_unitary_unit_determinant(self, axis, angle):
        u = su2_exp(axis, angle)
        self.assertTrue(is_unitary(u, tol=1e-12))
        self.assertAlmostEqual(abs(np.linalg.det(u) - 1.0), 0.0, delta=1e-12)

    def test_zero_angle_is_identity(self):
        np.testing.assert_array_equal(su2_exp([0, 0, 1], 0.0), IDENTITY2)

    def test_720_degrees(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            n = random_unit_vector(rng)
            assert_close(su2_exp(n, 2 * math.pi), -IDENTITY2, 1e-12)
            assert_close(su2_exp(n, 4 * math.pi), IDENTITY2, 1e-12)

    def test_about_z_is_diagonal(self):
        theta = 0.7
        assert_close(su2_exp([0, 0, 1], theta), np.diag([np.exp(0.5j * theta), np.exp(-0.5j * theta)]), 1e-15)

    def test_non_unit_axis(self):
        with self.assertRaises(DomainError):
            su2_exp([0, 0, 2], 1.0)
        with self.assertRaises(DomainError):
            su2_exp([0, 0, 0], 1.0)


class BoostExpTests(SimpleTestCase):
    @given(unit_vectors, rapidities)
    @settings(max_examples=200)
    def test_hermitian_positive_unit_determinant(self, direction, rapidity):
        boost = boost_exp(direction, rapidity)
        self.assertTrue(is_hermitian(boost, tol=1e-12))
        self.assertGreater(np.min(np.linalg.eigvalsh(boost)), 0.0)
        self.assertAlmostEqual(np.linalg.det(boost).real, 1.0, delta=1e-10)

    def test_along_z(self):
        rho = 0.9
        assert_close(boost_exp([0, 0, 1], rho), np.diag([np.exp(-rho / 2), np.exp(rho / 2)]), 1e-14)

    def test_opposite_rapidities_are_inverse(self):
        n = np.array([1.0, 2.0, 2.0]) / 3.0
        assert_close(boost_exp(n, 1.3) @ boost_exp(n, -1.3), IDENTITY2, 1e-12)


class PauliProductIdentityTests(SimpleTestCase):
    @given(vectors3, vectors3)
    def test_holds_for_all_vectors(self, a, b):
        self.assertLess(np.max(np.abs(pauli_product_identity_residual(a, b))), 1e-10)


class MinkowskiTests(SimpleTestCase):
    def test_signature(self):
        self.assertEqual(minkowski_dot(FourVector(1, 0, 0, 0), FourVector(1, 0, 0, 0)), -1.0)
        self.assertEqual(minkowski_dot([0, 1, 0, 0], [0, 1, 0, 0]), 1.0)

    def test_null_vector(self):
        self.assertEqual(FourVector(2, 2, 0, 0).norm(), 0.0)

    def test_four_vector_helpers(self):
        v = FourVector.from_array([1, 2, 3, 4])
        self.assertEqual(tuple(v), (1.0, 2.0, 3.0, 4.0))
        np.testing.assert_array_equal(v.spatial, [2.0, 3.0, 4.0])
        np.testing.assert_array_equal(v.as_array(), [1.0, 2.0, 3.0, 4.0])

    def test_lorentz_factor(self):
        self.assertAlmostEqual(lorentz_factor([0.8, 0, 0]), 5 / 3, places=14)
        with self.assertRaises(DomainError):
            lorentz_factor([0.6, 0.8, 0.0])

    def test_require_unit_shape(self):
        with self.assertRaises(DomainError):
            require_unit([1, 0])
