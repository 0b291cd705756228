import math

import numpy as np
from django.test import SimpleTestCase

from .. import maxwell
from ..exceptions import DomainError
from ..lorentz import Variance
from .strategies import assert_close

DIMS = (5, 5, 5, 5)


def _vacuum(fields):
    return maxwell.SourceGrid.zeros_like(fields)


class SpinorLayoutTests(SimpleTestCase):
    def test_field_spinor(self):
        f = maxwell.field_spinor([1.0, 2.0, 3.0], [0.0, 0.0, 1.0])
        np.testing.assert_array_equal(f.m, [[3 - 1j, 1 - 2j], [1 + 2j, -3 + 1j]])
        self.assertEqual((f.index1, f.index2), (Variance.LOWER_DOTTED, Variance.UPPER_DOTTED))
        self.assertEqual(np.trace(f.m), 0)

    def test_current_spinor(self):
        j = maxwell.current_spinor(1.0, [2.0, 3.0, 4.0])
        np.testing.assert_array_equal(j.m, [[5, 2 - 3j], [2 + 3j, -3]])

    def test_derivative_symbol_sign(self):
        fields = maxwell.FieldGrid.from_functions(
            lambda t, x, y, z: (0.0, 0.0, x), lambda t, x, y, z: (0.0, 0.0, 0.0), DIMS, 0.1, 0.1
        )
        df = maxwell.derivative_spinor_apply(fields, (2, 2, 2, 2)).m
        self.assertAlmostEqual(df[0, 1].real, -1.0, delta=1e-12)
        self.assertAlmostEqual(df[1, 0].real, 1.0, delta=1e-12)
        self.assertAlmostEqual(abs(df[0, 0]) + abs(df[1, 1]), 0.0, delta=1e-12)

    def test_single_node_matches_the_whole_grid(self):
        fields = maxwell.corrupt(maxwell.plane_wave())
        whole = maxwell.spinor_residual_field(fields, _vacuum(fields))
        node = maxwell.derivative_spinor_apply(fields, (1, 2, 3, 1)).m
        assert_close(node, whole[0, 1, 2, 0], 1e-12)


class ResidualTests(SimpleTestCase):
    def test_plane_wave_converges_at_second_order(self):
        residuals = []
        for h in (0.1, 0.05, 0.025):
            fields = maxwell.plane_wave(h=h)
            residuals.append(maxwell.maxwell_residual(fields, _vacuum(fields)))
        for coarse, fine in zip(residuals, residuals[1:]):
            self.assertTrue(3.2 <= coarse / fine <= 4.8, residuals)

    def test_zero_fields(self):
        fields = maxwell.FieldGrid(np.zeros(DIMS + (3,)), np.zeros(DIMS + (3,)), 0.1, 0.1)
        self.assertEqual(maxwell.maxwell_residual(fields, _vacuum(fields)), 0.0)

    def test_static_uniform_field(self):
        fields = maxwell.static_uniform((0.3, -1.0, 2.0))
        self.assertEqual(maxwell.maxwell_residual(fields, _vacuum(fields)), 0.0)
        classical = maxwell.classical_maxwell_residual(fields, _vacuum(fields))
        self.assertEqual(classical.as_dict(), {"div_e": 0.0, "div_b": 0.0, "faraday": 0.0, "ampere": 0.0})

    def test_coulomb_field_is_nearly_source_free(self):
        fields = maxwell.coulomb(h=0.05)
        self.assertLess(maxwell.maxwell_residual(fields, _vacuum(fields)), 1e-2)

    def test_corrupted_fields_fail(self):
        fields = maxwell.corrupt(maxwell.plane_wave())
        self.assertGreater(maxwell.maxwell_residual(fields, _vacuum(fields)), 0.1)


class EquivalenceTests(SimpleTestCase):
    def test_gap_on_corrupted_fields(self):
        fields = maxwell.corrupt(maxwell.plane_wave(nodes=7), amplitude=1.3)
        sources = maxwell.SourceGrid.from_functions(
            lambda t, x, y, z: np.sin(x * y + t),
            lambda t, x, y, z: (z, np.cos(t), x * y),
            fields.dims,
            fields.h_t,
            fields.h,
            fields.origin,
        )
        self.assertLessEqual(maxwell.equivalence_gap(fields, sources), 1e-13)

    def test_recombination(self):
        np.testing.assert_array_equal(maxwell.spinor_from_classical(1.0, 0.0, np.zeros(3), np.zeros(3)), np.eye(2))
        out = maxwell.spinor_from_classical(0.0, 2.0, [0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
        np.testing.assert_array_equal(out, [[-2j + 1j, 1], [1, -2j - 1j]])


class ContinuityTests(SimpleTestCase):
    def test_conserved_linear_current(self):
        sources = maxwell.SourceGrid.from_functions(
            lambda t, x, y, z: 2 * t, lambda t, x, y, z: (-2 * x, 0.0, 0.0), DIMS, 0.1, 0.1
        )
        self.assertLess(maxwell.continuity_residual(sources), 1e-12)

    def test_growing_charge(self):
        sources = maxwell.SourceGrid.from_functions(
            lambda t, x, y, z: t, lambda t, x, y, z: (0.0, 0.0, 0.0), DIMS, 0.1, 0.1
        )
        assert_close(maxwell.continuity_field(sources), np.ones((3, 3, 3, 3)), 1e-12)

    def test_central_derivatives_are_ordered_t_x_y_z(self):
        sources = maxwell.SourceGrid.from_functions(
            lambda t, x, y, z: t + 2 * x - 3 * y + 4 * z, lambda t, x, y, z: (0.0, 0.0, 0.0), DIMS, 0.05, 0.1
        )
        d = maxwell.central_derivatives(sources.rho, sources.h_t, sources.h)
        self.assertEqual(d.shape, (4, 3, 3, 3, 3))
        for lam, slope in enumerate((1.0, 2.0, -3.0, 4.0)):
            assert_close(d[lam], np.full((3, 3, 3, 3), slope), 1e-12)


class DalembertianTests(SimpleTestCase):
    def test_coefficients(self):
        np.testing.assert_array_equal(maxwell.dalembertian_coefficients(), np.diag([-1.0, 1.0, 1.0, 1.0]))

    def test_quadratics(self):
        fields = maxwell.static_uniform(nodes=6)
        t, x, y, z = fields.coordinates()
        assert_close(maxwell.dalembertian(x * x, 0.1, 0.1), np.full((2, 2, 2, 2), 2.0), 1e-9)
        assert_close(maxwell.dalembertian(t * t, 0.1, 0.1), np.full((2, 2, 2, 2), -2.0), 1e-9)

    def test_matches_the_wave_operator(self):
        t, x, y, z = maxwell.plane_wave(nodes=7).coordinates()
        values = np.sin(x + 0.5 * y) * np.cos(t - z)
        assert_close(maxwell.dalembertian(values, 0.05, 0.1), maxwell.wave_operator(values, 0.05, 0.1), 1e-12)


class GridValidationTests(SimpleTestCase):
    def test_too_few_nodes(self):
        with self.assertRaises(DomainError):
            maxwell.FieldGrid(np.zeros((4, 5, 5, 5, 3)), np.zeros((4, 5, 5, 5, 3)), 0.1, 0.1)
        with self.assertRaises(DomainError):
            maxwell.dalembertian(np.zeros((5, 5, 5, 4)), 0.1, 0.1)

    def test_bad_spacing_and_shapes(self):
        with self.assertRaises(DomainError):
            maxwell.SourceGrid.zeros(DIMS, 0.0, 0.1)
        with self.assertRaises(DomainError):
            maxwell.FieldGrid(np.zeros(DIMS + (3,)), np.zeros(DIMS + (2,)), 0.1, 0.1)

    def test_mismatched_grids(self):
        fields = maxwell.static_uniform()
        with self.assertRaises(DomainError):
            maxwell.maxwell_residual(fields, maxwell.SourceGrid.zeros((6, 6, 6, 6), 0.1, 0.1))
        with self.assertRaises(DomainError):
            maxwell.equivalence_gap(fields, maxwell.SourceGrid.zeros(DIMS, 0.2, 0.1))

    def test_boundary_node(self):
        fields = maxwell.static_uniform()
        for node in ((0, 2, 2, 2), (2, 2, 2, 4), (2, 2, 2)):
            with self.subTest(node=node), self.assertRaises(DomainError):
                maxwell.derivative_spinor_apply(fields, node)

    def test_grids_are_read_only(self):
        fields = maxwell.static_uniform()
        with self.assertRaises(ValueError):
            fields.e[0, 0, 0, 0, 0] = 1.0
        self.assertTrue(math.isclose(fields.h_t, 0.1))
