import numpy as np
from django.test import SimpleTestCase
from hypothesis import given

from ..algebra import minkowski_dot
from ..dirac import boost, from_rest
from ..exceptions import DomainError
from ..lorentz import random_sl2c
from ..spinor import Chirality, Spinor, flagpole, random_spinor, transform
from ..weyl import ParticleKinematics, from_momentum, helicity, parity_demo, pauli_lubanski, weyl_residual
from .strategies import assert_close, spinors, vectors3


class WeylEquationTests(SimpleTestCase):
    def test_residual_vanishes_before_and_after_transforms(self):
        rng = np.random.default_rng(22)
        for _ in range(1000):
            element = random_sl2c(rng)
            for chirality in Chirality:
                s = random_spinor(rng, chirality)
                self.assertLess(np.linalg.norm(weyl_residual(s)), 1e-10)
                self.assertLess(np.linalg.norm(weyl_residual(transform(s, element))), 1e-10)

    @given(spinors())
    def test_helicity_follows_chirality(self, s):
        self.assertEqual(helicity(s), 1)
        self.assertEqual(helicity(Spinor(s.a, s.b, Chirality.LEFT)), -1)

    def test_helicity_needs_momentum(self):
        with self.assertRaises(DomainError):
            helicity(Spinor(0, 0))


class FromMomentumTests(SimpleTestCase):
    @given(vectors3.filter(lambda p: np.linalg.norm(p) > 0.1))
    def test_flagpole_and_helicity(self, p):
        energy = np.linalg.norm(p)
        for chirality, sign in ((Chirality.RIGHT, 1), (Chirality.LEFT, -1)):
            s = from_momentum(p, chirality)
            self.assertIs(s.chirality, chirality)
            assert_close(flagpole(s).as_array(), [energy, *p], 1e-10)
            self.assertEqual(helicity(s), sign)

    def test_zero_momentum(self):
        with self.assertRaises(DomainError):
            from_momentum([0, 0, 0])


class ParityTests(SimpleTestCase):
    def test_unit_spinor_residual_has_norm_two(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            v = random_spinor(rng).vector
            report = parity_demo(Spinor.from_vector(v / np.linalg.norm(v)))
            self.assertAlmostEqual(report.residual_norm, 2.0, delta=1e-12)
            self.assertTrue(report.violated)
            self.assertLess(report.dual_residual_norm, 1e-10)

    @given(spinors())
    def test_violation_exceeds_a_tenth_of_the_norm(self, s):
        report = parity_demo(s)
        self.assertGreater(report.residual_norm, 0.1 * report.spinor_norm)

    def test_left_spinors_rejected(self):
        with self.assertRaises(DomainError):
            parity_demo(Spinor(1, 0, Chirality.LEFT))


class PauliLubanskiTests(SimpleTestCase):
    def test_massless_spin_along_momentum_is_null(self):
        w = pauli_lubanski(ParticleKinematics(1.0, (0.0, 0.0, 1.0), (0.0, 0.0, 0.5)))
        assert_close(w.as_array(), [0.5, 0, 0, 0.5], 1e-15)
        self.assertEqual(w.norm(), 0.0)

    @given(vectors3, vectors3)
    def test_orthogonal_to_momentum(self, p, s):
        energy = float(np.sqrt(p @ p + 1.0))
        w = pauli_lubanski(ParticleKinematics(energy, tuple(p), tuple(s)))
        self.assertAlmostEqual(minkowski_dot(w, [energy, *p]), 0.0, delta=1e-9)

    def test_is_massless(self):
        self.assertTrue(ParticleKinematics(5.0, (3.0, 4.0, 0.0), (0, 0, 0)).is_massless)
        self.assertFalse(ParticleKinematics(5.0, (3.0, 0.0, 0.0), (0, 0, 0)).is_massless)


class HelicityEmergenceTests(SimpleTestCase):
    def test_fast_electron_is_mostly_left_handed(self):
        psi = boost(from_rest([0, 0, 1], 1), [0.0, 0.0, -1e3], 1.0)
        phi, chi = psi.phi_R, psi.chi_L
        self.assertGreater(np.linalg.norm(chi.vector), 1e3 * np.linalg.norm(phi.vector))
        self.assertEqual(helicity(chi), -1)
        assert_close(flagpole(chi).spatial / np.linalg.norm(flagpole(chi).spatial), [0, 0, -1], 1e-12)
