"""
Seeded property suites behind `manage.py checksuite`.

Every suite draws its cases from numpy's default_rng(seed) so reports are
reproducible, and records the worst residual of each named check.
"""
import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import algebra, dirac, liealg, lorentz, maxwell, rotor, spinor, weyl
from .algebra import IDENTITY2, SIGMA, minkowski_dot, random_unit_vector
from .conf import get_setting
from .exceptions import DomainError
from .lorentz import Rank2Spinor, SL2CTransform, Variance
from .spinor import Chirality, Spinor

logger = logging.getLogger(__name__)

# ?----end imports----

# (Psi, U, 2W/(mS)) for reference bispinors at rest and in the massless limit
REFERENCE_STATES = (
    ((1, 0, 1, 0), (1, 0, 0, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 1), (1, 0, 0, 0), (0, 0, 0, -1)),
    ((1, 1, 1, 1), (1, 0, 0, 0), (0, 1, 0, 0)),
    ((1, -1, 1, -1), (1, 0, 0, 0), (0, -1, 0, 0)),
    ((1, 0, 0, 0), (1, 0, 0, 1), (1, 0, 0, 1)),
    ((0, 1, 0, 0), (1, 0, 0, -1), (1, 0, 0, -1)),
    ((0, 0, 1, 0), (1, 0, 0, -1), (-1, 0, 0, 1)),
    ((0, 0, 0, 1), (1, 0, 0, 1), (-1, 0, 0, -1)),
)


# parity keeps the time component of a vector and flips the spatial ones
PARITY_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


def reference_state(components):
    """Normalize a REFERENCE_STATES row into a DiracSpinor."""
    comps = np.asarray(components, dtype=complex)
    return dirac.DiracSpinor(comps / np.linalg.norm(comps))


def levi_civita(i, j, k):
    return (i - j) * (j - k) * (k - i) // 2


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_residual: float
    threshold: float

    @property
    def passed(self):
        return self.max_residual <= self.threshold


@dataclass(frozen=True)
class SuiteResult:
    name: str
    seed: int
    cases: int
    checks: tuple

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def max_residual(self):
        return max((check.max_residual for check in self.checks), default=0.0)

    @property
    def failures(self):
        return [check.name for check in self.checks if not check.passed]

    def as_dict(self):
        return {
            "suite": self.name,
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "checks": [
                {"name": c.name, "max_residual": c.max_residual, "threshold": c.threshold, "passed": c.passed}
                for c in self.checks
            ],
        }


class _Checks:
    """Worst value seen per check name; non-finite values count as infinitely bad."""

    def __init__(self):
        self._worst = {}
        self._limits = {}

    def record(self, name, value, threshold):
        value = float(np.max(np.abs(np.asarray(value, dtype=complex))))
        if not math.isfinite(value):
            value = math.inf
        self._limits[name] = threshold
        self._worst[name] = max(self._worst.get(name, 0.0), value)

    def results(self):
        return tuple(CheckResult(name, self._worst[name], self._limits[name]) for name in self._worst)


def run_algebra(rng, cases):
    checks = _Checks()
    for _ in range(cases):
        n = random_unit_vector(rng)
        u = algebra.su2_exp(n, rng.uniform(-4 * math.pi, 4 * math.pi))
        checks.record("su2_unitarity", u @ u.conj().T - IDENTITY2, 1e-12)
        checks.record("su2_determinant", np.linalg.det(u) - 1.0, 1e-12)
        checks.record("su2_two_pi", algebra.su2_exp(n, 2 * math.pi) + IDENTITY2, 1e-12)
        checks.record("su2_four_pi", algebra.su2_exp(n, 4 * math.pi) - IDENTITY2, 1e-12)
        boost = algebra.boost_exp(n, rng.uniform(-3.0, 3.0))
        checks.record("boost_hermitian", boost - boost.conj().T, 1e-12)
        checks.record("boost_determinant", np.linalg.det(boost) - 1.0, 1e-10)
        checks.record("boost_positive", max(0.0, -float(np.min(np.linalg.eigvalsh(boost)))), 0.0)
        a, b = rng.normal(size=3), rng.normal(size=3)
        checks.record("pauli_product_identity", algebra.pauli_product_identity_residual(a, b), 1e-10)
    for i, j in itertools.product(range(3), repeat=2):
        expected = sum(2j * levi_civita(i, j, k) * SIGMA[k + 1] for k in range(3))
        checks.record("pauli_commutators", liealg.commutator(SIGMA[i + 1], SIGMA[j + 1]) - expected, 0.0)
        anti = liealg.anticommutator(SIGMA[i + 1], SIGMA[j + 1]) - 2 * (i == j) * IDENTITY2
        checks.record("pauli_anticommutators", anti, 0.0)
    return checks


def _random_params(rng):
    return spinor.FlagParams(
        r=rng.uniform(0.1, 5.0),
        theta=rng.uniform(0.01, math.pi - 0.01),
        phi=rng.uniform(-math.pi + 0.01, math.pi),
        alpha=rng.uniform(-math.pi / 2 + 0.01, math.pi / 2 - 0.01),
    )


def run_spinor(rng, cases):
    checks = _Checks()
    for _ in range(cases):
        s = spinor.random_spinor(rng)
        left = Spinor(s.a, s.b, Chirality.LEFT)
        transform = lorentz.random_sl2c(rng)
        induced = lorentz.induced_lorentz(transform)
        fp = spinor.flagpole(s)
        checks.record("null_flagpole", fp.norm(), 1e-10)
        checks.record(
            "right_covariance",
            spinor.flagpole(spinor.transform(s, transform)).as_array() - induced @ fp.as_array(),
            1e-9,
        )
        checks.record(
            "left_covariance",
            spinor.flagpole(spinor.transform(left, transform)).as_array() - induced @ spinor.flagpole(left).as_array(),
            1e-9,
        )
        n, rho = random_unit_vector(rng), rng.uniform(-2.0, 2.0)
        moved = spinor.sigma_components(spinor.transform(left, SL2CTransform.boost(n, rho)))
        inverse = lorentz.induced_lorentz(SL2CTransform.boost(n, -rho))
        checks.record("left_inverse_boost", moved.as_array() - inverse @ spinor.sigma_components(left).as_array(), 1e-9)

        w = spinor.random_spinor(rng)
        inner = spinor.epsilon_inner(s, w)
        moved_inner = spinor.epsilon_inner(spinor.transform(s, transform), spinor.transform(w, transform))
        checks.record("epsilon_invariance", moved_inner - inner, 1e-9)
        checks.record("epsilon_antisymmetry", inner + spinor.epsilon_inner(w, s), 0.0)
        checks.record(
            "epsilon_minkowski",
            abs(inner) ** 2 + 0.5 * minkowski_dot(fp, spinor.flagpole(w)),
            1e-9,
        )
        checks.record("dual_twice", spinor.dual(spinor.dual(s)).vector + s.vector, 0.0)
        checks.record("reflect_y", spinor.flagpole(spinor.conjugate_reflect(s)).y + fp.y, 1e-12)

        params = _random_params(rng)
        back = spinor.to_params(spinor.from_params(params))
        checks.record(
            "params_round_trip",
            [back.r - params.r, back.theta - params.theta, back.phi - params.phi, back.alpha - params.alpha, back.sign - 1],
            1e-9,
        )
        again = spinor.from_params(spinor.to_params(s))
        checks.record("spinor_round_trip", again.vector - s.vector, 1e-12)
    return checks


def run_homomorphism(rng, cases):
    checks = _Checks()
    for _ in range(cases):
        n1, n2 = random_unit_vector(rng), random_unit_vector(rng)
        theta1, theta2 = rng.uniform(-2 * math.pi, 2 * math.pi, size=2)
        u1, u2 = algebra.su2_exp(n1, theta1), algebra.su2_exp(n2, theta2)
        r1, r2 = rotor.so3_from_su2(u1), rotor.so3_from_su2(u2)
        checks.record("homomorphism", rotor.so3_from_su2(u1 @ u2) - r1 @ r2, 1e-10)
        checks.record("two_to_one", rotor.so3_from_su2(-u1) - r1, 1e-10)
        checks.record("axis_angle", r1 - rotor.so3_from_axis_angle(n1, theta1), 1e-10)
        checks.record("orthogonal", r1 @ r1.T - np.eye(3), 1e-10)
        checks.record("proper", np.linalg.det(r1) - 1.0, 1e-10)

        angle = rng.uniform(0.1, math.pi - 0.1)
        doubled = rotor.rotation_angle(rotor.so3_from_su2(algebra.su2_exp(n1, angle)))
        checks.record("angle_doubling", doubled - angle, 1e-10)

        s = rotor.eigenspinor(n2)
        checks.record("eigenspinor_eigen", rotor.spin_matrix(n2) @ s.vector - s.vector, 1e-10)
        checks.record("eigenspinor_direction", spinor.flagpole(s).spatial - n2, 1e-10)
        checks.record("eigenspinor_orthogonal", np.vdot(s.vector, rotor.eigenspinor(-n2).vector), 1e-10)
    return checks


def run_lorentz(rng, cases):
    checks = _Checks()
    eps = algebra.EPSILON
    for _ in range(cases):
        transform = lorentz.random_sl2c(rng)
        m = transform.m
        dagger_inv = np.linalg.inv(m.conj().T)
        checks.record("metric_preserved", m.T @ eps @ m - eps, 1e-10)
        checks.record("dagger_inverse", transform.dagger_inverse() - dagger_inv, 1e-10)
        checks.record("dotted_law", lorentz.dotted_law(transform) - dagger_inv, 1e-10)
        induced = lorentz.induced_lorentz(transform)
        checks.record("double_cover", induced - lorentz.induced_lorentz(-transform), 1e-12)
        other = lorentz.random_sl2c(rng)
        checks.record(
            "composition",
            lorentz.induced_lorentz(transform @ other) - induced @ lorentz.induced_lorentz(other),
            1e-9,
        )
        v = rng.normal(size=4)
        herm = lorentz.herm_from_fourvec(v)
        checks.record("herm_round_trip", lorentz.fourvec_from_herm(herm).as_array() - v, 1e-12)
        moved = lorentz.act(transform, herm)
        checks.record("det_preserved", (moved.det - herm.det) / max(1.0, abs(herm.det)), 1e-9)

        u, w = spinor.random_spinor(rng).vector, spinor.random_spinor(rng).vector
        for first, second in itertools.product(Variance, repeat=2):
            outer = Rank2Spinor(
                np.outer(lorentz.rank1_components(first, u), lorentz.rank1_components(second, w)), first, second
            )
            expected = np.outer(
                lorentz.rank1_components(first, m @ u), lorentz.rank1_components(second, m @ w)
            )
            checks.record("rank2_table", lorentz.transform_rank2(outer, transform).m - expected, 1e-9)

        x = Rank2Spinor(lorentz.herm_from_fourvec(v).x, Variance.UPPER_UNDOTTED, Variance.UPPER_DOTTED)
        other_v = rng.normal(size=4)
        y = Rank2Spinor(lorentz.herm_from_fourvec(other_v).x, Variance.UPPER_UNDOTTED, Variance.UPPER_DOTTED)
        y_low = lorentz.raise_lower(lorentz.raise_lower(y, "index1", Variance.LOWER_UNDOTTED), "index2", Variance.LOWER_DOTTED)
        contracted = lorentz.contract(x, y_low)
        checks.record("contraction_metric", contracted + 2 * minkowski_dot(v, other_v), 1e-10)
        moved_contraction = lorentz.contract(lorentz.transform_rank2(x, transform), lorentz.transform_rank2(y_low, transform))
        checks.record("contraction_invariance", (moved_contraction - contracted) / max(1.0, abs(contracted)), 1e-9)
        lowered_then_moved = lorentz.transform_rank2(lorentz.raise_lower(x, "index1", Variance.LOWER_UNDOTTED), transform)
        moved_then_lowered = lorentz.raise_lower(lorentz.transform_rank2(x, transform), "index1", Variance.LOWER_UNDOTTED)
        checks.record("lowering_covariance", lowered_then_moved.m - moved_then_lowered.m, 1e-9)
    return checks


def run_weyl(rng, cases):
    checks = _Checks()
    for _ in range(cases):
        transform = lorentz.random_sl2c(rng)
        for chirality in Chirality:
            s = spinor.random_spinor(rng, chirality)
            moved = spinor.transform(s, transform)
            checks.record(f"{chirality.value}_residual", weyl.weyl_residual(s), 1e-10)
            checks.record(f"{chirality.value}_residual_transformed", weyl.weyl_residual(moved), 1e-10)
            checks.record(f"{chirality.value}_helicity", weyl.helicity(s) - chirality.sign, 0.0)
            checks.record(f"{chirality.value}_helicity_transformed", weyl.helicity(moved) - chirality.sign, 0.0)

        s = spinor.random_spinor(rng)
        unit = Spinor.from_vector(s.vector / np.linalg.norm(s.vector))
        report = weyl.parity_demo(unit)
        checks.record("parity_violation_deficit", max(0.0, 0.1 * report.spinor_norm - report.residual_norm), 0.0)
        checks.record("dual_opposite_equation", report.dual_residual_norm, 1e-10)

        fp = spinor.flagpole(s)
        kinematics = weyl.ParticleKinematics(fp.t, tuple(fp.spatial), tuple(fp.spatial / (2 * fp.t)))
        checks.record("massless_alignment", weyl.pauli_lubanski(kinematics).norm(), 1e-10)
    return checks


def run_dirac(rng, cases):
    checks = _Checks()
    for components, velocity, spin in REFERENCE_STATES:
        psi = reference_state(components)
        checks.record("reference_velocity", dirac.four_velocity(psi).as_array() - np.array(velocity), 1e-12)
        checks.record("reference_spin", 2 * dirac.four_spin(psi, 1.0, 1.0).as_array() - np.array(spin), 1e-12)
    for basis in dirac.Basis:
        checks.record(f"clifford_{basis.value}", liealg.clifford_residual(dirac.gammas(basis)), 0.0)

    for _ in range(cases):
        n = random_unit_vector(rng)
        p = rng.normal(size=3) * 2.0
        m = rng.uniform(0.5, 2.0)
        energy = math.sqrt(float(p @ p) + m * m)
        psi = dirac.boost(dirac.from_rest(n, 1), p, m)
        checks.record("dirac_residual", dirac.dirac_residual(psi, energy, p, m), 1e-9)
        anti = dirac.boost(dirac.from_rest(n, -1), p, m)
        checks.record("dirac_residual_branch", dirac.dirac_residual(anti, energy, p, m, branch=-1), 1e-9)
        checks.record("hamiltonian", dirac.hamiltonian_residual(psi, p, m), 1e-9)

        up = dirac.boost(dirac.from_rest([0.0, 0.0, 1.0], 1), p, m)
        closed = np.array([energy + m + p[2], p[0] + 1j * p[1], energy + m - p[2], -p[0] - 1j * p[1]])
        checks.record("closed_form", up.components - closed / math.sqrt(4 * m * (energy + m)), 1e-12)

        u = dirac.four_velocity(psi)
        checks.record("four_velocity", u.as_array() - np.array([energy, *p]) / m, 1e-9)
        checks.record("velocity_spin_orthogonal", minkowski_dot(u, dirac.four_spin(psi, m, 1.0)), 1e-9)
        checks.record("rest_frame_spin", dirac.rest_frame_spin(psi) - n, 1e-9)

        transform = lorentz.random_sl2c(rng)
        scalar = dirac.bilinears(psi).scalar
        checks.record("scalar_invariance", dirac.bilinears(dirac.transform_dirac(psi, transform)).scalar - scalar, 1e-9)
        mirrored = dirac.parity(psi)
        flipped = dirac.bilinears(mirrored)
        checks.record("scalar_parity", flipped.scalar - scalar, 1e-12)
        checks.record("velocity_parity", dirac.four_velocity(mirrored).as_array() - PARITY_SIGNS * u.as_array(), 1e-9)
        spin = dirac.four_spin(psi, m, 1.0).as_array()
        checks.record("spin_parity", dirac.four_spin(mirrored, m, 1.0).as_array() + PARITY_SIGNS * spin, 1e-9)
        checks.record("pseudoscalar_parity", flipped.pseudoscalar + dirac.bilinears(psi).pseudoscalar, 1e-12)
        checks.record("basis_involution", dirac.change_basis(dirac.change_basis(psi)).components - psi.components, 1e-12)
    return checks


def run_liealg(rng, cases):
    checks = _Checks()
    generators = liealg.lorentz_generators()
    J, K = generators.J, generators.K
    for i, j in itertools.product(range(3), repeat=2):
        jj = sum(1j * levi_civita(i, j, k) * J[k] for k in range(3))
        kk = sum(-1j * levi_civita(i, j, k) * J[k] for k in range(3))
        jk = sum(1j * levi_civita(i, j, k) * K[k] for k in range(3))
        checks.record("rotation_rotation", liealg.commutator(J[i], J[j]) - jj, 0.0)
        checks.record("boost_boost", liealg.commutator(K[i], K[j]) - kk, 0.0)
        checks.record("rotation_boost", liealg.commutator(J[i], K[j]) - jk, 0.0)
    a, b = liealg.ab_split(generators)
    checks.record("a_closure", liealg.su2_closure_residual(a), 0.0)
    checks.record("b_closure", liealg.su2_closure_residual(b), 0.0)
    for i, j in itertools.product(range(3), repeat=2):
        checks.record("a_b_commute", liealg.commutator(a[i], b[j]), 0.0)
    checks.record("su2_isomorphy", liealg.su2_isomorphy_residual(), 0.0)

    for basis in dirac.Basis:
        g = dirac.gammas(basis)
        checks.record(f"clifford_{basis.value}", liealg.clifford_residual(g), 0.0)
        checks.record(f"spinor_bracket_{basis.value}", liealg.bracket_table_residual(lambda mu, nu: liealg.smunu(mu, nu, g)), 0.0)
    checks.record("vector_bracket", liealg.bracket_table_residual(liealg.lmunu), 0.0)
    for i in range(3):
        checks.record("lmunu_boosts", liealg.lmunu(0, i + 1) + 1j * K[i], 0.0)
    for (a_idx, b_idx), k in (((2, 3), 0), ((3, 1), 1), ((1, 2), 2)):
        checks.record("lmunu_rotations", liealg.lmunu(a_idx, b_idx) + 1j * J[k], 0.0)

    g = dirac.gammas(dirac.Basis.CHIRAL)
    for _ in range(cases):
        n, angle = random_unit_vector(rng), rng.uniform(-math.pi, math.pi)
        generator = sum(n[i] * liealg.SO3_GENERATORS[i] for i in range(3))
        checks.record("rotation_exponential", expm(1j * angle * generator).real - rotor.so3_from_axis_angle(n, angle), 1e-12)
        theta = rng.normal(size=(4, 4)) * 0.5
        theta = theta - theta.T
        big = liealg.dirac_lorentz(theta, g)
        checks.record("dirac_lorentz_adjoint", big.conj().T @ g.gamma0 @ big - g.gamma0, 1e-10)
    return checks


def run_maxwell(rng, cases):
    checks = _Checks()
    residuals = []
    for h in (0.1, 0.05, 0.025):
        wave = maxwell.plane_wave(k=1.0, h=h)
        residuals.append(maxwell.maxwell_residual(wave, maxwell.SourceGrid.zeros_like(wave)))
    for coarse, fine in zip(residuals, residuals[1:]):
        checks.record("convergence_ratio", max(0.0, abs(coarse / fine - 4.0) - 0.8), 0.0)

    wave = maxwell.plane_wave(k=1.0, h=0.1)
    zero_sources = maxwell.SourceGrid.zeros_like(wave)
    bumped = maxwell.corrupt(wave, amplitude=rng.uniform(0.2, 1.0))
    checks.record("equivalence", maxwell.equivalence_gap(bumped, zero_sources), 1e-13)
    zero = maxwell.FieldGrid(np.zeros_like(wave.e), np.zeros_like(wave.b), wave.h_t, wave.h)
    checks.record("zero_fields", maxwell.maxwell_residual(zero, zero_sources), 0.0)

    phases = rng.uniform(-1.0, 1.0, size=4)
    sources = maxwell.SourceGrid.from_functions(
        lambda t, x, y, z: np.sin(x + phases[0] * t) * np.cos(y - z),
        lambda t, x, y, z: (np.cos(x * phases[1]), np.sin(y + t * phases[2]), np.cos(z + phases[3] * x)),
        (5, 5, 5, 5), 0.05, 0.1,
    )
    d = maxwell.central_derivatives(sources.j, sources.h_t, sources.h)
    direct = maxwell.central_derivatives(sources.rho, sources.h_t, sources.h)[0] + d[1][..., 0] + d[2][..., 1] + d[3][..., 2]
    checks.record("continuity_identity", maxwell.continuity_field(sources) - direct, 1e-12)

    t, x, y, z = wave.coordinates()
    scalar = np.sin(x + phases[0] * y) * np.cos(t - z)
    checks.record(
        "dalembertian_identity",
        maxwell.dalembertian(scalar, wave.h_t, wave.h) - maxwell.wave_operator(scalar, wave.h_t, wave.h),
        1e-9,
    )
    return checks


SUITES = {
    "algebra": run_algebra,
    "spinor": run_spinor,
    "homomorphism": run_homomorphism,
    "lorentz": run_lorentz,
    "weyl": run_weyl,
    "dirac": run_dirac,
    "liealg": run_liealg,
    "maxwell": run_maxwell,
}


def run_suite(name, seed=None, cases=None):
    """
    Run one named suite.

    Raises:
        DomainError: unknown suite name
    """
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}, choose from {', '.join(SUITES)}")
    seed = get_setting("SPINOR_SEED") if seed is None else int(seed)
    cases = get_setting("SPINOR_SUITE_CASES") if cases is None else int(cases)
    rng = np.random.default_rng(seed)
    result = SuiteResult(name, seed, cases, SUITES[name](rng, cases).results())
    if result.passed:
        logger.info("suite %s passed (%d cases, max residual %.3e)", name, cases, result.max_residual)
    else:
        logger.warning("suite %s failed checks: %s", name, ", ".join(result.failures))
    return result
