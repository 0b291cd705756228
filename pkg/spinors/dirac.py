"""
Dirac bispinors Psi = (phi_R, chi_L).

All observables are computed in the chiral basis; standard-basis inputs are
converted first. The 4-velocity and 4-spin are returned dimensionless, with
2W/(mS) = Psi^dagger Sigma^mu Psi.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import IDENTITY2, IDENTITY4, SIGMA, FourVector, lorentz_factor, minkowski_dot, sigma_dot
from .exceptions import DomainError, OffShellError
from .lorentz import SL2CTransform, induced_lorentz
from .rotor import eigenspinor
from .spinor import Chirality, Spinor, flagpole

logger = logging.getLogger(__name__)

# ?----end imports----

OFF_SHELL_TOLERANCE = 1e-8


class Basis(Enum):
    CHIRAL = "chiral"
    STANDARD = "standard"


_ZERO2 = np.zeros((2, 2), dtype=complex)

# chiral <-> standard, U = U^dagger = U^-1
BASIS_CHANGE = np.block([[IDENTITY2, IDENTITY2], [IDENTITY2, -IDENTITY2]]) / math.sqrt(2.0)
BASIS_CHANGE.flags.writeable = False


@dataclass(frozen=True)
class GammaSet:
    gamma0: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    gamma3: np.ndarray
    gamma5: np.ndarray
    basis: Basis

    @property
    def matrices(self):
        return (self.gamma0, self.gamma1, self.gamma2, self.gamma3)


def _frozen(m):
    m = np.array(m, dtype=complex)
    m.flags.writeable = False
    return m


def _chiral_gammas():
    gamma0 = np.block([[_ZERO2, IDENTITY2], [IDENTITY2, _ZERO2]])
    spatial = [np.block([[_ZERO2, -SIGMA[i]], [SIGMA[i], _ZERO2]]) for i in (1, 2, 3)]
    gamma5 = np.block([[IDENTITY2, _ZERO2], [_ZERO2, -IDENTITY2]])
    return [gamma0, *spatial, gamma5]


def _standard_gammas():
    gamma0 = np.block([[IDENTITY2, _ZERO2], [_ZERO2, -IDENTITY2]])
    spatial = [np.block([[_ZERO2, SIGMA[i]], [-SIGMA[i], _ZERO2]]) for i in (1, 2, 3)]
    gamma5 = np.block([[_ZERO2, IDENTITY2], [IDENTITY2, _ZERO2]])
    return [gamma0, *spatial, gamma5]


def gammas(basis=Basis.CHIRAL):
    """
    Dirac matrices in the chiral basis or in the standard (Dirac) basis.

    The standard set equals U g U^dagger of the chiral one; it is stored in its
    exact block form so both satisfy {g^mu, g^nu} = -2 eta^{mu nu} I exactly.
    """
    matrices = _standard_gammas() if basis is Basis.STANDARD else _chiral_gammas()
    return GammaSet(*(_frozen(g) for g in matrices), basis=basis)


@dataclass(frozen=True, eq=False)
class DiracSpinor:
    """Four complex components (phi_R then chi_L in the chiral basis) and a basis tag."""

    components: np.ndarray
    basis: Basis = Basis.CHIRAL

    def __post_init__(self):
        comps = _frozen(self.components)
        if comps.shape != (4,):
            raise DomainError(f"a Dirac spinor has 4 components, got shape {comps.shape}")
        if not np.all(np.isfinite(comps)):
            raise DomainError("Dirac spinor components must be finite")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_parts(cls, phi_r, chi_l):
        return cls(np.concatenate([phi_r.vector, chi_l.vector]))

    @property
    def phi_R(self):
        comps = as_chiral(self).components
        return Spinor(comps[0], comps[1], Chirality.RIGHT)

    @property
    def chi_L(self):
        comps = as_chiral(self).components
        return Spinor(comps[2], comps[3], Chirality.LEFT)

    def allclose(self, other, atol=1e-12):
        return self.basis is other.basis and np.allclose(self.components, other.components, rtol=0.0, atol=atol)


def change_basis(psi):
    """Apply U = (1/sqrt 2)[[I, I], [I, -I]]; involutive."""
    target = Basis.STANDARD if psi.basis is Basis.CHIRAL else Basis.CHIRAL
    return DiracSpinor(BASIS_CHANGE @ psi.components, target)


def as_chiral(psi):
    return psi if psi.basis is Basis.CHIRAL else change_basis(psi)


def _sandwich(psi, matrix):
    v = psi.components
    return complex(v.conj() @ matrix @ v)


def from_rest(spin_dir, branch=1):
    """
    Rest-frame bispinor: phi_R = eigenspinor(spin_dir)/sqrt 2, chi_L = branch phi_R.

    Raises:
        DomainError: branch not +-1, non-unit spin_dir
    """
    if branch not in (1, -1):
        raise DomainError(f"branch must be +1 or -1, got {branch!r}")
    phi = eigenspinor(spin_dir).vector / math.sqrt(2.0)
    return DiracSpinor(np.concatenate([phi, branch * phi]))


def transform_dirac(psi, transform):
    """Block-diagonal Lorentz action diag(L, (L^dagger)^-1) in the chiral basis."""
    comps = as_chiral(psi).components
    return DiracSpinor(np.concatenate([transform.m @ comps[:2], transform.dagger_inverse() @ comps[2:]]))


def boost_transform(p, m):
    """
    SL(2,C) element taking the rest frame to momentum p: (E + m + sigma.p)/sqrt(2m(E+m)).

    Raises:
        DomainError: m <= 0
    """
    if m <= 0:
        raise DomainError(f"mass must be positive, got {m!r}")
    p = np.asarray(p, dtype=float)
    energy = math.sqrt(float(p @ p) + m * m)
    norm = math.sqrt(2.0 * m * (energy + m))
    return SL2CTransform(((energy + m) * IDENTITY2 + sigma_dot(p)) / norm)


def boost(psi, p, m):
    """
    Boost to momentum p: phi_R by (E+m+sigma.p), chi_L by (E+m-sigma.p), both over sqrt(2m(E+m)).

    Raises:
        DomainError: m <= 0
    """
    return transform_dirac(psi, boost_transform(p, m))


def four_velocity(psi):
    """U^mu = Psi^dagger g^0 g^mu Psi; (1, 0, 0, 0) at rest."""
    g = gammas(Basis.CHIRAL)
    chiral = as_chiral(psi)
    return FourVector.from_array([_sandwich(chiral, g.gamma0 @ gm).real for gm in g.matrices])


def _sigma_mu():
    g = gammas(Basis.CHIRAL)
    return [g.gamma0 @ gm @ g.gamma5 for gm in g.matrices]


def four_spin(psi, m=1.0, spin=1.0):
    """W^mu = (m S / 2) Psi^dagger Sigma^mu Psi with Sigma^mu = g^0 g^mu g^5."""
    chiral = as_chiral(psi)
    return FourVector.from_array([0.5 * m * spin * _sandwich(chiral, s).real for s in _sigma_mu()])


def flagpoles(psi):
    """
    Contravariant flagpoles (A of phi_R, F of chi_L).

    U = A + F and 2W/(mS) = A - F.
    """
    return flagpole(psi.phi_R), flagpole(psi.chi_L)


def _check_on_shell(energy, p, m):
    p = np.asarray(p, dtype=float)
    gap = energy * energy - float(p @ p) - m * m
    if abs(gap) >= OFF_SHELL_TOLERANCE * energy * energy:
        logger.warning("off-shell kinematics E=%r |p|=%r m=%r", energy, float(np.linalg.norm(p)), m)
        raise OffShellError(f"E^2 - p^2 - m^2 = {gap!r} is not zero")
    return p


def dirac_residual(psi, energy, p, m, branch=1):
    """
    (-g^lambda P_lambda - branch m) Psi with P = (E, p); zero for boosted rest states.

    Args:
        branch: +1 for phi_R = chi_L at rest, -1 for the sign-flipped mass coupling

    Raises:
        OffShellError: |E^2 - p^2 - m^2| >= 1e-8 E^2
    """
    p = _check_on_shell(energy, p, m)
    g = gammas(psi.basis)
    op = energy * g.gamma0 - sum(p[i] * g.matrices[i + 1] for i in range(3)) - branch * m * IDENTITY4
    return op @ psi.components


def parity(psi):
    """Swap phi_R and chi_L."""
    comps = as_chiral(psi).components
    return DiracSpinor(np.concatenate([comps[2:], comps[:2]]))


@dataclass(frozen=True)
class Bilinears:
    scalar: float
    pseudoscalar: complex
    vector: FourVector
    axial: FourVector
    tensor: np.ndarray


def bilinears(psi):
    """
    The five bilinear covariants.

    scalar Psi^d g0 Psi, pseudoscalar Psi^d g0 g5 Psi, vector Psi^d g0 g^mu Psi,
    axial Psi^d g0 g^mu g5 Psi and tensor Psi^d g0 (g^mu g^nu - g^nu g^mu) Psi.
    """
    g = gammas(Basis.CHIRAL)
    chiral = as_chiral(psi)
    tensor = np.array(
        [[_sandwich(chiral, g.gamma0 @ (a @ b - b @ a)) for b in g.matrices] for a in g.matrices]
    )
    tensor.flags.writeable = False
    return Bilinears(
        scalar=_sandwich(chiral, g.gamma0).real,
        pseudoscalar=_sandwich(chiral, g.gamma0 @ g.gamma5),
        vector=four_velocity(chiral),
        axial=FourVector.from_array([_sandwich(chiral, s).real for s in _sigma_mu()]),
        tensor=tensor,
    )


def from_lab(velocity, spin_dir, m=1.0, branch=1):
    """
    Particle with rest-frame spin along spin_dir moving at `velocity` (units of c).

    Raises:
        DomainError: |velocity| >= 1
    """
    v = np.asarray(velocity, dtype=float)
    momentum = lorentz_factor(v) * m * v
    return boost(from_rest(spin_dir, branch), momentum, m)


def _rest_frame_transform(u):
    """SL(2,C) boost mapping the 4-velocity u to (1, 0, 0, 0)."""
    spatial = u.spatial
    size = float(np.linalg.norm(spatial))
    if size == 0.0:
        return SL2CTransform.identity()
    return SL2CTransform.boost(spatial / size, math.asinh(size))


def _unit_four_velocity(psi):
    u = four_velocity(psi)
    norm_sq = -minkowski_dot(u, u)
    if norm_sq <= 0.0:
        raise DomainError("4-velocity is not timelike, no rest frame exists")
    return FourVector.from_array(u.as_array() / math.sqrt(norm_sq))


def rest_frame_spin(psi):
    """Unit rest-frame spin direction: the 4-spin carried back by the inverse boost."""
    u = _unit_four_velocity(psi)
    rest = induced_lorentz(_rest_frame_transform(u)) @ four_spin(psi, 2.0, 1.0).as_array()
    spatial = rest[1:]
    size = float(np.linalg.norm(spatial))
    if size == 0.0:
        raise DomainError("spinor carries no spin")
    return spatial / size


def rest_frame_spinor(psi):
    """The bispinor itself, boosted back to the rest frame (there phi_R = +-chi_L)."""
    return transform_dirac(psi, _rest_frame_transform(_unit_four_velocity(psi)))


def hamiltonian(p, m, basis=Basis.CHIRAL, branch=1):
    """H = alpha.p + beta m with alpha^i = g^0 g^i and beta = g^0."""
    g = gammas(basis)
    p = np.asarray(p, dtype=float)
    alpha = sum(p[i] * (g.gamma0 @ g.matrices[i + 1]) for i in range(3))
    return alpha + branch * m * g.gamma0


def hamiltonian_residual(psi, p, m, branch=1):
    """(H - E) Psi with E = sqrt(p^2 + m^2)."""
    p = np.asarray(p, dtype=float)
    energy = math.sqrt(float(p @ p) + m * m)
    return (hamiltonian(p, m, psi.basis, branch) - energy * IDENTITY4) @ psi.components


def hamiltonian_square_residual(p, m, basis=Basis.CHIRAL):
    """H^2 - (p^2 + m^2) I, zero by the Pauli product identity."""
    p = np.asarray(p, dtype=float)
    h = hamiltonian(p, m, basis)
    return h @ h - (float(p @ p) + m * m) * IDENTITY4
