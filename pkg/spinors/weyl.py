"""
Massless spin-1/2 kinematics: Weyl equations, helicity and parity violation.

Energy and momentum of a single Weyl spinor are read off its flagpole; no hbar/2
scaling is applied here.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .algebra import IDENTITY2, FourVector, sigma_dot
from .conf import resolve_tolerance
from .exceptions import DomainError
from .rotor import eigenspinor
from .spinor import Chirality, Spinor, dual, flagpole

logger = logging.getLogger(__name__)

# ?----end imports----


@dataclass(frozen=True)
class ParticleKinematics:
    energy: float
    momentum: tuple
    spin: tuple

    @property
    def is_massless(self):
        return abs(self.energy - float(np.linalg.norm(self.momentum))) <= resolve_tolerance() * max(1.0, self.energy)


@dataclass(frozen=True)
class ParityReport:
    residual: np.ndarray
    residual_norm: float
    spinor_norm: float
    dual_residual_norm: float

    @property
    def violated(self):
        return self.residual_norm > resolve_tolerance() * max(1.0, self.spinor_norm)


def pauli_lubanski(kinematics):
    """W = (s.p, E s), c = 1."""
    p = np.asarray(kinematics.momentum, dtype=float)
    s = np.asarray(kinematics.spin, dtype=float)
    return FourVector(float(s @ p), *(kinematics.energy * s))


def _energy_momentum(s):
    fp = flagpole(s)
    return fp.t, fp.spatial


def weyl_residual(s):
    """
    (E - p.sigma) s for right-handed, (E + p.sigma) s for left-handed spinors,
    with (E, p) the spinor's own flagpole. Zero for every spinor.
    """
    energy, p = _energy_momentum(s)
    op = energy * IDENTITY2 - s.chirality.sign * sigma_dot(p)
    return op @ s.vector


def helicity(s, tol=None):
    """
    +1 or -1 from the eigen-relation (p.sigma/|p|) s = +-s.

    Raises:
        DomainError: flagpole has no momentum
    """
    tol = resolve_tolerance(tol)
    _, p = _energy_momentum(s)
    p_norm = float(np.linalg.norm(p))
    if p_norm <= tol:
        raise DomainError("helicity is undefined for zero momentum")
    projected = sigma_dot(p / p_norm) @ s.vector
    scale = max(1.0, float(np.linalg.norm(s.vector)))
    for sign in (1, -1):
        if np.max(np.abs(projected - sign * s.vector)) <= 1e3 * tol * scale:
            return sign
    raise DomainError("spinor is not a helicity eigenstate of its own momentum")


def from_momentum(p, chirality=Chirality.RIGHT):
    """
    Massless Weyl spinor whose flagpole is (|p|, p).

    The right-handed spinor spins along p, the left-handed one against it.
    """
    p = np.asarray(p, dtype=float)
    size = float(np.linalg.norm(p))
    if size == 0.0:
        raise DomainError("a massless spinor needs non-zero momentum")
    direction = p / size if chirality is Chirality.RIGHT else -p / size
    return Spinor.from_vector(np.sqrt(size) * eigenspinor(direction).vector, chirality)


def parity_demo(s):
    """
    First Weyl equation after p -> -p with sigma kept fixed (axial).

    Raises:
        DomainError: s is not right-handed
    """
    if s.chirality is not Chirality.RIGHT:
        raise DomainError("parity_demo starts from a right-handed spinor")
    energy, p = _energy_momentum(s)
    residual = (energy * IDENTITY2 + sigma_dot(p)) @ s.vector
    report = ParityReport(
        residual=residual,
        residual_norm=float(np.linalg.norm(residual)),
        spinor_norm=float(np.linalg.norm(s.vector)),
        dual_residual_norm=float(np.linalg.norm(weyl_residual(dual(s)))),
    )
    logger.debug("parity residual %.3e for spinor norm %.3e", report.residual_norm, report.spinor_norm)
    return report
