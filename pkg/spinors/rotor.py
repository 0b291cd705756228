"""
The SU(2) -> SO(3) double cover.

Rotations follow the frame (passive) convention throughout: R_z(theta) maps
(x, y, z) to (x cos + y sin, -x sin + y cos, z).
"""
import logging
import math

import numpy as np

from .algebra import SIGMA, require_unit, sigma_dot
from .conf import resolve_tolerance
from .exceptions import DomainError
from .liealg import SO3_GENERATORS
from .spinor import FlagParams, from_params

logger = logging.getLogger(__name__)

# ?----end imports----


def so3_from_axis_angle(axis, angle):
    """
    R = exp(i J.n theta) in Rodrigues form.

    K = i n.J is real antisymmetric, so R = I + sin(theta) K + (1 - cos(theta)) K^2.

    Raises:
        DomainError: non-unit axis
    """
    n = require_unit(axis)
    k = (1j * np.einsum("i,ijk->jk", n, np.array(SO3_GENERATORS))).real
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def so3_from_su2(u, tol=None):
    """
    Rotation image of an SU(2) matrix, R_jk = tr(sigma_j U sigma_k U^dagger)/2.

    U and -U give the same rotation.

    Raises:
        DomainError: U not unitary or det U != 1
    """
    tol = resolve_tolerance(tol)
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got {u.shape}")
    if np.max(np.abs(u @ u.conj().T - np.eye(2))) > tol or abs(np.linalg.det(u) - 1.0) > tol:
        logger.warning("so3_from_su2 rejected a matrix outside SU(2)")
        raise DomainError("matrix is not in SU(2)")
    pauli = SIGMA[1:]
    full = 0.5 * np.einsum("jab,bc,kcd,da->jk", pauli, u, pauli, u.conj().T)
    return full.real


def rotation_angle(rotation):
    """Angle in [0, pi] of an SO(3) matrix."""
    cos_angle = (np.trace(rotation) - 1.0) / 2.0
    return math.acos(max(-1.0, min(1.0, float(cos_angle))))


def spin_matrix(n):
    """S = n.sigma: Hermitian, traceless, eigenvalues +-1."""
    return sigma_dot(require_unit(n, name="n"))


def eigenspinor(n):
    """
    Unit right-handed spinor with S s = s and flagpole along n.

    The phase is fixed by alpha = 0 and a positive sign.
    """
    n = require_unit(n, name="n")
    theta = math.acos(max(-1.0, min(1.0, float(n[2]))))
    phi = math.atan2(n[1], n[0]) if math.hypot(n[0], n[1]) > 0 else 0.0
    return from_params(FlagParams(r=1.0, theta=theta, phi=phi, alpha=0.0, sign=1))
