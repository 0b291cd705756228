"""
Small fixed-size complex matrix algebra.

2x2 and 4x4 matrices are plain numpy complex128 arrays, 4-vectors are FourVector
values with signature (-1, 1, 1, 1) and c = 1.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

logger = logging.getLogger(__name__)

# ?----end imports----

UNIT_TOLERANCE = 1e-12

IDENTITY2 = np.eye(2, dtype=complex)
IDENTITY4 = np.eye(4, dtype=complex)
IDENTITY2.flags.writeable = False
IDENTITY4.flags.writeable = False

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
SIGMA.flags.writeable = False

# spinor Minkowski metric, raising uses its transpose
EPSILON = np.array([[0, 1], [-1, 0]], dtype=complex)
EPSILON.flags.writeable = False

METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])
METRIC.flags.writeable = False


@dataclass(frozen=True)
class FourVector:
    """Contravariant 4-vector (t, x, y, z)."""

    t: float
    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, values):
        t, x, y, z = (float(v) for v in np.real(np.asarray(values)))
        return cls(t, x, y, z)

    def as_array(self):
        return np.array([self.t, self.x, self.y, self.z])

    @property
    def spatial(self):
        return np.array([self.x, self.y, self.z])

    def norm(self):
        """Minkowski square, negative for timelike vectors."""
        return minkowski_dot(self, self)

    def __iter__(self):
        return iter((self.t, self.x, self.y, self.z))


def pauli(index):
    """
    Return sigma^index, with sigma^0 the identity.

    Raises:
        DomainError: index outside 0..3
    """
    if isinstance(index, bool) or not isinstance(index, (int, np.integer)) or not 0 <= index <= 3:
        logger.warning("pauli index out of range: %r", index)
        raise DomainError(f"Pauli index must be 0..3, got {index!r}")
    return SIGMA[index].copy()


def require_unit(vector, name="axis", tol=UNIT_TOLERANCE):
    """Return `vector` as a float array, raising DomainError unless |vector| = 1."""
    vec = np.asarray(vector, dtype=float)
    if vec.shape != (3,):
        raise DomainError(f"{name} must be a 3-vector, got shape {vec.shape}")
    length = np.linalg.norm(vec)
    if abs(length - 1.0) > tol:
        logger.warning("non-unit %s rejected: |%s| = %r", name, name, length)
        raise DomainError(f"{name} must be a unit vector, |{name}| = {length!r}")
    return vec


def sigma_dot(vector):
    """v . sigma for a real or complex 3-vector."""
    vec = np.asarray(vector)
    return np.einsum("i,ijk->jk", vec.astype(complex), SIGMA[1:])


def su2_exp(axis, angle):
    """
    Spin rotation matrix cos(theta/2) I + i sin(theta/2) n.sigma.

    Args:
        axis: unit 3-vector n
        angle (float): rotation angle theta in radians

    Returns:
        2x2 unitary matrix with unit determinant.

    Raises:
        DomainError: non-unit axis

    Example:
        >>> su2_exp([0, 0, 1], 2 * np.pi)  # -I, the 720 degree story
    """
    n = require_unit(axis)
    half = angle / 2.0
    return np.cos(half) * IDENTITY2 + 1j * np.sin(half) * sigma_dot(n)


def boost_exp(direction, rapidity):
    """
    Spinor boost cosh(rho/2) I - sinh(rho/2) n.sigma.

    Hermitian, positive definite, unit determinant.
    """
    n = require_unit(direction, name="direction")
    half = rapidity / 2.0
    return np.cosh(half) * IDENTITY2 - np.sinh(half) * sigma_dot(n)


def pauli_product_identity_residual(a, b):
    """(sigma.a)(sigma.b) - (a.b) I - i sigma.(a x b), zero for every a, b."""
    a = np.asarray(a)
    b = np.asarray(b)
    return sigma_dot(a) @ sigma_dot(b) - np.dot(a, b) * IDENTITY2 - 1j * sigma_dot(np.cross(a, b))


def minkowski_dot(a, b):
    """-a_t b_t + a_x b_x + a_y b_y + a_z b_z"""
    va = a.as_array() if isinstance(a, FourVector) else np.asarray(a, dtype=float)
    vb = b.as_array() if isinstance(b, FourVector) else np.asarray(b, dtype=float)
    return float(va @ METRIC @ vb)


def is_hermitian(m, tol=1e-10):
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def is_unitary(m, tol=1e-10):
    m = np.asarray(m)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))) <= tol)


def random_unit_vector(rng):
    """Uniform direction on the sphere."""
    while True:
        vec = rng.normal(size=3)
        length = np.linalg.norm(vec)
        if length > 1e-8:
            return vec / length


def lorentz_factor(velocity):
    """gamma = 1/sqrt(1 - v^2), v in units of c."""
    speed_sq = float(np.dot(velocity, velocity))
    if speed_sq >= 1.0:
        raise DomainError(f"speed must be below c, |v| = {np.sqrt(speed_sq)!r}")
    return 1.0 / np.sqrt(1.0 - speed_sq)
