"""
SL(2,C) as the spinor Lorentz group.

A 4-vector V is carried by the Hermitian matrix X = V^mu sigma^mu, an element
L of SL(2,C) acts as X -> L X L^dagger, and rank-2 spinors carry two variance
tags that alone decide how they transform.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import EPSILON, IDENTITY2, SIGMA, FourVector, boost_exp, require_unit, sigma_dot, su2_exp
from .conf import resolve_tolerance
from .exceptions import DomainError

logger = logging.getLogger(__name__)

# ?----end imports----


def _frozen(values, dtype=complex):
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


def _inverse2(m):
    """Adjugate inverse of a unit-determinant 2x2 matrix."""
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


@dataclass(frozen=True)
class SL2CTransform:
    """
    A 2x2 complex matrix with unit determinant.

    Usage:
        L = SL2CTransform.boost([0, 0, 1], 0.5) @ SL2CTransform.rotation([1, 0, 0], np.pi / 3)
    """

    m: np.ndarray

    def __post_init__(self):
        m = _frozen(self.m)
        if m.shape != (2, 2):
            raise DomainError(f"SL(2,C) element must be 2x2, got {m.shape}")
        det = np.linalg.det(m)
        # cancellation error in det grows with the size of the two products
        scale = max(1.0, abs(m[0, 0] * m[1, 1]), abs(m[0, 1] * m[1, 0]))
        if abs(det - 1.0) > resolve_tolerance() * scale:
            logger.warning("rejected SL(2,C) candidate with det %r", det)
            raise DomainError(f"determinant must be 1, got {det!r}")
        object.__setattr__(self, "m", m)

    @classmethod
    def identity(cls):
        return cls(IDENTITY2)

    @classmethod
    def rotation(cls, axis, angle):
        return cls(su2_exp(axis, angle))

    @classmethod
    def boost(cls, direction, rapidity):
        return cls(boost_exp(direction, rapidity))

    def inverse(self):
        return SL2CTransform(_inverse2(self.m))

    def dagger_inverse(self):
        """(L^dagger)^-1 = eps L* eps^-1, the law of left-handed spinors."""
        return EPSILON @ self.m.conj() @ EPSILON.T

    def __matmul__(self, other):
        if not isinstance(other, SL2CTransform):
            return NotImplemented
        return SL2CTransform(self.m @ other.m)

    def __neg__(self):
        return SL2CTransform(-self.m)


@dataclass(frozen=True)
class HermSpinorMatrix:
    """Hermitian 2x2 matrix X = t I + x sigma_x + y sigma_y + z sigma_z."""

    x: np.ndarray

    def __post_init__(self):
        x = _frozen(self.x)
        if x.shape != (2, 2):
            raise DomainError(f"expected a 2x2 matrix, got {x.shape}")
        scale = max(1.0, float(np.max(np.abs(x))))
        if np.max(np.abs(x - x.conj().T)) > resolve_tolerance() * scale:
            raise DomainError("matrix is not Hermitian")
        object.__setattr__(self, "x", x)

    @property
    def det(self):
        return float(np.linalg.det(self.x).real)


class Variance(Enum):
    UPPER_UNDOTTED = "upper-undotted"
    LOWER_UNDOTTED = "lower-undotted"
    UPPER_DOTTED = "upper-dotted"
    LOWER_DOTTED = "lower-dotted"

    @property
    def dotted(self):
        return self in (Variance.UPPER_DOTTED, Variance.LOWER_DOTTED)

    @property
    def upper(self):
        return self in (Variance.UPPER_UNDOTTED, Variance.UPPER_DOTTED)


@dataclass(frozen=True)
class Rank2Spinor:
    """2x2 array of components with a variance tag per index."""

    m: np.ndarray
    index1: Variance
    index2: Variance

    def __post_init__(self):
        m = _frozen(self.m)
        if m.shape != (2, 2):
            raise DomainError(f"rank-2 spinor must be 2x2, got {m.shape}")
        object.__setattr__(self, "m", m)

    def index(self, which):
        return self.index1 if _index_position(which) == 1 else self.index2


def herm_from_fourvec(v):
    """X = sum_mu V^mu sigma^mu, i.e. [[t+z, x-iy], [x+iy, t-z]]."""
    comps = v.as_array() if isinstance(v, FourVector) else np.asarray(v, dtype=float)
    return HermSpinorMatrix(np.einsum("m,mab->ab", comps.astype(complex), SIGMA))


def fourvec_from_herm(x):
    """
    Inverse of herm_from_fourvec: t = tr(X)/2, x_i = tr(sigma_i X)/2.

    Raises:
        DomainError: X not Hermitian
    """
    herm = x if isinstance(x, HermSpinorMatrix) else HermSpinorMatrix(x)
    comps = 0.5 * np.einsum("mab,ba->m", SIGMA, herm.x)
    return FourVector.from_array(comps.real)


def act(transform, x):
    """X -> L X L^dagger; Hermiticity and determinant are preserved."""
    y = transform.m @ x.x @ transform.m.conj().T
    return HermSpinorMatrix(0.5 * (y + y.conj().T))


def induced_lorentz(transform):
    """
    The 4x4 Lorentz matrix with herm(Lambda V) = L herm(V) L^dagger.

    Column nu is the 4-vector of L sigma^nu L^dagger, so the matrix follows
    from probing the four basis vectors.
    """
    m = transform.m
    probes = np.einsum("ab,nbc,cd->nad", m, SIGMA, m.conj().T)
    return 0.5 * np.einsum("mab,nba->mn", SIGMA, probes).real


def induced_boost_matrix(direction, rapidity):
    """Closed-form 4x4 image of boost_exp(direction, rapidity)."""
    n = require_unit(direction, name="direction")
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    out = np.empty((4, 4))
    out[0, 0] = ch
    out[0, 1:] = -sh * n
    out[1:, 0] = -sh * n
    out[1:, 1:] = np.eye(3) + (ch - 1.0) * np.outer(n, n)
    return out


def general_transform(theta, rho):
    """
    Lambda = exp(i sigma.theta/2 - sigma.rho/2) in closed form.

    With w = (i theta - rho)/2 and z^2 = w.w (no conjugation), (sigma.w)^2 = z^2 I,
    so exp(sigma.w) = cosh(z) I + sinh(z)/z sigma.w.
    """
    w = (1j * np.asarray(theta, dtype=float) - np.asarray(rho, dtype=float)) / 2.0
    z = np.sqrt(complex(np.dot(w, w)))
    if abs(z) < 1e-8:
        sinhc = 1.0 + z * z / 6.0
    else:
        sinhc = np.sinh(z) / z
    return SL2CTransform(np.cosh(z) * IDENTITY2 + sinhc * sigma_dot(w))


def random_sl2c(rng, angle_scale=np.pi, rapidity_scale=1.0):
    """Random element from uniformly drawn rotation and boost parameters."""
    theta = rng.uniform(-angle_scale, angle_scale, size=3)
    rho = rng.uniform(-rapidity_scale, rapidity_scale, size=3)
    return general_transform(theta, rho)


def dotted_law(transform):
    """Dotted-sector law (eps L eps^-1)*; equals (L^dagger)^-1."""
    return (EPSILON @ transform.m @ EPSILON.T).conj()


def rank1_law(variance, transform):
    """Matrix acting on a rank-1 spinor carrying `variance`."""
    m = transform.m
    if variance is Variance.UPPER_UNDOTTED:
        return m
    if variance is Variance.LOWER_UNDOTTED:
        return _inverse2(m.T)
    if variance is Variance.UPPER_DOTTED:
        return m.conj()
    return _inverse2(m.conj().T)


def rank1_components(variance, vector):
    """
    The components carrying `variance` built from an upper-undotted vector u:
    u, eps u, u* or eps u*.
    """
    u = np.asarray(vector, dtype=complex)
    if variance.dotted:
        u = u.conj()
    return u if variance.upper else EPSILON @ u


def transform_rank2(spinor, transform):
    """
    Apply the rank-2 table: the first index's law from the left, the second's
    transposed from the right.

    Example:
        upper-undotted x lower-dotted transforms as L M L*^-1
    """
    left = rank1_law(spinor.index1, transform)
    right = rank1_law(spinor.index2, transform)
    return Rank2Spinor(left @ spinor.m @ right.T, spinor.index1, spinor.index2)


def _index_position(which):
    if which in (1, "index1"):
        return 1
    if which in (2, "index2"):
        return 2
    raise DomainError(f"index selector must be index1 or index2, got {which!r}")


def raise_lower(spinor, which, to):
    """
    Move one index up or down with eps.

    Lowering premultiplies by eps (index1) or postmultiplies by eps^T (index2);
    raising uses the inverse eps^T / eps.

    Raises:
        DomainError: `to` would change the dottedness of the index
    """
    position = _index_position(which)
    current = spinor.index(position)
    if to.dotted != current.dotted:
        logger.warning("refused to change dottedness of %s from %s to %s", which, current.value, to.value)
        raise DomainError(f"cannot turn a {current.value} index into {to.value}")
    if to is current:
        return spinor
    m = spinor.m
    if position == 1:
        m = (EPSILON.T if to.upper else EPSILON) @ m
        return Rank2Spinor(m, to, spinor.index2)
    m = m @ (EPSILON if to.upper else EPSILON.T)
    return Rank2Spinor(m, spinor.index1, to)


def contract(x, y):
    """
    Full contraction X^{ab'} Y_{ab'} as an entrywise sum.

    Raises:
        DomainError: a summed pair mixes dotted and undotted, or is not one up one down
    """
    for position in (1, 2):
        a, b = x.index(position), y.index(position)
        if a.dotted != b.dotted or a.upper == b.upper:
            raise DomainError(f"illegal contraction of {a.value} with {b.value} on index{position}")
    return complex(np.sum(x.m * y.m))
