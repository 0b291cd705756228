"""
Rank-1 (Weyl) spinors.

A spinor is a pair of complex numbers (a, b) plus a chirality tag. Geometrically
it is a null flagpole, a flag angle and a sign: from_params / to_params convert
between the two pictures.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import EPSILON, METRIC, SIGMA, FourVector
from .exceptions import DomainError
from .lorentz import SL2CTransform

logger = logging.getLogger(__name__)

# ?----end imports----


class Chirality(Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def sign(self):
        return 1 if self is Chirality.RIGHT else -1

    @property
    def flipped(self):
        return Chirality.LEFT if self is Chirality.RIGHT else Chirality.RIGHT


@dataclass(frozen=True)
class Spinor:
    a: complex
    b: complex
    chirality: Chirality = Chirality.RIGHT

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))

    @classmethod
    def from_vector(cls, vector, chirality=Chirality.RIGHT):
        a, b = np.asarray(vector, dtype=complex)
        return cls(a, b, chirality)

    @property
    def vector(self):
        return np.array([self.a, self.b], dtype=complex)

    def __neg__(self):
        return Spinor(-self.a, -self.b, self.chirality)


@dataclass(frozen=True)
class FlagParams:
    """Flagpole length r, direction (theta, phi), flag angle alpha and the overall sign."""

    r: float
    theta: float
    phi: float
    alpha: float
    sign: int = 1


def _wrap_angle(x):
    """Map x into (-pi, pi]."""
    return x - 2.0 * math.pi * math.ceil((x - math.pi) / (2.0 * math.pi))


def from_params(params, chirality=Chirality.RIGHT):
    """
    Spinor with the given flagpole, flag and sign.

    a = sqrt(r) cos(theta/2) e^{i(-alpha-phi)/2}, b = sqrt(r) sin(theta/2) e^{i(-alpha+phi)/2}

    Raises:
        DomainError: negative r or theta outside [0, pi]
    """
    if params.r < 0:
        raise DomainError(f"flagpole length must be non-negative, got {params.r!r}")
    if not 0.0 <= params.theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {params.theta!r}")
    root = math.sqrt(params.r)
    a = root * math.cos(params.theta / 2) * np.exp(0.5j * (-params.alpha - params.phi))
    b = root * math.sin(params.theta / 2) * np.exp(0.5j * (-params.alpha + params.phi))
    return Spinor(params.sign * a, params.sign * b, chirality)


def to_params(s):
    """
    Invert from_params. At the poles phi is 0 and the remaining phase lives in alpha.

    Raises:
        DomainError: zero spinor
    """
    r = abs(s.a) ** 2 + abs(s.b) ** 2
    if r == 0.0:
        raise DomainError("the zero spinor has no flag parameters")
    theta = 2.0 * math.atan2(abs(s.b), abs(s.a))
    if s.b == 0:
        return FlagParams(r, 0.0, 0.0, -2.0 * np.angle(s.a), 1)
    if s.a == 0:
        return FlagParams(r, math.pi, 0.0, -2.0 * np.angle(s.b), 1)
    arg_a, arg_b = float(np.angle(s.a)), float(np.angle(s.b))
    raw = arg_b - arg_a
    phi = _wrap_angle(raw)
    # each 2 pi of wrapping shifts both half-angles by pi, i.e. flips the sign
    turns = round((raw - phi) / (2.0 * math.pi))
    sign = -1 if turns % 2 else 1
    return FlagParams(r, theta, phi, -(arg_a + arg_b), sign)


def sigma_components(s):
    """
    Raw s^dagger sigma^mu s.

    Contravariant for right-handed spinors; for left-handed ones these are the
    covariant components, which transform with the inverse boost.
    """
    v = s.vector
    return FourVector.from_array(np.einsum("a,mab,b->m", v.conj(), SIGMA, v).real)


def flagpole(s):
    """
    Contravariant null 4-vector of a spinor.

    Right: V^mu = s^dagger sigma^mu s. Left: the covariant s^dagger sigma^mu s is
    raised with the metric and taken future pointing, (s^dagger s, -s^dagger sigma s),
    so it transforms under induced_lorentz like every other 4-vector.

    Because of that sign, flagpole(dual(s)) == flagpole(s). The raw components
    s^dagger sigma^mu s of either chirality come from sigma_components.
    """
    raw = sigma_components(s).as_array()
    if s.chirality is Chirality.RIGHT:
        return FourVector.from_array(raw)
    return FourVector.from_array(-(METRIC @ raw))


def epsilon_inner(u, w):
    """
    Lorentz-invariant product u1 w2 - u2 w1.

    Raises:
        DomainError: u and w have different chirality
    """
    if u.chirality is not w.chirality:
        raise DomainError("epsilon_inner needs spinors of the same chirality")
    return u.a * w.b - u.b * w.a


def dual(s):
    """eps s*, with chirality flipped. dual(dual(s)) == -s."""
    return Spinor.from_vector(EPSILON @ s.vector.conj(), s.chirality.flipped)


def transform(s, transform_):
    """
    Lorentz-transform a spinor: L s for right-handed, (L^dagger)^-1 s for left-handed.

    Raises:
        DomainError: transform_ is not in SL(2,C)
    """
    if not isinstance(transform_, SL2CTransform):
        transform_ = SL2CTransform(transform_)
    if s.chirality is Chirality.RIGHT:
        out = transform_.m @ s.vector
    else:
        out = transform_.dagger_inverse() @ s.vector
    return Spinor.from_vector(out, s.chirality)


def conjugate_reflect(s):
    """Complex conjugate; reflects the flagpole in the xz plane."""
    return Spinor(s.a.conjugate(), s.b.conjugate(), s.chirality)


def orthogonal_pair(right, left):
    """
    Two orthogonal 4-vectors from a right- and a left-handed spinor.

    P is the sum of the flagpoles (timelike or null), W their difference; P.W = 0
    because both flagpoles are null.
    """
    if right.chirality is not Chirality.RIGHT or left.chirality is not Chirality.LEFT:
        raise DomainError("orthogonal_pair takes a right-handed and a left-handed spinor")
    a = flagpole(right).as_array()
    b = flagpole(left).as_array()
    return FourVector.from_array(a + b), FourVector.from_array(a - b)


SPINOR_TYPES = ("u", "eps u*", "u*", "eps u")


def spinor_types(u):
    """
    The four spinor kinds built from one right-handed base spinor, keyed by name.

    Each value is (components, law) where law(L) is the matrix that moves the
    components when u -> L u.
    """
    vec = u.vector
    return {
        "u": (vec, lambda t: t.m),
        "eps u*": (EPSILON @ vec.conj(), lambda t: t.dagger_inverse()),
        "u*": (vec.conj(), lambda t: t.m.conj()),
        "eps u": (EPSILON @ vec, lambda t: np.linalg.inv(t.m.T)),
    }


def random_spinor(rng, chirality=Chirality.RIGHT, scale=1.0):
    a, b = scale * (rng.normal(size=2) + 1j * rng.normal(size=2))
    return Spinor(a, b, chirality)
