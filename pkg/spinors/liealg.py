"""
Generator algebra of rotations and boosts.

Generators are stored exactly (entries 0, +-1, +-i) so commutator tables are
checked with exact complex arithmetic, no tolerance involved.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .algebra import IDENTITY4, METRIC, SIGMA
from .exceptions import DomainError

logger = logging.getLogger(__name__)

# ?----end imports----


def _generator(shape, entries):
    out = np.zeros(shape, dtype=complex)
    for (row, col), value in entries.items():
        out[row, col] = value
    out.flags.writeable = False
    return out


# 3x3 rotation generators, R = exp(i J.theta) with the frame (passive) convention
SO3_GENERATORS = (
    _generator((3, 3), {(1, 2): -1j, (2, 1): 1j}),
    _generator((3, 3), {(0, 2): 1j, (2, 0): -1j}),
    _generator((3, 3), {(0, 1): -1j, (1, 0): 1j}),
)

# 4x4 generators on (t, x, y, z)
LORENTZ_J = (
    _generator((4, 4), {(2, 3): -1j, (3, 2): 1j}),
    _generator((4, 4), {(1, 3): 1j, (3, 1): -1j}),
    _generator((4, 4), {(1, 2): -1j, (2, 1): 1j}),
)
LORENTZ_K = (
    _generator((4, 4), {(0, 1): 1j, (1, 0): 1j}),
    _generator((4, 4), {(0, 2): 1j, (2, 0): 1j}),
    _generator((4, 4), {(0, 3): 1j, (3, 0): 1j}),
)


@dataclass(frozen=True)
class GeneratorSet:
    """Rotation generators J and boost generators K (K is empty for the SO(3) set)."""

    J: tuple
    K: tuple = ()


def lorentz_generators():
    return GeneratorSet(J=LORENTZ_J, K=LORENTZ_K)


def rotation_generators():
    return GeneratorSet(J=SO3_GENERATORS)


def _check_square_pair(m, n, what):
    if m.shape != n.shape or m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"{what} needs equal square shapes, got {m.shape} and {n.shape}")


def commutator(m, n):
    """
    [M, N] = MN - NM.

    Raises:
        DomainError: shapes differ or are not square
    """
    m, n = np.asarray(m), np.asarray(n)
    _check_square_pair(m, n, "commutator")
    return m @ n - n @ m


def anticommutator(m, n):
    """{M, N} = MN + NM."""
    m, n = np.asarray(m), np.asarray(n)
    _check_square_pair(m, n, "anticommutator")
    return m @ n + n @ m


def ab_split(generators):
    """
    A = (J + iK)/2 and B = (J - iK)/2: two commuting copies of su(2).

    Raises:
        DomainError: the set has no boost generators
    """
    if len(generators.K) != 3:
        raise DomainError("the A/B split needs three boost generators")
    a = tuple((j + 1j * k) / 2 for j, k in zip(generators.J, generators.K))
    b = tuple((j - 1j * k) / 2 for j, k in zip(generators.J, generators.K))
    return a, b


def su2_closure_residual(triple):
    """max |[X_i, X_j] - i X_k| over the cyclic pairs of a generator triple."""
    worst = 0.0
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        diff = commutator(triple[i], triple[j]) - 1j * triple[k]
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def su2_isomorphy_residual():
    """Brackets of sigma_i/2 and of the 3x3 J_i close with the same structure constants."""
    halves = tuple(SIGMA[i] / 2 for i in (1, 2, 3))
    return max(su2_closure_residual(halves), su2_closure_residual(SO3_GENERATORS))


def clifford_residual(gamma_set):
    """max over the 10 pairs of |{g^mu, g^nu} + 2 eta^{mu nu} I|."""
    matrices = gamma_set.matrices
    worst = 0.0
    for mu, nu in itertools.combinations_with_replacement(range(4), 2):
        diff = anticommutator(matrices[mu], matrices[nu]) + 2 * METRIC[mu, nu] * IDENTITY4
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def smunu(mu, nu, gamma_set):
    """S^{mu nu} = [g^mu, g^nu]/4, the spinor representation of the Lorentz algebra."""
    g = gamma_set.matrices
    return (g[mu] @ g[nu] - g[nu] @ g[mu]) / 4


def lmunu(a, b):
    """(L^{ab})^c_d = eta^{bc} delta^a_d - eta^{ac} delta^b_d on 4-vectors."""
    delta = np.eye(4)
    out = np.outer(METRIC[b], delta[a]) - np.outer(METRIC[a], delta[b])
    return out.astype(complex)


def lorentz_bracket(generator, mu, nu, rho, sigma):
    """
    Right-hand side of the Lorentz algebra for a generator family G(a, b):

        eta^{mu rho} G^{nu sigma} - eta^{nu rho} G^{mu sigma}
        + eta^{nu sigma} G^{mu rho} - eta^{mu sigma} G^{nu rho}
    """
    eta = METRIC
    return (
        eta[mu, rho] * generator(nu, sigma)
        - eta[nu, rho] * generator(mu, sigma)
        + eta[nu, sigma] * generator(mu, rho)
        - eta[mu, sigma] * generator(nu, rho)
    )


def bracket_table_residual(generator):
    """Exhaustive check of [G^{mu nu}, G^{rho sigma}] against lorentz_bracket over all 4^4 indices."""
    worst = 0.0
    for mu, nu, rho, sigma in itertools.product(range(4), repeat=4):
        lhs = commutator(generator(mu, nu), generator(rho, sigma))
        diff = lhs - lorentz_bracket(generator, mu, nu, rho, sigma)
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def dirac_lorentz(theta, gamma_set=None):
    """
    Bispinor Lorentz matrix exp(theta_{mu nu} S^{mu nu} / 2).

    Args:
        theta: antisymmetric 4x4 real parameters
        gamma_set: defaults to the chiral basis

    Raises:
        DomainError: theta not antisymmetric
    """
    if gamma_set is None:
        from .dirac import Basis, gammas

        gamma_set = gammas(Basis.CHIRAL)
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (4, 4) or np.max(np.abs(theta + theta.T)) > 1e-12:
        raise DomainError("theta must be an antisymmetric 4x4 array")
    generator = sum(
        theta[mu, nu] * smunu(mu, nu, gamma_set) for mu, nu in itertools.product(range(4), repeat=2)
    )
    return expm(0.5 * generator)
