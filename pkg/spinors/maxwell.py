"""
Maxwell's equations in spinor form on sampled grids.

Grids are stored t-major, then z, y, x: array axes (0, 1, 2, 3) are (t, z, y, x).
Derivatives are second-order central differences and only interior nodes are
evaluated. Units: c = mu0 = eps0 = 1.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .algebra import EPSILON, METRIC, SIGMA
from .exceptions import DomainError
from .lorentz import Rank2Spinor, Variance

logger = logging.getLogger(__name__)

# ?----end imports----

MIN_NODES = 5

# array axis holding lambda = t, x, y, z
LAMBDA_AXES = (0, 3, 2, 1)

# derivative spinor d^{ab'} = sum_lambda eta^{lambda lambda} sigma^lambda d_lambda
DERIVATIVE_SYMBOL = np.einsum("l,lab->lab", np.diag(METRIC), SIGMA)
DERIVATIVE_SYMBOL.flags.writeable = False


def _readonly(values):
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    return arr


def _check_grid(dims, h_t, h):
    if len(dims) != 4:
        raise DomainError(f"grids are 4-dimensional, got dims {dims}")
    if min(dims) < MIN_NODES:
        raise DomainError(f"every axis needs at least {MIN_NODES} nodes, got dims {tuple(dims)}")
    if h_t <= 0 or h <= 0:
        raise DomainError(f"spacings must be positive, got h_t={h_t!r} h={h!r}")


def _coordinates(dims, h_t, h, origin):
    t0, x0, y0, z0 = origin
    nt, nz, ny, nx = dims
    axes = (
        t0 + h_t * np.arange(nt),
        z0 + h * np.arange(nz),
        y0 + h * np.arange(ny),
        x0 + h * np.arange(nx),
    )
    t, z, y, x = np.meshgrid(*axes, indexing="ij")
    return t, x, y, z


@dataclass(frozen=True, eq=False)
class FieldGrid:
    """E and B sampled on a uniform (t, z, y, x) grid; e and b have shape dims + (3,)."""

    e: np.ndarray
    b: np.ndarray
    h_t: float
    h: float
    origin: tuple = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        e, b = _readonly(self.e), _readonly(self.b)
        if e.shape != b.shape or e.ndim != 5 or e.shape[-1] != 3:
            raise DomainError(f"E and B must share a (nt, nz, ny, nx, 3) shape, got {e.shape} and {b.shape}")
        _check_grid(e.shape[:4], self.h_t, self.h)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "origin", tuple(float(v) for v in self.origin))

    @property
    def dims(self):
        return self.e.shape[:4]

    def coordinates(self):
        return _coordinates(self.dims, self.h_t, self.h, self.origin)

    @classmethod
    def from_functions(cls, e_func, b_func, dims, h_t, h, origin=(0.0, 0.0, 0.0, 0.0)):
        """
        Sample E(t, x, y, z) and B(t, x, y, z), each returning three broadcastable arrays.

        Usage:
            grid = FieldGrid.from_functions(lambda t, x, y, z: (x, 0, 0), zero, (5, 5, 5, 5), 0.1, 0.1)
        """
        _check_grid(dims, h_t, h)
        coords = _coordinates(dims, h_t, h, origin)
        shape = tuple(dims)
        e = np.stack([np.broadcast_to(c, shape) for c in e_func(*coords)], axis=-1)
        b = np.stack([np.broadcast_to(c, shape) for c in b_func(*coords)], axis=-1)
        return cls(e, b, h_t, h, origin)


@dataclass(frozen=True, eq=False)
class SourceGrid:
    """Charge density rho (shape dims) and current j (shape dims + (3,))."""

    rho: np.ndarray
    j: np.ndarray
    h_t: float
    h: float
    origin: tuple = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        rho, j = _readonly(self.rho), _readonly(self.j)
        if rho.ndim != 4 or j.shape != rho.shape + (3,):
            raise DomainError(f"rho must be (nt, nz, ny, nx) and j (nt, nz, ny, nx, 3), got {rho.shape} and {j.shape}")
        _check_grid(rho.shape, self.h_t, self.h)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "origin", tuple(float(v) for v in self.origin))

    @property
    def dims(self):
        return self.rho.shape

    @classmethod
    def zeros(cls, dims, h_t, h, origin=(0.0, 0.0, 0.0, 0.0)):
        return cls(np.zeros(tuple(dims)), np.zeros(tuple(dims) + (3,)), h_t, h, origin)

    @classmethod
    def zeros_like(cls, fields):
        return cls.zeros(fields.dims, fields.h_t, fields.h, fields.origin)

    @classmethod
    def from_functions(cls, rho_func, j_func, dims, h_t, h, origin=(0.0, 0.0, 0.0, 0.0)):
        _check_grid(dims, h_t, h)
        coords = _coordinates(dims, h_t, h, origin)
        shape = tuple(dims)
        rho = np.broadcast_to(rho_func(*coords), shape)
        j = np.stack([np.broadcast_to(c, shape) for c in j_func(*coords)], axis=-1)
        return cls(rho, j, h_t, h, origin)


def _check_matching(fields, sources):
    if tuple(fields.dims) != tuple(sources.dims):
        raise DomainError(f"field grid {tuple(fields.dims)} and source grid {tuple(sources.dims)} differ in shape")
    if not (math.isclose(fields.h_t, sources.h_t) and math.isclose(fields.h, sources.h)):
        raise DomainError("field and source grids use different spacings")


def _field_spinor_array(e, b):
    """F = E - iB as sigma.F, on any leading shape."""
    f = np.asarray(e, dtype=complex) - 1j * np.asarray(b, dtype=complex)
    return np.einsum("...i,iab->...ab", f, SIGMA[1:])


def _current_spinor_array(rho, j):
    four = np.concatenate([np.asarray(rho, dtype=float)[..., None], np.asarray(j, dtype=float)], axis=-1)
    return np.einsum("...m,mab->...ab", four.astype(complex), SIGMA)


def field_spinor(e, b):
    """F = E - iB as [[F_z, F_x - iF_y], [F_x + iF_y, -F_z]]; traceless."""
    return Rank2Spinor(_field_spinor_array(e, b), Variance.LOWER_DOTTED, Variance.UPPER_DOTTED)


def current_spinor(rho, j):
    """[[rho + j_z, j_x - i j_y], [j_x + i j_y, rho - j_z]]."""
    return Rank2Spinor(_current_spinor_array(rho, j), Variance.UPPER_UNDOTTED, Variance.UPPER_DOTTED)


_INTERIOR = (slice(1, -1),) * 4


def central_derivatives(values, h_t, h):
    """Stack of d/dt, d/dx, d/dy, d/dz on interior nodes; trailing component axes are kept."""
    derivatives = []
    for lam, axis in enumerate(LAMBDA_AXES):
        step = h_t if lam == 0 else h
        derivatives.append(np.gradient(values, step, axis=axis)[_INTERIOR])
    return np.stack(derivatives)


def _apply_derivative_symbol(derivatives):
    return np.einsum("lab,l...bc->...ac", DERIVATIVE_SYMBOL, derivatives)


def derivative_spinor_apply(fields, node):
    """
    d^{ab'} F_{b'}^{c'} at one interior node (it, iz, iy, ix).

    Raises:
        DomainError: node on (or beyond) the grid boundary
    """
    node = tuple(int(i) for i in node)
    if len(node) != 4 or any(not 1 <= i <= n - 2 for i, n in zip(node, fields.dims)):
        raise DomainError(f"node {node} is not interior to a grid of dims {tuple(fields.dims)}")
    out = np.zeros((2, 2), dtype=complex)
    for lam, axis in enumerate(LAMBDA_AXES):
        step = fields.h_t if lam == 0 else fields.h
        ahead, behind = list(node), list(node)
        ahead[axis] += 1
        behind[axis] -= 1
        diff = _field_spinor_array(fields.e[tuple(ahead)], fields.b[tuple(ahead)]) - _field_spinor_array(
            fields.e[tuple(behind)], fields.b[tuple(behind)]
        )
        out += DERIVATIVE_SYMBOL[lam] @ (diff / (2.0 * step))
    return Rank2Spinor(out, Variance.UPPER_UNDOTTED, Variance.UPPER_DOTTED)


def spinor_residual_field(fields, sources):
    """d F - J at every interior node, shape interior + (2, 2)."""
    _check_matching(fields, sources)
    f = _field_spinor_array(fields.e, fields.b)
    df = _apply_derivative_symbol(central_derivatives(f, fields.h_t, fields.h))
    return df - _current_spinor_array(sources.rho, sources.j)[_INTERIOR]


def _max_abs(values):
    return float(np.max(np.abs(values), initial=0.0))


def maxwell_residual(fields, sources):
    """max over interior nodes of the entrywise |d F - J|."""
    return _max_abs(spinor_residual_field(fields, sources))


@dataclass(frozen=True)
class ClassicalResiduals:
    div_e: float
    div_b: float
    faraday: float
    ampere: float

    def as_dict(self):
        return {"div_e": self.div_e, "div_b": self.div_b, "faraday": self.faraday, "ampere": self.ampere}


def _div(d):
    return d[1][..., 0] + d[2][..., 1] + d[3][..., 2]


def _curl(d):
    return np.stack(
        [
            d[2][..., 2] - d[3][..., 1],
            d[3][..., 0] - d[1][..., 2],
            d[1][..., 1] - d[2][..., 0],
        ],
        axis=-1,
    )


def classical_residual_fields(fields, sources):
    """
    Node-wise (div E - rho, div B, curl E + dB/dt, curl B - j - dE/dt) on interior nodes.
    """
    _check_matching(fields, sources)
    de = central_derivatives(fields.e, fields.h_t, fields.h)
    db = central_derivatives(fields.b, fields.h_t, fields.h)
    r_e = _div(de) - sources.rho[_INTERIOR]
    r_b = _div(db)
    r_f = _curl(de) + db[0]
    r_a = _curl(db) - sources.j[_INTERIOR] - de[0]
    return r_e, r_b, r_f, r_a


def classical_maxwell_residual(fields, sources):
    r_e, r_b, r_f, r_a = classical_residual_fields(fields, sources)
    return ClassicalResiduals(_max_abs(r_e), _max_abs(r_b), _max_abs(r_f), _max_abs(r_a))


def spinor_from_classical(r_e, r_b, r_f, r_a):
    """
    Recombine classical residuals into the spinor residual:

        d F - J = (r_E - i r_B) I + sigma.(r_A + i r_F)
    """
    scalar = np.asarray(r_e) - 1j * np.asarray(r_b)
    vector = np.asarray(r_a) + 1j * np.asarray(r_f)
    return scalar[..., None, None] * np.eye(2) + np.einsum("...i,iab->...ab", vector, SIGMA[1:])


def equivalence_gap(fields, sources):
    """Largest node-wise difference between the spinor residual and its classical recombination."""
    recombined = spinor_from_classical(*classical_residual_fields(fields, sources))
    return _max_abs(spinor_residual_field(fields, sources) - recombined)


def continuity_field(sources):
    """
    d rho/dt + div j on interior nodes, via -1/2 d^{ab'} J_{ab'}.
    """
    current = _current_spinor_array(sources.rho, sources.j)
    lowered = EPSILON @ current @ EPSILON.T
    derivatives = central_derivatives(lowered, sources.h_t, sources.h)
    return (-0.5 * np.einsum("lab,l...ab->...", DERIVATIVE_SYMBOL, derivatives)).real


def continuity_residual(sources):
    return _max_abs(continuity_field(sources))


_DEEP_INTERIOR = (slice(2, -2),) * 4


def _second_derivatives(values, h_t, h):
    steps = [h_t, h, h, h]
    first = [np.gradient(values, steps[lam], axis=LAMBDA_AXES[lam]) for lam in range(4)]
    return np.array(
        [[np.gradient(first[lam], steps[kap], axis=LAMBDA_AXES[kap])[_DEEP_INTERIOR] for kap in range(4)] for lam in range(4)]
    )


def dalembertian_coefficients():
    """M_{lambda kappa} = -1/2 sum_ab d^{ab}(lambda) d_{ab}(kappa); equals diag(-1, 1, 1, 1)."""
    lowered = np.einsum("ab,kbc,dc->kad", EPSILON, DERIVATIVE_SYMBOL, EPSILON)
    return -0.5 * np.einsum("lab,kab->lk", DERIVATIVE_SYMBOL, lowered)


def dalembertian(values, h_t, h):
    """
    -1/2 d^{ab'} d_{ab'} applied to a sampled scalar by composed central differences.

    Result covers nodes at least two steps from every boundary.
    """
    values = np.asarray(values, dtype=float)
    _check_grid(values.shape, h_t, h)
    coefficients = dalembertian_coefficients()
    return np.einsum("lk,lk...->...", coefficients, _second_derivatives(values, h_t, h)).real


def wave_operator(values, h_t, h):
    """-d_t^2 + laplacian with each second derivative a composed central difference."""
    values = np.asarray(values, dtype=float)
    _check_grid(values.shape, h_t, h)
    second = _second_derivatives(values, h_t, h)
    return -second[0, 0] + second[1, 1] + second[2, 2] + second[3, 3]


def plane_wave(k=1.0, h=0.1, courant=0.5, nodes=MIN_NODES):
    """
    Vacuum wave E = x cos(k(z - t)), B = y cos(k(z - t)).

    The time step is courant * h; equal steps would cancel the truncation errors
    of the t and z stencils exactly. The grid is centred where k(z - t) = pi/2 so
    the largest residual always sits on the central node.
    """
    h_t = courant * h
    centre = nodes // 2
    origin = (-centre * h_t, -centre * h, -centre * h, math.pi / (2.0 * k) - centre * h)

    def e_func(t, x, y, z):
        wave = np.cos(k * (z - t))
        return wave, 0.0, 0.0

    def b_func(t, x, y, z):
        wave = np.cos(k * (z - t))
        return 0.0, wave, 0.0

    return FieldGrid.from_functions(e_func, b_func, (nodes,) * 4, h_t, h, origin)


def static_uniform(e_field=(0.0, 0.0, 1.0), h=0.1, nodes=MIN_NODES):
    """Constant E, zero B."""
    e_field = tuple(float(v) for v in e_field)
    return FieldGrid.from_functions(
        lambda t, x, y, z: e_field, lambda t, x, y, z: (0.0, 0.0, 0.0), (nodes,) * 4, h, h
    )


def coulomb(offset=(2.0, 0.0, 0.0), h=0.1, nodes=MIN_NODES):
    """Point-charge field r/|r|^3 sampled on a grid centred at `offset`, away from the charge."""
    centre = nodes // 2
    origin = (-centre * h, offset[0] - centre * h, offset[1] - centre * h, offset[2] - centre * h)

    def e_func(t, x, y, z):
        r3 = (x * x + y * y + z * z) ** 1.5
        return x / r3, y / r3, z / r3

    return FieldGrid.from_functions(
        e_func, lambda t, x, y, z: (0.0, 0.0, 0.0), (nodes,) * 4, h, h, origin
    )


def corrupt(fields, amplitude=0.5):
    """Add a smooth deterministic non-solution perturbation to E and B."""
    t, x, y, z = fields.coordinates()
    bump_e = np.stack([np.sin(x + 2 * y), np.cos(z - t), np.sin(t + y) * np.cos(x)], axis=-1)
    bump_b = np.stack([np.cos(y - z), np.sin(2 * x + t), np.cos(x + y + z)], axis=-1)
    return FieldGrid(fields.e + amplitude * bump_e, fields.b + amplitude * bump_b, fields.h_t, fields.h, fields.origin)
