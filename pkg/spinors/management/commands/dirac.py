# * python manage.py dirac build --rest 0 0 1
# * python manage.py dirac build --rest 1 0 1 --boost 0.8 0 0 | python manage.py dirac residual --input -
# * python manage.py dirac bilinears --spinor 1.17005 0.204124 0.462943 -0.204124
import logging
import math
import sys
from pathlib import Path

import numpy as np
from django.core.management.base import CommandError

from ... import dirac
from ...exceptions import DomainError
from ...spinor import flagpole, orthogonal_pair
from ...utils.report_utils import complex_list, loads_report
from ..base import EXIT_USAGE, ReportCommand, complex_arg

logger = logging.getLogger(__name__)

# ?----end imports----


def _unit(values, name):
    vec = np.asarray(values, dtype=float)
    size = float(np.linalg.norm(vec))
    if size == 0.0:
        raise DomainError(f"{name} must be a non-zero 3-vector")
    return vec / size


def _state_report(psi, mass, branch):
    """Spinor plus the kinematics the next step of a chain needs."""
    u = dirac.four_velocity(psi)
    return {
        "spinor": psi.components,
        "basis": psi.basis,
        "mass": mass,
        "branch": branch,
        "energy": mass * u.t,
        "momentum": mass * u.spatial,
    }


class Command(ReportCommand):
    help = "Dirac bispinors: build, boost, bilinears, residual and hamiltonian reports."
    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True, metavar="ACTION")

        build = actions.add_parser("build", help="rest-frame bispinor, optionally boosted to a lab velocity")
        build.add_argument("--rest", nargs=3, type=float, default=[0.0, 0.0, 1.0], metavar=("SX", "SY", "SZ"),
                           help="rest-frame spin direction (normalized)")
        build.add_argument("--branch", type=int, choices=(1, -1), default=1)
        build.add_argument("--mass", type=float, default=1.0)
        build.add_argument("--boost", nargs=3, type=float, metavar=("VX", "VY", "VZ"),
                           help="lab velocity in units of c")

        boost = actions.add_parser("boost", help="boost a bispinor to momentum p")
        self._add_input(boost)
        boost.add_argument("--momentum", nargs=3, type=float, required=True, metavar=("PX", "PY", "PZ"))
        boost.add_argument("--mass", type=float)

        bilinears = actions.add_parser("bilinears", help="flagpoles, 4-velocity, 4-spin and the bilinear covariants")
        self._add_input(bilinears)

        residual = actions.add_parser("residual", help="Dirac equation residual (-g^lambda P_lambda - m) Psi")
        self._add_input(residual)
        residual.add_argument("--energy", type=float)
        residual.add_argument("--momentum", nargs=3, type=float, metavar=("PX", "PY", "PZ"))
        residual.add_argument("--mass", type=float)
        residual.add_argument("--branch", type=int, choices=(1, -1))

        hamiltonian = actions.add_parser("hamiltonian", help="H = alpha.p + beta m and (H - E) Psi")
        self._add_input(hamiltonian, required=False)
        hamiltonian.add_argument("--momentum", nargs=3, type=float, metavar=("PX", "PY", "PZ"))
        hamiltonian.add_argument("--mass", type=float)
        hamiltonian.add_argument("--branch", type=int, choices=(1, -1))

    @staticmethod
    def _add_input(parser, required=True):
        source = parser.add_mutually_exclusive_group(required=required)
        source.add_argument("--spinor", nargs=4, type=complex_arg, metavar=("C1", "C2", "C3", "C4"))
        source.add_argument("--input", metavar="FILE", help="report from an earlier dirac command, - for stdin")
        parser.add_argument("--basis", choices=[b.value for b in dirac.Basis], default=dirac.Basis.CHIRAL.value)

    # * ----------------------------------------------------------
    # * Input
    # * ----------------------------------------------------------
    def _load(self, options):
        """(psi, previous report) from --spinor or --input; (None, {}) when neither is given."""
        if options.get("spinor"):
            return dirac.DiracSpinor(options["spinor"], dirac.Basis(options["basis"])), {}
        source = options.get("input")
        if not source:
            return None, {}
        if source == "-":
            text = (options.get("stdin") or sys.stdin).read()
        else:
            try:
                text = Path(source).read_text(encoding="utf-8")
            except OSError as exc:
                raise CommandError(f"cannot read {source}: {exc.strerror}", returncode=EXIT_USAGE) from None
        try:
            previous = loads_report(text)
            components = complex_list(previous["spinor"])
            basis = dirac.Basis(previous.get("basis", dirac.Basis.CHIRAL.value))
        except (ValueError, KeyError, TypeError) as exc:
            raise DomainError(f"input is not a dirac report: {exc}") from None
        logger.debug("loaded bispinor from %s", source)
        return dirac.DiracSpinor(components, basis), previous

    @staticmethod
    def _pick(options, previous, name, default):
        if options.get(name) is not None:
            return options[name]
        return previous.get(name, default)

    # * ----------------------------------------------------------
    # * Actions
    # * ----------------------------------------------------------
    def build_report(self, *args, **options):
        return getattr(self, f"_{options['action']}")(options)

    def _build(self, options):
        spin = _unit(options["rest"], "rest spin direction")
        mass, branch = options["mass"], options["branch"]
        if mass <= 0:
            raise DomainError(f"mass must be positive, got {mass!r}")
        if options["boost"]:
            psi = dirac.from_lab(options["boost"], spin, mass, branch)
        else:
            psi = dirac.from_rest(spin, branch)
        return _state_report(psi, mass, branch)

    def _boost(self, options):
        psi, previous = self._load(options)
        mass = float(self._pick(options, previous, "mass", 1.0))
        branch = int(previous.get("branch", 1))
        return _state_report(dirac.boost(psi, options["momentum"], mass), mass, branch)

    def _bilinears(self, options):
        psi, _ = self._load(options)
        covariants = dirac.bilinears(psi)
        right, left = dirac.flagpoles(psi)
        velocity, spin = orthogonal_pair(psi.phi_R, psi.chi_L)
        rest_spinor = dirac.rest_frame_spinor(psi)
        rest_phi = flagpole(rest_spinor.phi_R).spatial
        return {
            "spinor": psi.components,
            "basis": psi.basis,
            "flagpoles": {"phi_R": right, "chi_L": left, "phi_R_norm": right.norm(), "chi_L_norm": left.norm()},
            "four_velocity": dirac.four_velocity(psi),
            "four_spin": 2 * dirac.four_spin(psi, 1.0, 1.0).as_array(),
            "flagpole_sum": velocity,
            "flagpole_difference": spin,
            "rest_frame_spin": dirac.rest_frame_spin(psi),
            "rest_frame_spin_oracle": rest_phi / float(np.linalg.norm(rest_phi)),
            "scalar": covariants.scalar,
            "pseudoscalar": covariants.pseudoscalar,
            "axial": covariants.axial,
            "tensor": covariants.tensor,
        }

    def _residual(self, options):
        psi, previous = self._load(options)
        mass = float(self._pick(options, previous, "mass", 1.0))
        branch = int(self._pick(options, previous, "branch", 1))
        momentum = np.asarray(self._pick(options, previous, "momentum", [0.0, 0.0, 0.0]), dtype=float)
        energy = self._pick(options, previous, "energy", None)
        if energy is None:
            energy = math.sqrt(float(momentum @ momentum) + mass * mass)
        residual = dirac.dirac_residual(psi, float(energy), momentum, mass, branch)
        return {
            "spinor": psi.components,
            "basis": psi.basis,
            "energy": float(energy),
            "momentum": momentum,
            "mass": mass,
            "branch": branch,
            "residual": residual,
            "residual_norm": float(np.linalg.norm(residual)),
        }

    def _hamiltonian(self, options):
        psi, previous = self._load(options)
        mass = float(self._pick(options, previous, "mass", 1.0))
        branch = int(self._pick(options, previous, "branch", 1))
        momentum = np.asarray(self._pick(options, previous, "momentum", [0.0, 0.0, 0.0]), dtype=float)
        basis = psi.basis if psi is not None else dirac.Basis(options["basis"])
        report = {
            "basis": basis,
            "momentum": momentum,
            "mass": mass,
            "branch": branch,
            "hamiltonian": dirac.hamiltonian(momentum, mass, basis, branch),
            "square_residual": float(np.max(np.abs(dirac.hamiltonian_square_residual(momentum, mass, basis)))),
        }
        if psi is not None:
            residual = dirac.hamiltonian_residual(psi, momentum, mass, branch)
            report.update({"spinor": psi.components, "residual": residual, "residual_norm": float(np.linalg.norm(residual))})
        return report
