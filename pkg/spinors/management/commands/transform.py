# * python manage.py transform 1 0 --rotate 0 0 1 6.283185307179586
# * python manage.py transform 1 0 --boost 0 0 1 0.5 --left
import numpy as np

from ...lorentz import SL2CTransform, induced_lorentz
from ...rotor import so3_from_axis_angle
from ...spinor import Spinor, flagpole, transform
from ..base import ReportCommand, add_chirality_argument, chirality_from, complex_arg


class Command(ReportCommand):
    help = (
        "Rotate or boost a spinor. Prints the transformed spinor, its flagpole and the "
        "induced 4x4 Lorentz matrix. Frame (passive) convention unless --active."
    )

    def add_arguments(self, parser):
        parser.add_argument("a", type=complex_arg)
        parser.add_argument("b", type=complex_arg)
        add_chirality_argument(parser)
        geometry = parser.add_mutually_exclusive_group()
        geometry.add_argument(
            "--rotate", nargs=4, type=float, metavar=("AX", "AY", "AZ", "ANGLE"),
            help="rotation about a unit axis by ANGLE radians",
        )
        geometry.add_argument(
            "--boost", nargs=4, type=float, metavar=("DX", "DY", "DZ", "RAPIDITY"),
            help="boost along a unit direction with the given rapidity",
        )
        parser.add_argument(
            "--active", action="store_true",
            help="move the object instead of the frame (applies the inverse transform)",
        )

    def build_report(self, *args, **options):
        s = Spinor(options["a"], options["b"], chirality_from(options))
        report = {}
        if options["rotate"]:
            *axis, angle = options["rotate"]
            element = SL2CTransform.rotation(axis, angle)
            rotation = so3_from_axis_angle(axis, angle)
            report["rotation"] = rotation.T if options["active"] else rotation
        elif options["boost"]:
            *direction, rapidity = options["boost"]
            element = SL2CTransform.boost(direction, rapidity)
        else:
            element = SL2CTransform.identity()
        if options["active"]:
            element = element.inverse()
        moved = transform(s, element)
        vector = flagpole(moved)
        report.update(
            {
                "chirality": s.chirality,
                "input": [s.a, s.b],
                "transform": element.m,
                "spinor": [moved.a, moved.b],
                "flagpole": vector,
                "norm": vector.norm(),
                "induced": np.asarray(induced_lorentz(element)),
            }
        )
        return report
