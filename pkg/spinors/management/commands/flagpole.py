# * python manage.py flagpole 1 1
# * python manage.py flagpole -- -2+1i 1 --left
from ...spinor import Spinor, flagpole
from ..base import ReportCommand, add_chirality_argument, chirality_from, complex_arg


class Command(ReportCommand):
    help = "Print the null flagpole 4-vector of a spinor (a, b) and its Minkowski norm."

    def add_arguments(self, parser):
        parser.add_argument("a", type=complex_arg, help="first component, re or re+imi")
        parser.add_argument("b", type=complex_arg, help="second component, re or re+imi")
        add_chirality_argument(parser)

    def build_report(self, *args, **options):
        s = Spinor(options["a"], options["b"], chirality_from(options))
        vector = flagpole(s)
        return {
            "spinor": [s.a, s.b],
            "chirality": s.chirality,
            "flagpole": vector,
            "norm": vector.norm(),
        }
