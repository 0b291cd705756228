import argparse
import logging
import sys

from django.core.management.base import BaseCommand, CommandError, handle_default_options

from ..exceptions import DomainError
from ..spinor import Chirality
from ..utils.report_utils import dumps_report, parse_complex

logger = logging.getLogger(__name__)

# ?----end imports----

# * ==========================================================
# * Exit codes
# * ==========================================================
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_SUITE = 3


def complex_arg(token):
    """argparse `type=` for `re` / `re+imi` tokens."""
    try:
        return parse_complex(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def add_chirality_argument(parser):
    parser.add_argument(
        "--left",
        action="store_true",
        help="treat the spinor as left-handed (default right-handed)",
    )


def chirality_from(options):
    return Chirality.LEFT if options.get("left") else Chirality.RIGHT


class ReportCommand(BaseCommand):
    """
    Base for commands that print one JSON report on stdout.

    Subclasses implement build_report(**options) and return a dict. Exit codes:
    0 success, 1 usage error, 2 domain error, 3 property-suite failure.
    """

    requires_system_checks = []

    def build_report(self, *args, **options):
        raise NotImplementedError("subclasses of ReportCommand must provide a build_report() method")

    def run_from_argv(self, argv):
        """
        Same flow as BaseCommand.run_from_argv, except that argparse usage errors
        exit with 1 instead of argparse's 2 (2 is reserved for domain errors).
        """
        self._called_from_command_line = True
        parser = self.create_parser(argv[0], argv[1])
        try:
            options = parser.parse_args(argv[2:])
        except SystemExit as exc:
            sys.exit(EXIT_USAGE if exc.code == 2 else exc.code)
        cmd_options = vars(options)
        args = cmd_options.pop("args", ())
        handle_default_options(options)
        try:
            self.execute(*args, **cmd_options)
        except CommandError as e:
            if options.traceback:
                raise
            self.stderr.write(f"{e.__class__.__name__}: {e}")
            sys.exit(e.returncode)

    def handle(self, *args, **options):
        try:
            report = self.build_report(*args, **options)
        except DomainError as exc:
            logger.warning("%s: %s", self.__module__.rsplit(".", 1)[-1], exc)
            raise CommandError(str(exc), returncode=EXIT_DOMAIN) from exc
        return dumps_report(report)
