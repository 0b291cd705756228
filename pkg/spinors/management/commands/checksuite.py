# * python manage.py checksuite --suite homomorphism
# * python manage.py checksuite --suite all --seed 7 --cases 200
from django.core.management.base import CommandError

from ...suites import SUITES, run_suite
from ...utils.report_utils import dumps_report
from ..base import EXIT_SUITE, EXIT_USAGE, ReportCommand


class Command(ReportCommand):
    help = "Run seeded property suites and report the worst residual of every check. Exit 3 on any failure."

    def add_arguments(self, parser):
        parser.add_argument("--suite", choices=[*SUITES, "all"], default="all")
        parser.add_argument("--seed", type=int, help="random seed (default SPINOR_SEED)")
        parser.add_argument("--cases", type=int, help="random cases per suite (default SPINOR_SUITE_CASES)")

    def build_report(self, *args, **options):
        if options["cases"] is not None and options["cases"] < 1:
            raise CommandError("--cases must be at least 1", returncode=EXIT_USAGE)
        names = list(SUITES) if options["suite"] == "all" else [options["suite"]]
        results = [run_suite(name, options["seed"], options["cases"]) for name in names]
        return {
            "passed": all(result.passed for result in results),
            "suites": [result.as_dict() for result in results],
        }

    def handle(self, *args, **options):
        # the report is printed even when a suite fails
        report = self.build_report(*args, **options)
        self.stdout.write(dumps_report(report))
        if not report["passed"]:
            failed = [suite["suite"] for suite in report["suites"] if not suite["passed"]]
            raise CommandError(f"property suite failure: {', '.join(failed)}", returncode=EXIT_SUITE)
