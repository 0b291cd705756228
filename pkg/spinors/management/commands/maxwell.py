# * python manage.py maxwell --analytic planewave k=1 h=0.1 --refine 2
# * python manage.py maxwell --fields wave.grid --sources wave.sources
import logging
import math

from django.core.management.base import CommandError

from ... import maxwell
from ...exceptions import DomainError
from ...utils.grid_utils import load_field_grid, load_source_grid, write_field_grid, write_source_grid
from ..base import EXIT_USAGE, ReportCommand

logger = logging.getLogger(__name__)

# ?----end imports----

ANALYTIC = ("planewave", "zero", "static", "corrupted", "coulomb")

# accepted key=value parameters and their defaults
ANALYTIC_PARAMS = {"k": 1.0, "h": 0.1, "courant": 0.5, "nodes": maxwell.MIN_NODES, "amplitude": 0.5}


def parse_analytic(tokens):
    """
    ["planewave", "k=1", "h=0.1"] -> ("planewave", {"k": 1.0, "h": 0.1, ...defaults}).

    Raises:
        CommandError: unknown kind or malformed parameter (usage error)
    """
    kind, *pairs = tokens
    if kind not in ANALYTIC:
        raise CommandError(f"unknown analytic grid {kind!r}, choose from {', '.join(ANALYTIC)}", returncode=EXIT_USAGE)
    params = dict(ANALYTIC_PARAMS)
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or key not in params:
            raise CommandError(f"bad analytic parameter {pair!r}, expected one of {', '.join(params)} as key=value", returncode=EXIT_USAGE)
        try:
            params[key] = int(value) if key == "nodes" else float(value)
        except ValueError:
            raise CommandError(f"bad value in {pair!r}", returncode=EXIT_USAGE) from None
    return kind, params


def analytic_grid(kind, params, h=None):
    """Sampled analytic fields of the given kind at spacing h (defaults to params['h'])."""
    h = params["h"] if h is None else h
    nodes = params["nodes"]
    if kind == "planewave":
        return maxwell.plane_wave(k=params["k"], h=h, courant=params["courant"], nodes=nodes)
    if kind == "corrupted":
        wave = maxwell.plane_wave(k=params["k"], h=h, courant=params["courant"], nodes=nodes)
        return maxwell.corrupt(wave, amplitude=params["amplitude"])
    if kind == "static":
        return maxwell.static_uniform(h=h, nodes=nodes)
    if kind == "coulomb":
        return maxwell.coulomb(h=h, nodes=nodes)
    return maxwell.static_uniform(e_field=(0.0, 0.0, 0.0), h=h, nodes=nodes)


def refinement_table(kind, params, levels):
    """Residual per halving of h with the observed ratio and order log2(ratio)."""
    rows = []
    h = params["h"]
    previous = None
    for _ in range(levels + 1):
        fields = analytic_grid(kind, params, h)
        residual = maxwell.maxwell_residual(fields, maxwell.SourceGrid.zeros_like(fields))
        ratio = previous / residual if previous is not None and residual > 0 else None
        rows.append(
            {
                "h": h,
                "residual": residual,
                "ratio": ratio,
                "order": math.log2(ratio) if ratio else None,
            }
        )
        logger.debug("refinement h=%g residual=%.6e", h, residual)
        previous = residual
        h /= 2.0
    return rows


class Command(ReportCommand):
    help = (
        "Spinor and classical Maxwell residuals of sampled fields, with the decomposition "
        "gap, charge continuity and an optional convergence table."
    )

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--fields", metavar="FILE", help="fields grid file")
        source.add_argument(
            "--analytic", nargs="+", metavar="KIND",
            help=f"generated fields: one of {', '.join(ANALYTIC)} followed by key=value parameters "
                 f"({', '.join(ANALYTIC_PARAMS)})",
        )
        parser.add_argument("--sources", metavar="FILE", help="sources grid file (default: zero sources)")
        parser.add_argument("--refine", type=int, default=0, metavar="N", help="halve h N times and report the order")
        parser.add_argument("--write-fields", metavar="FILE")
        parser.add_argument("--write-sources", metavar="FILE")

    def build_report(self, *args, **options):
        kind = params = None
        if options["analytic"]:
            kind, params = parse_analytic(options["analytic"])
            fields = analytic_grid(kind, params)
        else:
            fields = self._read(options["fields"], load_field_grid)
        if options["sources"]:
            sources = self._read(options["sources"], load_source_grid)
        else:
            sources = maxwell.SourceGrid.zeros_like(fields)
        if options["refine"] < 0:
            raise CommandError("--refine takes a non-negative count", returncode=EXIT_USAGE)
        if options["refine"] and kind is None:
            raise DomainError("--refine needs --analytic fields, a file holds a single spacing")

        self._write(options["write_fields"], write_field_grid, fields)
        self._write(options["write_sources"], write_source_grid, sources)

        report = {
            "dims": list(fields.dims),
            "spacings": [fields.h_t, fields.h],
            "origin": list(fields.origin),
            "spinor_residual": maxwell.maxwell_residual(fields, sources),
            "classical": maxwell.classical_maxwell_residual(fields, sources).as_dict(),
            "equivalence_gap": maxwell.equivalence_gap(fields, sources),
            "continuity_residual": maxwell.continuity_residual(sources),
        }
        if kind is not None:
            report["analytic"] = {"kind": kind, **params}
        if options["refine"]:
            table = refinement_table(kind, params, options["refine"])
            report["refinement"] = table
            report["order"] = table[-1]["order"]
        return report

    @staticmethod
    def _read(path, loader):
        try:
            return loader(path)
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc.strerror}", returncode=EXIT_USAGE) from None

    @staticmethod
    def _write(path, writer, grid):
        if not path:
            return
        try:
            with open(path, "w", encoding="utf-8") as fh:
                writer(fh, grid)
        except OSError as exc:
            raise CommandError(f"cannot write {path}: {exc.strerror}", returncode=EXIT_USAGE) from None
        logger.info("wrote %s", path)
