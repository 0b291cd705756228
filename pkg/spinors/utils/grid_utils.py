import json
import logging
from pathlib import Path
from typing import IO

import numpy as np

from ..exceptions import GridFormatError
from ..maxwell import FieldGrid, SourceGrid

logger = logging.getLogger(__name__)

# ?-----------------------------end imports-------------------

# * ==========================================================
# * Grid files
# * ==========================================================
# line 1: JSON header {kind, dims [nt, nz, ny, nx], spacings [h_t, h], origin [t0, x0, y0, z0], fields}
# then one whitespace separated record per node, t-major then z, y, x

FIELD_NAMES = ("Ex", "Ey", "Ez", "Bx", "By", "Bz")
SOURCE_NAMES = ("rho", "jx", "jy", "jz")


def _write(stream: IO[str], kind: str, names, dims, h_t, h, origin, columns: np.ndarray) -> None:
    header = {
        "kind": kind,
        "dims": [int(n) for n in dims],
        "spacings": [float(h_t), float(h)],
        "origin": [float(v) for v in origin],
        "fields": list(names),
    }
    stream.write(json.dumps(header) + "\n")
    for row in columns.reshape(-1, len(names)):
        stream.write(" ".join(repr(float(v)) for v in row) + "\n")


def write_field_grid(stream: IO[str], grid: FieldGrid) -> None:
    """
    Serialize a FieldGrid.

    Usage:
        with open("wave.grid", "w") as fh:
            write_field_grid(fh, plane_wave())
    """
    columns = np.concatenate([grid.e, grid.b], axis=-1)
    _write(stream, "fields", FIELD_NAMES, grid.dims, grid.h_t, grid.h, grid.origin, columns)


def write_source_grid(stream: IO[str], grid: SourceGrid) -> None:
    columns = np.concatenate([grid.rho[..., None], grid.j], axis=-1)
    _write(stream, "sources", SOURCE_NAMES, grid.dims, grid.h_t, grid.h, grid.origin, columns)


def _read(stream: IO[str], kind: str, names):
    first = stream.readline()
    if not first:
        raise GridFormatError("empty file, expected a JSON header", line=1)
    try:
        header = json.loads(first)
        if not isinstance(header, dict):
            raise TypeError("header is not a JSON object")
        dims = tuple(int(n) for n in header["dims"])
        h_t, h = (float(v) for v in header["spacings"])
        origin = tuple(float(v) for v in header.get("origin", (0.0, 0.0, 0.0, 0.0)))
        fields = tuple(header["fields"])
    except (ValueError, KeyError, TypeError) as exc:
        raise GridFormatError(f"bad header: {exc}", line=1) from None
    if len(dims) != 4 or len(origin) != 4:
        raise GridFormatError("header needs 4 dims and a 4-component origin", line=1)
    if header.get("kind", kind) != kind or fields != tuple(names):
        raise GridFormatError(f"expected a {kind} grid with fields {' '.join(names)}", line=1)

    count = int(np.prod(dims))
    values = np.empty((count, len(names)))
    line_no = 1
    for index in range(count):
        line_no += 1
        raw = stream.readline()
        if not raw:
            raise GridFormatError(f"file ends after {index} of {count} node records", line=line_no)
        parts = raw.split()
        if len(parts) != len(names):
            raise GridFormatError(f"expected {len(names)} values, found {len(parts)}", line=line_no)
        try:
            values[index] = [float(p) for p in parts]
        except ValueError:
            raise GridFormatError(f"non-numeric value in record {raw.strip()!r}", line=line_no) from None
    for extra in stream:
        line_no += 1
        if extra.strip():
            raise GridFormatError("unexpected data after the last node record", line=line_no)
    logger.debug("read %s grid %s from %d records", kind, dims, count)
    return values.reshape(dims + (len(names),)), h_t, h, origin


def read_field_grid(stream: IO[str]) -> FieldGrid:
    """
    Parse a fields file.

    Raises:
        GridFormatError: with the line number of the first bad record
    """
    values, h_t, h, origin = _read(stream, "fields", FIELD_NAMES)
    return FieldGrid(values[..., :3], values[..., 3:], h_t, h, origin)


def read_source_grid(stream: IO[str]) -> SourceGrid:
    values, h_t, h, origin = _read(stream, "sources", SOURCE_NAMES)
    return SourceGrid(values[..., 0], values[..., 1:], h_t, h, origin)


def load_field_grid(path) -> FieldGrid:
    with Path(path).open(encoding="utf-8") as fh:
        return read_field_grid(fh)


def load_source_grid(path) -> SourceGrid:
    with Path(path).open(encoding="utf-8") as fh:
        return read_source_grid(fh)
