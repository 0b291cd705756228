import json
import math
from dataclasses import fields, is_dataclass
from enum import Enum

import numpy as np
from django.core.serializers.json import DjangoJSONEncoder

from ..algebra import FourVector
from ..conf import get_setting

# * ==========================================================
# * Report serialization
# * ==========================================================


def format_complex(z: complex) -> str:
    """
    Lossless text form of a complex number, `re+imi`.

    repr() of a float is the shortest string that parses back to the same double,
    so the round trip keeps all 17 significant digits.

    Example:
        >>> format_complex(complex(0.5, -2.0))
        '0.5-2.0i'
    """
    z = complex(z)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def parse_complex(token: str) -> complex:
    """
    Parse `re` or `re+imi` (also `imi` alone, and `i` for a unit imaginary part).

    Raises:
        ValueError: anything else, including python's own `j` suffix

    Example:
        >>> parse_complex("1+1i")
        (1+1j)
    """
    text = str(token).strip()
    if not text or "j" in text.lower():
        raise ValueError(f"not a complex number: {token!r}")
    if text.endswith("i"):
        text = text[:-1] + "j"
    try:
        return complex(text)
    except ValueError:
        raise ValueError(f"not a complex number: {token!r}") from None


class ReportEncoder(DjangoJSONEncoder):
    """JSON encoder for report values: complex, numpy arrays and scalars, FourVector, enums, dataclasses."""

    def default(self, o):
        if isinstance(o, (complex, np.complexfloating)):
            return format_complex(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, FourVector):
            return [o.t, o.x, o.y, o.z]
        if isinstance(o, Enum):
            return o.value
        if is_dataclass(o) and not isinstance(o, type):
            return {f.name: getattr(o, f.name) for f in fields(o)}
        return super().default(o)


def dumps_report(report: dict, indent: int | None = None) -> str:
    """
    Serialize one report document.

    Usage:
        self.stdout.write(dumps_report({"flagpole": fp, "norm": fp.norm()}))
    """
    if indent is None:
        indent = get_setting("SPINOR_REPORT_INDENT")
    return json.dumps(report, cls=ReportEncoder, indent=indent or None, allow_nan=True)


def loads_report(text: str) -> dict:
    return json.loads(text)


def complex_list(values) -> list:
    """Parse a list of `re+imi` strings (or plain numbers) back into complex numbers."""
    return [parse_complex(v) if isinstance(v, str) else complex(v) for v in values]
