import io
import json

import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given
from hypothesis import strategies as st

from ..algebra import FourVector
from ..exceptions import GridFormatError
from ..maxwell import SourceGrid, corrupt, plane_wave
from ..spinor import Chirality
from ..utils.grid_utils import read_field_grid, read_source_grid, write_field_grid, write_source_grid
from ..utils.report_utils import complex_list, dumps_report, format_complex, loads_report, parse_complex

finite = st.floats(allow_nan=False, allow_infinity=False)


class ComplexTextTests(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_complex(complex(0.5, -2.0)), "0.5-2.0i")
        self.assertEqual(format_complex(3), "3.0+0.0i")

    def test_parse_accepted_forms(self):
        for token, value in (("1+1i", 1 + 1j), ("i", 1j), ("-2", -2), ("2.5i", 2.5j), (" 0.5-2.0i ", 0.5 - 2j)):
            with self.subTest(token=token):
                self.assertEqual(parse_complex(token), value)

    def test_parse_rejects(self):
        for token in ("1+1j", "2J", "", "abc", "1+i+i"):
            with self.subTest(token=token), self.assertRaises(ValueError):
                parse_complex(token)

    @given(finite, finite)
    def test_text_is_lossless(self, re, im):
        self.assertEqual(parse_complex(format_complex(complex(re, im))), complex(re, im))

    def test_complex_list(self):
        self.assertEqual(complex_list(["1.0+2.0i", 3, 0.5]), [1 + 2j, 3 + 0j, 0.5 + 0j])


class ReportTests(SimpleTestCase):
    def test_encodes_library_values(self):
        report = {
            "z": 1 + 2j,
            "array": np.array([1.0, 2.0]),
            "scalar": np.float64(0.25),
            "count": np.int64(3),
            "flag": np.bool_(True),
            "vector": FourVector(1.0, 2.0, 3.0, 4.0),
            "chirality": Chirality.LEFT,
            "spinor": np.array([1j, 0]),
        }
        decoded = loads_report(dumps_report(report))
        self.assertEqual(
            decoded,
            {
                "z": "1.0+2.0i",
                "array": [1.0, 2.0],
                "scalar": 0.25,
                "count": 3,
                "flag": True,
                "vector": [1.0, 2.0, 3.0, 4.0],
                "chirality": "left",
                "spinor": ["0.0+1.0i", "0.0+0.0i"],
            },
        )

    def test_deterministic(self):
        report = {"b": [1 + 1j, 0.1], "a": FourVector(0.1, 0.2, 0.3, 0.4)}
        self.assertEqual(dumps_report(report), dumps_report(dict(report)))

    @override_settings(SPINOR_REPORT_INDENT=0)
    def test_compact_when_indent_is_zero(self):
        self.assertEqual(dumps_report({"a": 1}), '{"a": 1}')

    def test_indent_from_settings(self):
        self.assertIn("\n", dumps_report({"a": 1}))


class GridFileTests(SimpleTestCase):
    def _written(self, grid):
        buffer = io.StringIO()
        write_field_grid(buffer, grid)
        return buffer.getvalue()

    def test_fields_survive_a_file(self):
        grid = corrupt(plane_wave())
        back = read_field_grid(io.StringIO(self._written(grid)))
        np.testing.assert_array_equal(back.e, grid.e)
        np.testing.assert_array_equal(back.b, grid.b)
        self.assertEqual((back.h_t, back.h, back.origin), (grid.h_t, grid.h, grid.origin))

    def test_layout(self):
        lines = self._written(plane_wave()).splitlines()
        header = json.loads(lines[0])
        self.assertEqual(header["kind"], "fields")
        self.assertEqual(header["dims"], [5, 5, 5, 5])
        self.assertEqual(header["fields"], ["Ex", "Ey", "Ez", "Bx", "By", "Bz"])
        self.assertEqual(len(lines), 1 + 5**4)

    def test_record_order_is_t_major(self):
        grid = SourceGrid.from_functions(
            lambda t, x, y, z: 1000 * t + 100 * z + 10 * y + x,
            lambda t, x, y, z: (0.0, 0.0, 0.0),
            (5, 5, 5, 5),
            1.0,
            1.0,
        )
        buffer = io.StringIO()
        write_source_grid(buffer, grid)
        rho = [float(line.split()[0]) for line in buffer.getvalue().splitlines()[1:]]
        self.assertEqual(rho[:3], [0.0, 1.0, 2.0])
        self.assertEqual(rho[5], 10.0)
        self.assertEqual(rho[125], 1000.0)
        back = read_source_grid(io.StringIO(buffer.getvalue()))
        np.testing.assert_array_equal(back.rho, grid.rho)

    def _error_line(self, text):
        with self.assertRaises(GridFormatError) as ctx:
            read_field_grid(io.StringIO(text))
        return ctx.exception.line

    def test_malformed_files_report_the_line(self):
        text = self._written(plane_wave())
        lines = text.splitlines(keepends=True)
        self.assertEqual(self._error_line(""), 1)
        self.assertEqual(self._error_line("not json\n" + "".join(lines[1:])), 1)
        self.assertEqual(self._error_line("".join(lines[:10])), 11)
        bad_value = lines[:4] + ["0 0 x 0 0 0\n"] + lines[5:]
        self.assertEqual(self._error_line("".join(bad_value)), 5)
        short_record = lines[:7] + ["0 0 0\n"] + lines[8:]
        self.assertEqual(self._error_line("".join(short_record)), 8)
        self.assertEqual(self._error_line(text + "\n1 2 3 4 5 6\n"), len(lines) + 2)

    def test_trailing_blank_lines_are_fine(self):
        read_field_grid(io.StringIO(self._written(plane_wave()) + "\n\n"))

    def test_wrong_kind(self):
        buffer = io.StringIO()
        write_source_grid(buffer, SourceGrid.zeros((5, 5, 5, 5), 0.1, 0.1))
        with self.assertRaises(GridFormatError) as ctx:
            read_field_grid(io.StringIO(buffer.getvalue()))
        self.assertIn("line 1", str(ctx.exception))

    def test_too_small_grid_is_rejected(self):
        header = json.dumps({"kind": "fields", "dims": [4, 5, 5, 5], "spacings": [0.1, 0.1], "fields": ["Ex", "Ey", "Ez", "Bx", "By", "Bz"]})
        records = "0 0 0 0 0 0\n" * (4 * 125)
        with self.assertRaises(ValueError):
            read_field_grid(io.StringIO(header + "\n" + records))
