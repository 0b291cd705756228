"""Shared hypothesis strategies and numeric assertions for the spinors tests."""
import numpy as np
from hypothesis import strategies as st

from ..spinor import Chirality, Spinor

# ?----end imports----

finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=-4 * np.pi, max_value=4 * np.pi, allow_nan=False, allow_infinity=False)
rapidities = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)

vectors3 = st.tuples(finite, finite, finite).map(np.array)

unit_vectors = (
    st.tuples(finite, finite, finite)
    .map(np.array)
    .filter(lambda v: np.linalg.norm(v) > 0.1)
    .map(lambda v: v / np.linalg.norm(v))
)

complexes = st.builds(complex, finite, finite)


@st.composite
def spinors(draw, chirality=Chirality.RIGHT):
    a, b = draw(complexes), draw(complexes)
    # |s|^2 >= 1/4 keeps clear of the zero spinor, whose flagpole carries no direction
    if abs(a) ** 2 + abs(b) ** 2 < 0.25:
        a += 1.0
    return Spinor(a, b, chirality)


def assert_close(actual, expected, atol, msg=None):
    np.testing.assert_allclose(
        np.asarray(actual, dtype=complex), np.asarray(expected, dtype=complex), rtol=0.0, atol=atol, err_msg=msg or ""
    )
