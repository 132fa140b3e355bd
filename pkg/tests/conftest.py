import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hodgeledger.hodge_core import HodgeClass  # noqa: E402


@st.composite
def entries(draw, effective=False, max_mult=3):
    p = draw(st.integers(-2, 4))
    q = draw(st.integers(-2, 4))
    n = p + q + 2 * draw(st.integers(-1, 1))
    lo = 1 if effective else -max_mult
    m = draw(st.integers(lo, max_mult))
    return (n, p, q), m


@st.composite
def classes(draw, effective=False, max_entries=20, max_mult=3):
    rows = draw(st.lists(entries(effective, max_mult), max_size=max_entries))
    table = {}
    for key, m in rows:
        table[key] = table.get(key, 0) + m
    return HodgeClass(table)
