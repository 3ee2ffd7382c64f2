import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from transgraph.graph import Graph

DATA = Path(__file__).parent / "data"
FIG2_EDGES = [(1, 2), (1, 4), (2, 3), (2, 5)]


@pytest.fixture
def fig2():
    return Graph(5, FIG2_EDGES)


@pytest.fixture
def k3():
    return Graph(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def p2():
    return Graph(2, [(1, 2)])


@pytest.fixture
def fig2_path():
    return DATA / "fig2.edges"


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def sign_strings(draw, length):
    return "".join(draw(st.lists(st.sampled_from("+-"), min_size=length, max_size=length)))
