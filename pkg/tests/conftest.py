import json
import pathlib

import pytest
from hypothesis import strategies as st

from linkcat.formats import linking_from_obj
from linkcat.irel import InjRel, VertexSet
from linkcat.linking import Link, Linking

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LOG = []


def load_fixture(name):
    return linking_from_obj(json.loads((FIXTURES / f"{name}.json").read_text()))


@pytest.fixture
def fixture():
    return load_fixture


@pytest.fixture
def criterion():
    def record(number, title, ok, detail=""):
        line = f"AC{number:<2} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LOG.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LOG, key=lambda s: int(s[2:4])):
            terminalreporter.write_line(line)


@st.composite
def linkings(draw, m=None, n=None, max_size=6, max_links=6, max_loops=2):
    if m is None:
        m = draw(st.integers(0, max_size))
    if n is None:
        n = draw(st.integers(0, max_size))
    k = draw(st.integers(0, max_links))
    # -1 means "in no link"
    owner = draw(st.lists(st.integers(-1, k - 1), min_size=m + n, max_size=m + n))
    feet = [([], []) for _ in range(k)]
    for v, o in enumerate(owner):
        if o >= 0:
            feet[o][v >= m].append(v if v < m else v - m)
    links = tuple(Link.of(l, r) for l, r in feet if l or r)
    return Linking(VertexSet(m), VertexSet(n), links, draw(st.integers(0, max_loops)))


@st.composite
def composable_pairs(draw, max_size=6):
    m, n, k = (draw(st.integers(0, max_size)) for _ in range(3))
    return draw(linkings(m, n)), draw(linkings(n, k))


@st.composite
def injrels(draw, max_size=6):
    a = draw(st.integers(0, max_size))
    z = draw(st.integers(0, max_size))
    pre = draw(st.lists(st.integers(-1, a - 1), min_size=z, max_size=z))
    return InjRel(VertexSet(a), VertexSet(z),
                  frozenset((p, zz) for zz, p in enumerate(pre) if p >= 0))
