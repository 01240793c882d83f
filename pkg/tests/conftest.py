import itertools

from hypothesis import settings, strategies as st

from hgt.core import ThreeGraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def three_graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    triples = list(itertools.combinations(range(n), 3))
    chosen = draw(st.lists(st.sampled_from(triples), unique=True)) if triples else []
    return ThreeGraph(n, chosen)


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
