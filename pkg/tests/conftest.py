import os

import hypothesis
import hypothesis.strategies as st
import pytest

from pairdom.gen import tree_of_cliques

hypothesis.settings.register_profile("ci", max_examples=300, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=30, deadline=None)
hypothesis.settings.load_profile(os.environ.get("PAIRDOM_HYPOTHESIS_PROFILE", "ci"))


@st.composite
def block_graphs(draw, max_n=10, max_size=5):
    """Random tree of cliques with at most ``max_n`` vertices."""
    first = draw(st.integers(2, min(max_size, max_n)))
    sizes, attach = [first], []
    n = first
    while n < max_n and draw(st.booleans()):
        s = draw(st.integers(2, min(max_size, max_n - n + 1)))
        attach.append(draw(st.integers(0, n - 1)))
        sizes.append(s)
        n += s - 1
    return tree_of_cliques(sizes, attach)


@pytest.fixture
def p6():
    from pairdom.gen import path

    return path(6)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
