import pytest

from critmod.corpus import named_graphs
from critmod.multigraph import Multigraph, banana_graph, complete_graph, cycle_graph, path_graph


@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def path3():
    return path_graph(3)


@pytest.fixture
def banana3():
    return banana_graph(3)


@pytest.fixture
def named():
    return named_graphs()


def small_graphs():
    """A handful of loopless and looped graphs used across modules."""
    g = named_graphs()
    return [g["triangle"], g["c4"], g["k4"], g["theta"], g["triple_path"],
            g["triangle_double"], g["triangle_loop"], g["path3"], banana_graph(2),
            banana_graph(3, 1), Multigraph(1, []), Multigraph(1, [(0, 0)]),
            Multigraph(4, [(0, 1), (1, 2), (2, 0), (2, 3), (2, 3)])]


# -- opt-in slow sweeps and the acceptance summary --------------------------------

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow sweep; pass --runslow to run it")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
