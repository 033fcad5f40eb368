import pytest

from edgepoly.graph import from_edge_list

FIG1_EDGES = [(1, 4), (3, 4), (1, 2), (2, 3), (4, 5), (1, 6), (5, 6)]
FIG1_TYPE_I = (-1, -1, 1, 1, -1, 1)
FIG1_TYPE_II = (-1, 0, 0, 1, -1, 1)

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fig1():
    return from_edge_list(6, FIG1_EDGES)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
