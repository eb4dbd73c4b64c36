import pytest

from slzt.cyclelab import run_cycle


@pytest.fixture(scope="session")
def run_n3():
    """The full cycle pipeline for n=3, k=4 (shared: it takes tens of seconds)."""
    return run_cycle(3, 4)


@pytest.fixture(scope="session")
def run_n2():
    return run_cycle(2, 1)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import lines

    out = lines()
    if out:
        terminalreporter.section("acceptance criteria")
        for line in out:
            terminalreporter.write_line(line)
