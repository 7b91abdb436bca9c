import pytest

from swavefilm.units import SODIUM, StackConfiguration

ACCEPTANCE_LINES = []


@pytest.fixture
def sodium():
    return SODIUM


@pytest.fixture
def glass_stack():
    return StackConfiguration(eps1=1.0, eps2=4.0, d_nm=100.0)


@pytest.fixture
def acceptance_report():
    def record(number, title, passed, detail=""):
        line = f"criterion {number:>2} [{'PASS' if passed else 'FAIL'}] {title}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
