import pytest

from rulehide import parse_basket

D5_TEXT = "A B C\nA B\nA C\nB C\nA B C\n"

_acceptance_lines = []


@pytest.fixture
def d5():
    return parse_basket(D5_TEXT)


@pytest.fixture
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
