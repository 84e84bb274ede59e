import pytest

from perminvariants.corpus import corpus_group, corpus_groups

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    return corpus_groups()


@pytest.fixture
def group():
    return corpus_group


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
