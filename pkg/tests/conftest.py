import pytest

acceptance_key = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[acceptance_key] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[acceptance_key]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
