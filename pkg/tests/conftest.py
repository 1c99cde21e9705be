import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def report_line(request):
    """Print a one-line verdict and repeat it in the terminal summary."""
    lines = request.config.stash[_LINES]

    def emit(text: str) -> None:
        lines.append(text)
        print(text)

    return emit


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
