"""Records one line per acceptance criterion and prints them at the end
of the run, whether or not the suite is green."""

from contextlib import contextmanager

ACCEPTANCE_LINES = []


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"criterion {number:2d} ({name}): FAIL")
        raise
    ACCEPTANCE_LINES.append(f"criterion {number:2d} ({name}): PASS")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
