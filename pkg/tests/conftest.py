import os

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running checks, enabled with SPLITRANK_SLOW=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SPLITRANK_SLOW"):
        return
    skip = pytest.mark.skip(reason="set SPLITRANK_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
