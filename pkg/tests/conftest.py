import subprocess
import sys

import pytest

ACCEPTANCE_LINES: list[str] = []


def run_cli(*args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "kochanski", *args]
    return subprocess.run(cmd, capture_output=True, text=True)


@pytest.fixture
def cli():
    return run_cli


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
