import json
import subprocess
import sys

import pytest

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def run_cli(args, request=None):
    """Run ``python -m midtri`` and return (exit code, raw stdout, decoded JSON)."""
    stdin = request if isinstance(request, str) or request is None else json.dumps(request)
    proc = subprocess.run(
        [sys.executable, "-m", "midtri", *args],
        input=stdin or "",
        capture_output=True,
        text=True,
        timeout=600,
    )
    return proc.returncode, proc.stdout, json.loads(proc.stdout)


@pytest.fixture
def cli():
    return run_cli
