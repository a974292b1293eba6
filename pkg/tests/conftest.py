"""Shared fixtures and the acceptance-summary reporter."""

from __future__ import annotations

from pathlib import Path

import pytest

from segmagic import Square, parse_square

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# (number, description, passed, elapsed seconds, bound seconds) tuples filled
# in by tests/test_acceptance.py; printed after the run, outside capture.
ACCEPTANCE_RESULTS: list[tuple[int, str, bool, float, float]] = []


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.sq"


def load_fixture(name: str) -> Square:
    return parse_square(fixture_path(name).read_text(encoding="utf-8"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, desc, passed, elapsed, bound in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {number:2d} {status}  {desc}  "
            f"[{elapsed:.2f}s < {bound:g}s]"
        )
