from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import polariscope as ps

_ACCEPTANCE_LOG: list[str] = []


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion for the run log."""

    def _record(line: str) -> None:
        _ACCEPTANCE_LOG.append(line)

    return _record


def pytest_terminal_summary(terminalreporter) -> None:
    if _ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LOG:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def basis14() -> ps.FockBasis:
    return ps.build_basis(14)


@pytest.fixture(scope="session")
def default_sweep() -> list[ps.SweepRow]:
    return ps.run_sweep(ps.SweepGrid())
