"""Shared fixtures and the acceptance-summary reporter."""

import numpy as np
import pytest

# Collected (criterion, passed, detail) tuples from the acceptance tests.
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((name, passed, detail))
    status = "PASS" if passed else "FAIL"
    print(f"[criterion {name}] {status}: {detail}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[criterion {name}] {status}: {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
