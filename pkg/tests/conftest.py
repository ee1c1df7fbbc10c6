import math

import pytest

from roegen import IdealIncomeModel, VdWModel


@pytest.fixture
def unit_model():
    return IdealIncomeModel(n=1.0, R=1.0, f=3)


@pytest.fixture
def vdw_model():
    # chosen so that P_c = 1, Q_c = 3, I_c = 1
    return VdWModel(a=27.0, b=1.0, R=8.0)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


E = math.e


SUITE_BUDGET_S = 60.0
_criteria: list[tuple[str, bool, str]] = []
_t0 = [0.0]


def pytest_sessionstart(session):
    import time

    _t0[0] = time.perf_counter()


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert it."""

    def check(label: str, ok: bool, detail: str = ""):
        _criteria.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import time

    if _criteria:
        terminalreporter.section("acceptance criteria")
        for label, ok, detail in _criteria:
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
    elapsed = time.perf_counter() - _t0[0]
    terminalreporter.write_line(f"suite wall time {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)")


def pytest_sessionfinish(session, exitstatus):
    import time

    if session.config.getoption("collectonly"):
        return
    if time.perf_counter() - _t0[0] > SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1
