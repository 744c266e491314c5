import time

import pytest

from hyperlap import Interval, sweep

# (number, description, passed, detail) tuples filled by the acceptance tests
CRITERION_RESULTS = []


@pytest.fixture(scope="session")
def full_table():
    """The certified cutoff-1000 sweep on (-1, 1) plus its build time."""
    t0 = time.time()
    table = sweep(Interval(-1.0, 1.0), 1000.0, tol=1e-10, n=400)
    return table, time.time() - t0


@pytest.fixture
def criterion():
    """Recorder that prints one PASS/FAIL line and then asserts."""

    def record(num, desc, ok, detail=""):
        ok = bool(ok)
        CRITERION_RESULTS.append((num, desc, ok, detail))
        suffix = f" ({detail})" if detail else ""
        line = f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {desc}{suffix}"
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, desc, ok, detail in sorted(CRITERION_RESULTS):
        state = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"[criterion {num}] {state}: {desc}{suffix}")
