import time
import tracemalloc

import pytest

from reinhardt import build_table

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def table64():
    return build_table(64)


@pytest.fixture(scope="session")
def big_build():
    """Timed, allocation-traced build to n_max=1001 shared across the session."""
    tracemalloc.start()
    started = time.perf_counter()
    table = build_table(1001)
    elapsed = time.perf_counter() - started
    peak = tracemalloc.get_traced_memory()[1]
    tracemalloc.stop()
    return table, elapsed, peak


@pytest.fixture(scope="session")
def big_table(big_build):
    return big_build[0]


@pytest.fixture(scope="session")
def acceptance():
    def record(number: int | str, passed: bool, detail: str) -> None:
        line = f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} - {detail}"
        _ACCEPTANCE_LINES.append(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
