import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

settings.register_profile("sigmarec", deadline=None)
settings.load_profile("sigmarec")

# Acceptance-criterion outcomes, printed one per line in the terminal
# summary: num -> (description, status, elapsed seconds).
_ACCEPTANCE_RESULTS: dict[int, tuple[str, str, float]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion's pass/fail line for the summary."""

    @contextmanager
    def _criterion(num: int, description: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _ACCEPTANCE_RESULTS[num] = (
                description, "FAIL", time.perf_counter() - start)
            raise
        _ACCEPTANCE_RESULTS[num] = (
            description, "PASS", time.perf_counter() - start)

    return _criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE_RESULTS):
        description, status, elapsed = _ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(
            f"criterion {num}: {status} - {description} ({elapsed:.2f}s)"
        )
