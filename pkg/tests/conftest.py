import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_SUITE_BUDGET_S = 30.0


def pytest_configure(config):
    config._suite_start = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._suite_start
    session.config._suite_elapsed = elapsed
    if elapsed >= _SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = getattr(config, "_suite_elapsed", None)
    if elapsed is None:
        elapsed = time.perf_counter() - config._suite_start
    verdict = "PASS" if elapsed < _SUITE_BUDGET_S else "FAIL"
    terminalreporter.write_line(
        f"[criterion 9, wall clock] {verdict}: suite took {elapsed:.1f}s "
        f"(budget {_SUITE_BUDGET_S:.0f}s)"
    )
