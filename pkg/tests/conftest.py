"""Shared fixtures: a session-wide tally of solve reports and acceptance bookkeeping."""

import time
from contextlib import contextmanager

import pytest

from oscschubert.groebner import SolveReport

# Every SolveReport built in this process is tallied so the parity law can be
# checked over the whole run (acceptance criterion 9).
SOLVED: list = []
_orig_init = SolveReport.__init__


def _tallying_init(self, *args, **kwargs):
    _orig_init(self, *args, **kwargs)
    SOLVED.append(self)


SolveReport.__init__ = _tallying_init

ACCEPTANCE: dict = {}


class AcceptanceLog:
    @contextmanager
    def criterion(self, number: int, title: str):
        start = time.perf_counter()
        notes = []
        try:
            yield notes
        except BaseException as exc:
            ACCEPTANCE[number] = (False, title, f"{type(exc).__name__}: {str(exc)[:200]}", time.perf_counter() - start)
            raise
        ACCEPTANCE[number] = (True, title, "; ".join(notes), time.perf_counter() - start)


@pytest.fixture
def acceptance():
    return AcceptanceLog()


def pytest_collection_modifyitems(session, config, items):
    # the parity criterion audits every solve in the run, so it goes last
    last = [it for it in items if it.get_closest_marker("runs_last")]
    rest = [it for it in items if not it.get_closest_marker("runs_last")]
    items[:] = rest + last


def pytest_configure(config):
    config.addinivalue_line("markers", "runs_last: move the test to the end of the session")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail, secs = ACCEPTANCE[number]
        tr.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'} [{secs:7.2f}s] {title}" + (f" -- {detail}" if detail else ""))
