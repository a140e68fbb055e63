import numpy as np
import pytest

from wsnsim import Network

_ACCEPTANCE = []


@pytest.fixture
def report():
    """Record one acceptance line; call before asserting so failures are listed too."""

    def _report(criterion: str, passed: bool, detail: str = ""):
        _ACCEPTANCE.append((criterion, bool(passed), detail))
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


def make_network(points, energy=0.2, initial=None, bs=(0.0, 0.0)) -> Network:
    points = np.asarray(points, dtype=float)
    n = len(points)
    energy = np.broadcast_to(np.asarray(energy, dtype=float), (n,)).copy()
    initial = energy.copy() if initial is None else np.broadcast_to(np.asarray(initial, dtype=float), (n,)).copy()
    return Network(points, initial, energy, np.asarray(bs, dtype=float))
