import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        label = mark.args[0]
        if hasattr(item, "callspec"):
            label += f" [{item.callspec.id}]"
        _ACCEPTANCE.append((label, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label, ok, dt in _ACCEPTANCE:
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({dt:.2f} s)")
    n_ok = sum(ok for _, ok, _ in _ACCEPTANCE)
    tr.write_line(f"{n_ok}/{len(_ACCEPTANCE)} acceptance checks passed")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
