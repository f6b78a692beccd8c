from __future__ import annotations

import pytest
from hypothesis import settings

from drinfeld import GF, compiled_available

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

BACKENDS = ["python"] + (["compiled"] if compiled_available() else [])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        r = RESULTS[name]
        status = "PASS" if r["passed"] else "FAIL"
        terminalreporter.write_line(f"{name} {status} ({r['seconds']:.2f}s, limit {r['limit_seconds']:g}s) {r['detail']}")


@pytest.fixture(params=BACKENDS)
def backend_name(request) -> str:
    return request.param


@pytest.fixture
def F3():
    return GF(3)
