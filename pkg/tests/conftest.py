import sys

import pytest

from linkdensity import _accel


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


BACKENDS = ["numpy"] + (["numba"] if _accel.NUMBA_AVAILABLE else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
