import math

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def normal():
    from stablelaw import StableParams

    return StableParams(2.0, 1 / math.sqrt(2), 0.0, 0.0)


@pytest.fixture
def cauchy():
    from stablelaw import StableParams

    return StableParams(1.0, 1.0, 0.0, 0.0)


@pytest.fixture
def levy():
    from stablelaw import StableParams

    return StableParams(0.5, 1.0, 1.0, 0.0)


def assert_close(a, b, rtol=1e-12, atol=0.0):
    np.testing.assert_allclose(a, b, rtol=rtol, atol=atol)


_ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record ``(number, title, passed, detail)`` for the acceptance summary."""

    def record(number, title, passed, detail):
        _ACCEPTANCE[number] = (title, bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(
            f"CRITERION {number:2d} {'PASS' if passed else 'FAIL'}: {title} ({detail})"
        )
