from __future__ import annotations

import mpmath
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def working_precision():
    """Oracles computed inside tests use the same 128-bit default as the library."""
    with mpmath.mp.workprec(128):
        yield


def mpf_of(q) -> mpmath.mpf:
    """Exact Fraction -> mpf at the current precision (no float round trip)."""
    return mpmath.mpf(q.numerator) / q.denominator


_ACCEPTANCE: dict = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(n, ok, detail)."""
    def record(n: int, ok: bool, detail: str) -> bool:
        _ACCEPTANCE[n] = (bool(ok), detail)
        return bool(ok)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
