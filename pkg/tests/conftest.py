"""Shared fixtures and the acceptance summary printer."""

import pytest

from cayvol.field import PrimeField
from cayvol.group import build

# criterion number -> (passed, title, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def gf5():
    return PrimeField(5)


@pytest.fixture
def gf13():
    return PrimeField(13)


@pytest.fixture
def s3():
    return build("symmetric:3")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, title, detail = ACCEPTANCE_RESULTS[n]
        line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {title}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
