from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from nichols import catalog
from nichols.pbw import PbwSystem
from nichols.weyl import GroupoidObject, positive_roots

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

ACCEPTANCE_LINES: list = []


def pbw_of(braiding):
    return PbwSystem(positive_roots(GroupoidObject.of(braiding)))


@pytest.fixture(scope="session")
def ex1_pbw():
    return pbw_of(catalog.EX1)


@pytest.fixture(scope="session")
def ex2_pbw():
    return pbw_of(catalog.EX2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
