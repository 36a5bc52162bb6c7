from __future__ import annotations

import pytest
from hypothesis import settings

from kenmotsu_lab import catalog, exact
from kenmotsu_lab.frame import geometry

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")

# criterion label -> "PASS"/"FAIL", filled by test_acceptance
ACCEPTANCE: dict[str, str] = {}


class Model:
    def __init__(self, name: str):
        self.doc = catalog.load(name)
        self.m, self.acs = self.doc.to_structures()
        self.geo = geometry(self.m)
        self.n = (self.m.dim - 1) // 2


@pytest.fixture(scope="session")
def k5() -> Model:
    return Model("kenmotsu5")


@pytest.fixture(scope="session")
def h3() -> Model:
    return Model("hyperbolic3")


@pytest.fixture(scope="session")
def flat3() -> Model:
    return Model("flat3")


def e(dim: int, i: int):
    """1-based frame vector."""
    return exact.unit_vector(dim, i - 1)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict in ACCEPTANCE.items():
        terminalreporter.write_line(f"{verdict}  {label}")
