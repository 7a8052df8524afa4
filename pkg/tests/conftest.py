import pytest

from sdlattice import catalog
from sdlattice.congruence import ConLattice
from sdlattice.sd import is_distributive

# Every congruence lattice built during the run is recorded so the session
# can fail if one of them is not distributive.
CARRIERS = {"count": 0, "bad": []}
_original_init = ConLattice.__init__


def _recording_init(self, lattice, congruences):
    _original_init(self, lattice, congruences)
    CARRIERS["count"] += 1
    if not is_distributive(self.carrier):
        CARRIERS["bad"].append(lattice.name)


ConLattice.__init__ = _recording_init


@pytest.fixture
def N5():
    return catalog.n5()


@pytest.fixture
def M3():
    return catalog.m3()


@pytest.fixture
def B2():
    return catalog.boolean(2)


@pytest.fixture
def chain4():
    return catalog.chain(4)


@pytest.fixture
def chain2():
    return catalog.chain(2)


def pytest_collection_modifyitems(items):
    last = [it for it in items if it.name == "test_criterion_10_con_carriers_distributive"]
    items[:] = [it for it in items if it not in last] + last


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                name = rep.nodeid.split("::")[-1]
                lines.append((name, outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
    terminalreporter.write_line(
        f"congruence lattices built: {CARRIERS['count']}, non-distributive: {len(CARRIERS['bad'])}"
    )


def pytest_sessionfinish(session, exitstatus):
    if CARRIERS["bad"] and exitstatus == 0:
        session.exitstatus = 1
