import pytest

from conicdsrg.construction import build_context, build_delta
from conicdsrg.digraph import Digraph
from conicdsrg.gf2e import FieldSpec


@pytest.fixture(scope="session")
def ctx8():
    return build_context(FieldSpec.default(3))


@pytest.fixture(scope="session")
def ctx4():
    return build_context(FieldSpec.default(2))


@pytest.fixture(scope="session")
def delta_a(ctx8):
    return build_delta(ctx8, "A")


@pytest.fixture(scope="session")
def delta_b(ctx8):
    return build_delta(ctx8, "B")


@pytest.fixture
def cycle3():
    return Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is not None and call.when == "call":
        outcome = "PASS" if call.excinfo is None else "FAIL"
        _acceptance.append((mark.args[0], outcome, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, name in _acceptance:
        terminalreporter.write_line(f"{outcome}  {label}  ({name})")
