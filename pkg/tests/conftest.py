import pytest

from zwcodes.codec import build_code
from zwcodes.residue_field import build_field
from zwcodes.zw_ring import ZwInt

PI29 = ZwInt(-1, 4)
PI71 = ZwInt(7, 2)


@pytest.fixture(scope="session")
def f29():
    f = build_field(PI29)
    f.find_primitive("-w")
    return f


@pytest.fixture(scope="session")
def f71():
    f = build_field(PI71)
    f.find_primitive("+w")
    return f


@pytest.fixture(scope="session")
def codes29(f29):
    return {r: build_code(f29, f29.alpha, r) for r in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def codes71(f71):
    return {r: build_code(f71, f71.alpha, r) for r in (1, 2, 3, 4)}


# one pass/fail line per acceptance criterion, printed after the run

_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, [title, True])
    entry[1] = entry[1] and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}")
