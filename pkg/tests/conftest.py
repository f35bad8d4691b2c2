import pytest

from jparticles import bundled_lattice, bundled_lexicon
from jparticles.cooc import load_table1
from jparticles.data import CORPUS, TABLE1, data_path, read_text

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    ok = _criteria.get(number, (title, True))[1]
    if report.failed:
        _criteria[number] = (title, False)
    elif report.when == "call":
        _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def lattice():
    return bundled_lattice()


@pytest.fixture(scope="session")
def lexicon(lattice):
    return bundled_lexicon(lattice)


@pytest.fixture(scope="session")
def table1():
    return load_table1(read_text(data_path(TABLE1)))


@pytest.fixture(scope="session")
def corpus_text():
    return read_text(data_path(CORPUS))
