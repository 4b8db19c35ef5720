import pytest

from pulso import defaults

_acceptance_outcomes: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def lexicon():
    return defaults.default_lexicon()


@pytest.fixture(scope="session")
def rules():
    return defaults.default_location_rules()


@pytest.fixture(scope="session")
def official():
    return defaults.official_results()


@pytest.fixture(scope="session")
def reference_rows():
    return defaults.load_reference_table()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_outcomes.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one visible pass/fail line per acceptance criterion
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_outcomes:
        label = name.removeprefix("test_").replace("_", " ")
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label}: {verdict}")
