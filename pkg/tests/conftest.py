import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from raga_tonnetz.corpus import load_default_corpus  # noqa: E402
from raga_tonnetz.report import analyze_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return load_default_corpus()


@pytest.fixture(scope="session")
def rows(corpus):
    return analyze_corpus(corpus)


@pytest.fixture(scope="session")
def by_name(rows):
    return {row.raga.name: row for row in rows}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion a test covers")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.passed = report.passed


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in sorted(test_acceptance.RESULTS.items(), key=lambda kv: int(kv[0].split()[0])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {label}")
