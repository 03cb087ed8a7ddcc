import pytest

from hyperharmonic import numbers

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test's outcome decides PASS/FAIL."""
    entry = {"label": request.node.name, "detail": ""}
    yield entry
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {entry['label']}  {entry['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fresh_caches():
    numbers.clear_caches()
    yield
    numbers.clear_caches()
