import pytest

_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the outcome comes from the test's own result."""
    def record(number, description):
        request.node._criterion = (number, description)
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    info = getattr(item, "_criterion", None)
    if info is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        verdict = "SKIP" if rep.skipped else ("PASS" if rep.passed else "FAIL")
        note = ""
        if rep.skipped and isinstance(rep.longrepr, tuple):
            note = f" ({rep.longrepr[2]})"
        _LINES.append((info[0], f"criterion {info[0]:>2}: {verdict}  {info[1]}{note}"))


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
