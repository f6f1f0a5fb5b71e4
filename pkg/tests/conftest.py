import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, name): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    cid, name = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        prev = _CRITERIA.get(cid, (name, True))[1]
        _CRITERIA[cid] = (name, prev and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_CRITERIA):
        name, ok = _CRITERIA[cid]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {cid:>2}: {name}")
