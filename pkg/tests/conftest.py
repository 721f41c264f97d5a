import pytest

_CRITERIA = {}


@pytest.fixture
def record_criterion():
    def record(num: int, desc: str, ok: bool) -> None:
        _CRITERIA[num] = (ok, desc)
        print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {desc}")
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok, desc = _CRITERIA[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {desc}")
