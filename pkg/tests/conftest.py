import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def record_criterion():
    def record(number: int, ok: bool, text: str, seconds: float) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {text}"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return record
