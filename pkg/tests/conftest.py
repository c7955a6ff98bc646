"""Collects one verdict per acceptance criterion and prints them at the end."""

import pytest

VERDICTS: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    VERDICTS[number] = (title, bool(ok), detail)
    print(f"criterion {number:02d} {'PASS' if ok else 'FAIL'}: {title}" + (f" [{detail}]" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(VERDICTS):
        title, ok, detail = VERDICTS[number]
        line = f"criterion {number:02d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def verdict():
    return record
