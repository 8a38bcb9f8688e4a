import contextlib

import pytest

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@contextlib.contextmanager
def criterion(number: int, title: str):
    """Record the outcome of one acceptance criterion; failures still raise."""
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE[number] = (title, False, f"{type(exc).__name__}: {exc}".splitlines()[0])
        raise
    ACCEPTANCE[number] = (title, True, "")


@pytest.fixture
def accept():
    return criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, why = ACCEPTANCE[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if why:
            line += f"  ({why[:120]})"
        terminalreporter.write_line(line)
