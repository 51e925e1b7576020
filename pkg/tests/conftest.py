import pytest

from retword import library

ACCEPTANCE_RESULTS = []


@pytest.fixture
def fib():
    return library.fibonacci()


@pytest.fixture
def thue_morse():
    return library.thue_morse()


@pytest.fixture(params=["fibonacci", "thue-morse", "tribonacci", "minimal-nonprimitive"])
def named_sub(request):
    return library.NAMED[request.param]()


@pytest.fixture
def criterion():
    """Record a pass/fail line for the acceptance summary."""

    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS.append((number, title, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        mark = "PASS" if passed else "FAIL"
        line = f"[{mark}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
