import pytest

from palcount.sequences import FAMILIES

# independent values from scanning literal prefixes for palindromic suffixes
A_POINT = [1, 1, 2, 2, 2, 3, 2, 3, 3, 3, 4, 3, 3, 4, 3, 4, 4, 4, 5, 3,
           4, 4, 4, 5, 4, 4, 5, 4, 5, 5, 5, 6, 4, 4, 5, 4, 5, 5, 5, 6]
B_POINT = [1, 1, 2, 1, 2, 2, 3, 2, 2, 3, 2, 3, 3, 4, 2, 3, 2, 3, 3, 4,
           3, 3, 4, 3, 4, 4, 5, 2, 3, 3, 4, 3, 3, 4, 3, 4, 4, 5, 3, 4]


@pytest.fixture(params=FAMILIES)
def family(request):
    return request.param


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Call with (passed, detail); the verdict is listed in the terminal summary."""
    def record(passed: bool, detail: str = ""):
        ACCEPTANCE[request.node.name] = (passed, detail)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, detail) in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
