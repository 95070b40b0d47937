import pytest

from williamson_doubling.search import search_williamson


@pytest.fixture(scope="session")
def search_reports():
    """Pruned search reports at every odd order the suites quantify over."""
    return {n: search_williamson(n) for n in (1, 3, 5, 7, 9)}


@pytest.fixture
def n3_quad():
    from williamson_doubling import WilliamsonQuad

    return WilliamsonQuad.from_strings("+++", "+--", "+--", "+--")


_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``criterion(3, ok, "detail")``; the assertion itself stays in the test.
    """

    def record(number: int, ok: bool, detail: str) -> bool:
        _ACCEPTANCE[number] = (bool(ok), detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
