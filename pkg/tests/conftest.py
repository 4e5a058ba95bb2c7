from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"

_criteria: dict[int, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption(
        "--update-golden", action="store_true", help="rewrite golden files from current output"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


@pytest.fixture
def golden(request):
    update = request.config.getoption("--update-golden")

    def check(name: str, text: str) -> None:
        path = GOLDEN_DIR / name
        if update or not path.exists():
            path.parent.mkdir(exist_ok=True)
            path.write_text(text)
            if not update:
                pytest.fail(f"golden file {name} was missing and has been written")
        assert text == path.read_text(), f"{name} differs from golden copy"

    return check


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    n, title = marker
    prev = _criteria.get(n, (title, "PASS"))[1]
    status = "FAIL" if report.failed or prev == "FAIL" else "PASS"
    _criteria[n] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")
