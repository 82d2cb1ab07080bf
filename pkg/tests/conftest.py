import pytest

_CRITERIA: dict[str, tuple[bool, str]] = {}


class CriterionLog:
    def __init__(self, label: str):
        self.label = label
        _CRITERIA[label] = (False, "stopped before recording a result")

    def record(self, passed: bool, detail: str) -> None:
        _CRITERIA[self.label] = (bool(passed), detail)


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    label = marker.args[0] if marker else request.node.name
    return CriterionLog(label)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0]) if s[0].isdigit() else 99):
        passed, detail = _CRITERIA[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}: {detail}")
