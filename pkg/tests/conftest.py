import pytest

from qdef.qarith import QContext

Q_GRID = (0.3, 0.5, 0.9)

_acceptance_lines = []


@pytest.fixture
def ctx():
    return QContext(0.5)


@pytest.fixture
def acceptance_report():
    def report(number, title, value, tol, extra=""):
        ok = value <= tol
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} (worst {value:.3g} vs {tol:g}{extra})"
        _acceptance_lines.append(line)
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(set(_acceptance_lines), key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
