from __future__ import annotations

import pytest

from agcode.io import load_curve


@pytest.fixture(scope="session")
def gf4():
    """y^2 + w*y = x(x-1)(x-w) over GF(4)."""
    return load_curve("gf4-q2-m3")


@pytest.fixture(scope="session")
def gf4_mu1():
    return load_curve("gf4-q2-m3-mu1")


@pytest.fixture(scope="session")
def gf8():
    return load_curve("gf8-q2-m5")


@pytest.fixture(scope="session")
def gf9():
    return load_curve("gf9-q3-m4")


ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    def record(number: int, ok: bool, detail: str, seconds: float) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} ({seconds:.2f}s): {detail}"
        ACCEPTANCE.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
