import random
from pathlib import Path

import pytest

from lieext import fixtures as fx

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

_acceptance = {}


@pytest.fixture
def rng():
    return random.Random(20001025)


@pytest.fixture(scope="session")
def algebras():
    return {
        "A1": fx.abelian(1, ["z"]),
        "A2": fx.abelian(2, ["x", "y"]),
        "A3": fx.abelian(3),
        "heis3": fx.heis3(),
        "sl2": fx.sl2(),
        "aff2": fx.aff2(),
        "gl2": fx.gl2(),
    }


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    def number(name):
        digits = "".join(c for c in name.split("_")[2] if c.isdigit())
        return int(digits) if digits else 0

    for name, outcome in sorted(_acceptance.items(), key=lambda kv: number(kv[0])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
