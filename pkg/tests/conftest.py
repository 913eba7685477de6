import json
from pathlib import Path

import pytest

from quatcodes.code_builder import build_crt_code, default_code
from quatcodes.residue_ring import prime_power_modulus, two_prime_modulus

FIXTURES = Path(__file__).parent / "fixtures"

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def derived():
    return json.loads((FIXTURES / "derived_constants.json").read_text())


@pytest.fixture(scope="session")
def sq():
    """H(K1)_{pi^2} for pi = 2 + w, N = 49."""
    return prime_power_modulus((2, 1), 2)


@pytest.fixture(scope="session")
def crt():
    """H(K1)_{pi1*pi2} for pi1 = 2 + w, pi2 = 1 + 2w, N = 91."""
    return two_prime_modulus((2, 1), (1, 2))


@pytest.fixture(scope="session")
def ex1():
    return default_code()


@pytest.fixture(scope="session")
def crt_code():
    return build_crt_code((2, 1), (1, 2), 2)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    verdict = "PASS" if report.passed else "FAIL"
    _acceptance_lines.append(f"{verdict}  {name}  ({report.duration:.2f} s)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
