import random

import pytest
from hypothesis import settings

from ermcodes.galois import BaseField, ExtField

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# γ^4 = γ^2 + γ + 3 over F_5, constant term first
REFERENCE_MODULUS = [2, 4, 4, 0, 1]


@pytest.fixture(scope="session")
def F5():
    return BaseField(5)


@pytest.fixture(scope="session")
def L625(F5):
    return ExtField(F5, 4, REFERENCE_MODULUS)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
