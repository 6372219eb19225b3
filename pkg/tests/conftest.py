import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng():
    return random.Random(20240601)


def rand_center(rng, den=64):
    return (Fraction(rng.randrange(-den, den), den), Fraction(rng.randrange(-den, den), den))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
