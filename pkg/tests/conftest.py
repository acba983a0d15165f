import random
import sys

import pytest
from hypothesis import settings

from weyltype.algebra import Signature
from weyltype.numberfield import QQ, NumberField

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

SQRT2 = NumberField([-2, 0, 1])


def w100():
    return Signature.build(1, 0, 0, QQ)


def w010():
    return Signature.build(0, 1, 0, QQ, [[1]])


def w110():
    return Signature.build(1, 1, 0, QQ, [[1]])


def w111():
    return Signature.build(1, 1, 1, QQ, [[1, 0], [0, 1]])


def w011_sqrt2():
    th = SQRT2.theta
    return Signature.build(0, 1, 1, SQRT2, [[1, 1], [th, -th]])


ALL_SIGS = {"w100": w100, "w010": w010, "w110": w110, "w111": w111, "w011_sqrt2": w011_sqrt2}


@pytest.fixture(params=sorted(ALL_SIGS))
def sig(request):
    return ALL_SIGS[request.param]()


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
