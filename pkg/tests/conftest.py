from __future__ import annotations

import pytest
from hypothesis import settings

from jetample import bundled
from jetample.formats import parse_surface

settings.register_profile("ci", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("ci")

BL2P2 = """
NAME bl2p2
FLAGS smooth rational
RANK 3
LABELS H E1 E2
GRAM
1 0 0
0 -1 0
0 0 -1
CANONICAL -3 1 1
CURVES
0 1 0 E1
0 0 1 E2
1 -1 -1 L12
POINTS
POINT p SMOOTH
"""

F3 = """
NAME f3
FLAGS smooth rational
RANK 2
LABELS F S
GRAM
0 1
1 -3
CANONICAL -5 -2
CURVES
1 0 F
0 1 S
POINTS
POINT p SMOOTH
"""


@pytest.fixture(scope="session")
def p2():
    return bundled.load_surface("p2").model


@pytest.fixture(scope="session")
def blp2():
    return bundled.load_surface("blp2").model


@pytest.fixture(scope="session")
def k3():
    return bundled.load_surface("k3_pencil").model


@pytest.fixture(scope="session")
def bl2p2():
    return parse_surface(BL2P2, "bl2p2")


@pytest.fixture(scope="session")
def f3():
    return parse_surface(F3, "f3")


@pytest.fixture(scope="session")
def blp2_blowup():
    return bundled.load_blowup("blp2").model


@pytest.fixture(scope="session")
def k3_node():
    return bundled.load_blowup("k3_node").model


@pytest.fixture(scope="session")
def cone_a1():
    return bundled.load_blowup("cone_a1").model
