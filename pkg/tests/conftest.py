import os

import pytest

from liegsb import Caps
from liegsb import presentation as pz

HERE = os.path.dirname(os.path.abspath(__file__))
PRES_DIR = os.path.join(os.path.dirname(HERE), "presentations")


def pres_path(name: str) -> str:
    return os.path.join(PRES_DIR, name + ".gsb")


def load(name: str):
    return pz.parse_presentation_file(pres_path(name))


@pytest.fixture(scope="session")
def cohn2():
    return load("cohn2")


@pytest.fixture(scope="session")
def cohn3():
    return load("cohn3")


@pytest.fixture(scope="session")
def cartier():
    return load("cartier")


@pytest.fixture(scope="session")
def shirshov():
    return load("shirshov")


@pytest.fixture(scope="session")
def onerel():
    return load("onerel")


# completions are deterministic, so computing each once is safe


@pytest.fixture(scope="session")
def cohn2_comp(cohn2):
    return cohn2.complete(Caps(2, 4))


@pytest.fixture(scope="session")
def cohn3_comp(cohn3):
    return cohn3.complete(Caps(3, 6))


@pytest.fixture(scope="session")
def cartier_comp(cartier):
    return cartier.complete(Caps(2, 4))


@pytest.fixture(scope="session")
def shirshov_comp22(shirshov):
    return shirshov.complete(Caps(2, 2))


@pytest.fixture(scope="session")
def shirshov_env(shirshov):
    from liegsb.gsb_assoc import envelope

    return envelope(shirshov)


@pytest.fixture(scope="session")
def shirshov_assoc22(shirshov_env):
    return shirshov_env.complete(Caps(2, 2))


@pytest.fixture(scope="session")
def shirshov_extras(shirshov):
    return [
        pz.parse_lie_element(shirshov, s)
        for s in ("y1*x2 - y2*x1", "y1*x3 - y3*x1", "y2*x3 - y3*x2")
    ]


@pytest.fixture(scope="session")
def cartier_s1(cartier):
    rels = [
        "y3*x23 - y1*x12",
        "y3*x13 - y2*x12",
        "y2*x23 - y1*x13",
        "y3*y2*x22 - y3*y1*x11",
        "y3*y1*x12",
        "y3*y2*x12",
        "y3*y2*y1*x11",
        "y2*y1*x13",
    ]
    return [pz.parse_lie_element(cartier, s) for s in rels]
