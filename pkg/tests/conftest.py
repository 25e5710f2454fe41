import pytest

from homnambu.fixtures import a0, aff1, gl11, gl11t, induced_gl11
from homnambu.reps import trace_functional


@pytest.fixture(scope="session")
def g11_pair():
    return gl11()


@pytest.fixture(scope="session")
def g11(g11_pair):
    return g11_pair[0]


@pytest.fixture(scope="session")
def r11(g11_pair):
    return g11_pair[1]


@pytest.fixture(scope="session")
def tau11(r11):
    return trace_functional(r11)


@pytest.fixture(scope="session")
def t11():
    return induced_gl11()


@pytest.fixture(scope="session")
def all_binary():
    """(name, lie, rep) for every shipped well-formed algebra."""
    out = []
    for name, ctor in (("a0", a0), ("aff1", aff1), ("gl11", gl11),
                       ("gl11t2", gl11t)):
        lie, rep = ctor()
        out.append((name, lie, rep))
    return out
