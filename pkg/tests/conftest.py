import pytest

from hyperrings.core import HyperringTable
from hyperrings.corpus import builtin_corpus


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def G(corpus):
    return corpus[0]


@pytest.fixture(scope="session")
def H(corpus):
    return corpus[1]


@pytest.fixture(scope="session")
def GxG(corpus):
    return corpus[2]


@pytest.fixture(scope="session")
def G_mod_06(corpus):
    return corpus[3]


@pytest.fixture(scope="session")
def G_mod_0246(corpus):
    return corpus[4]


@pytest.fixture(scope="session")
def ONE(corpus):
    return corpus[5]


def mutate(ring, name, f_overrides=None, g_overrides=None):
    """Copy of a table with some entries replaced."""
    f = dict(ring.f)
    g = dict(ring.g)
    for key, value in (f_overrides or {}).items():
        f[key] = frozenset(value)
    for key, value in (g_overrides or {}).items():
        g[key] = value
    return HyperringTable(name, ring.m, ring.n, ring.labels, ring.zero,
                          ring.one, f, g, ring.commutative_f,
                          ring.commutative_g)
