import configparser
import os

import pytest

from ldirc import LdParams, SchemeId, allocate


def get_config():
    """Load config parameters."""
    curdir = os.path.abspath(os.path.dirname(__file__))
    cfg = configparser.ConfigParser()
    cfg.read(os.path.join(curdir, "test.ini"))
    return cfg


def grid(max_level, min_level=0):
    """ Every level tuple up to `max_level` with n_c < n_s. """
    levels = range(min_level, max_level + 1)
    return [
        LdParams(d, c, r, s)
        for d in levels
        for c in levels
        for r in levels
        for s in levels
        if c < s
    ]


@pytest.fixture(scope="module")
def cfg():
    """Get config."""
    return get_config()


@pytest.fixture(scope="module")
def max_level():
    """Largest level of the exhaustive grids."""
    return get_config().getint("GRID", "max_level")


@pytest.fixture(scope="module")
def reduced_level():
    """Largest level of the grids that optimize or simulate."""
    return get_config().getint("GRID", "reduced_level")


@pytest.fixture(scope="module")
def seeds():
    """Message seeds of the simulation sweeps."""
    return [int(val) for val in get_config()["GRID"]["seeds"].split(",")]


@pytest.fixture
def wi1_alloc():
    """ The WI-1 allocation on (3, 1, 2, 5). """
    return allocate(SchemeId.WI1, LdParams(3, 1, 2, 5))


@pytest.fixture
def ii_alloc():
    """ The II allocation on (3, 3, 5, 4). """
    return allocate(SchemeId.II, LdParams(3, 3, 5, 4))
