from fractions import Fraction as F

import pytest

from ldirc import GdofParams, InvalidInput, LdParams
from ldirc import gdof, gdof_ic, gdof_upper_bounds, scale_to_ld


def test_create():
    """ Test creating exponents from various inputs. """
    g = GdofParams.create("1/2", 0.1, F(7, 10))
    assert g == (F(1, 2), F(1, 10), F(7, 10))
    assert str(g) == "(alpha=1/2, beta=1/10, gamma=7/10)"
    with pytest.raises(InvalidInput):
        GdofParams.create("-1/2", 1, 1)
    with pytest.raises(InvalidInput):
        GdofParams.create("x", 1, 1)


def test_gdof_values():
    """ Test the GDoF at known points. """
    assert gdof(GdofParams.create(F(3, 2), 2, 3)) == F(7, 2)
    assert gdof(GdofParams.create(2, 2, 3)) == 3
    assert gdof(GdofParams.create("1/2", "1/10", "7/10")) == F(6, 5)
    assert gdof(GdofParams.create(1, 2, 3)) == 2


def test_gdof_ic():
    """ Test the W curve of the interference channel. """
    assert gdof_ic(0) == 2
    assert gdof_ic("1/2") == 1
    assert gdof_ic("2/3") == F(4, 3)
    assert gdof_ic(1) == 1
    assert gdof_ic(3) == 2
    with pytest.raises(InvalidInput):
        gdof_ic(-1)


def test_non_monotone():
    """ Test that the GDoF can drop as the interference grows. """
    beta, gamma = F(2), F(3)
    assert gdof(GdofParams(F(3, 2), beta, gamma)) == F(7, 2)
    assert gdof(GdofParams(F(2), beta, gamma)) == 3


def test_relay_useless_below():
    """ Test that a weak relay does not help for small alpha. """
    for k in range(4):
        alpha = F(k, 10)
        g = GdofParams(alpha, F(1, 10), F(7, 10))
        assert gdof(g) == gdof_ic(alpha)


def test_slope():
    """ Test the slope of -1 over (0, 2/3) with beta = gamma = 0.7. """
    for k in range(1, 8):
        alpha = F(k, 12)
        g = GdofParams(alpha, F(7, 10), F(7, 10))
        assert gdof(g) == 2 - alpha
        assert gdof(g) > gdof_ic(alpha)


def test_upper_bounds():
    """ Test the GDoF upper bounds. """
    bounds = gdof_upper_bounds(GdofParams.create("1/2", "1/10", "7/10"))
    assert bounds.value == F(6, 5)
    assert bounds.binding == "genie-relay-cross"
    tie = gdof_upper_bounds(GdofParams.create("3/2", 2, 3))
    assert tie.value == F(7, 2)
    assert tie["genie-relay"].value == F(7, 2)
    assert tie.binding == "cut-set-mac"
    assert not tie["genie-relay-cross"].applicable
    assert not tie["equal-gains"].applicable


@pytest.mark.timeout(300)
def test_sandwich():
    """ Test that the GDoF meets its upper bounds on the twelfths grid. """
    twelfths = [F(k, 12) for k in range(0, 49)]
    for alpha in twelfths[:37]:
        if alpha == 1:
            continue
        for beta in twelfths[:37]:
            for gamma in (val for val in twelfths if val > alpha):
                g = GdofParams(alpha, beta, gamma)
                bounds = gdof_upper_bounds(g)
                assert gdof(g) == bounds.value == bounds[bounds.binding].value, g


def test_irc_beats_ic():
    """ Test that the relay never reduces the GDoF. """
    quarters = [F(k, 4) for k in range(0, 13)]
    for alpha in quarters:
        for beta in quarters:
            for gamma in (val for val in quarters if val > alpha):
                assert gdof(GdofParams(alpha, beta, gamma)) >= gdof_ic(alpha)


def test_scale_to_ld():
    """ Test mapping exponents to LD levels. """
    g = GdofParams.create("1/2", "1/10", "7/10")
    assert scale_to_ld(g, 10) == LdParams(10, 5, 1, 7)
    assert scale_to_ld(g, 3) == LdParams(3, 1, 0, 2)
    with pytest.raises(InvalidInput):
        scale_to_ld(g, 0)


def test_bound_refs():
    """ Test the equation references of the GDoF bounds. """
    bounds = gdof_upper_bounds(GdofParams.create("1/2", "1/10", "7/10"))
    assert [bound.ref for bound in bounds] == [f"({num})" for num in range(29, 37)]
    assert str(bounds["genie-relay-cross"]) == "genie-relay-cross (34)"
