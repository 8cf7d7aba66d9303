import pytest

from ldirc import Bound, BoundSet, LdParams
from ldirc import ld_capacity_ic, ld_sum_capacity, ld_upper_bounds
from ldirc.capacity import BOUND_LABELS

from conftest import grid


@pytest.mark.parametrize(
    "levels, capacity",
    [
        ((4, 2, 3, 5), 7),
        ((3, 3, 5, 4), 4),
        ((2, 1, 0, 3), 2),
        ((3, 1, 2, 5), 6),
        ((1, 2, 5, 4), 6),
        ((6, 2, 3, 4), 10),
        ((5, 4, 2, 5), 6),
        ((2, 1, 4, 3), 5),
        ((10, 5, 1, 7), 12),
    ],
)
def test_sum_capacity(levels, capacity):
    """ Test the sum-capacity at known points. """
    assert ld_sum_capacity(LdParams(*levels)) == capacity


def test_discontinuity():
    """ Test the drop of the capacity when n_c reaches n_d. """
    assert ld_sum_capacity(LdParams(4, 3, 6, 6)) == 9
    assert ld_sum_capacity(LdParams(4, 4, 6, 6)) == 6


def test_upper_bounds():
    """ Test the evaluated upper bounds. """
    bounds = ld_upper_bounds(LdParams(4, 2, 3, 5))
    assert len(bounds) == len(BOUND_LABELS)
    assert [bound.label for bound in bounds] == list(BOUND_LABELS)
    assert bounds.value == 7
    assert bounds.binding == "genie-source-relay"
    assert bounds["cut-set-mac"].value == 8
    assert bounds["cut-set-rx"].value == 8
    assert bounds["genie-cross"].value == 12
    assert not bounds["equal-gains"].applicable
    with pytest.raises(KeyError):
        _ = bounds["missing"]


def test_equal_gains_bound():
    """ Test that the equal-gains bound binds when n_c = n_d. """
    bounds = ld_upper_bounds(LdParams(3, 3, 5, 4))
    assert bounds["equal-gains"].applicable
    assert bounds.value == 4
    assert bounds.binding == "equal-gains"


def test_boundset():
    """ Test BoundSet validation and tie breaking. """
    bset = BoundSet(
        [
            Bound("cut-set-mac", 3, True),
            Bound("genie-relay", 3, True),
            Bound("cut-set-rx", 1, False),
        ]
    )
    assert bset.value == 3
    assert bset.binding == "cut-set-mac"
    assert "binding=cut-set-mac" in repr(bset)
    with pytest.raises(ValueError):
        BoundSet([Bound("cut-set-mac", 3, False)])
    with pytest.raises(ValueError):
        BoundSet([Bound("unknown", 3, True)])


def test_relay_off():
    """ Test the capacity of the channel without the relay. """
    assert ld_capacity_ic(LdParams(2, 1, 0, 3)) == 2
    assert ld_capacity_ic(LdParams(4, 2, 9, 9)) == 4
    assert ld_capacity_ic(LdParams(1, 2, 9, 9)) == 2
    assert ld_capacity_ic(LdParams(3, 3, 0, 0)) == 3


def test_sandwich(max_level):
    """ Test that the upper bounds meet the capacity on the whole grid. """
    for p in grid(max_level):
        assert ld_upper_bounds(p).value == ld_sum_capacity(p), p


def test_relay_never_hurts(max_level):
    """ Test that the capacity is at least the relay-off capacity. """
    for p in grid(max_level):
        assert ld_sum_capacity(p) >= ld_capacity_ic(p), p


def test_bound_refs():
    """ Test the equation references of the LD bounds. """
    bounds = ld_upper_bounds(LdParams(4, 2, 3, 5))
    assert [bound.ref for bound in bounds] == [f"({num})" for num in range(16, 24)]
    assert bounds[bounds.binding].ref == "(23)"
    assert str(bounds["cut-set-mac"]) == "cut-set-mac (17)"
    assert str(Bound("cut-set-rx", 3, True)) == "cut-set-rx"
