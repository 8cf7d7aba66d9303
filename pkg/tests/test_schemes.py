from fractions import Fraction as F

import pytest

from ldirc import (
    InvalidInput,
    LayoutOverflow,
    LdParams,
    NoMatchingColumn,
    OutOfScope,
    SchemeId,
    allocate,
    build_layouts,
    check_allocation,
    classify_regime,
    compile_constraints,
    ld_sum_capacity,
    scheme_sum_rate,
)
from ldirc.schemes import class_rates, find_column
from ldirc.schemes.regime import _warn_overlap
from ldirc.schemes.layout import common_code

from conftest import grid

EXAMPLES = [
    (SchemeId.WI1, (3, 1, 2, 5), 6),
    (SchemeId.WI1, (2, 1, 4, 3), 5),
    (SchemeId.WI2, (6, 2, 3, 4), 10),
    (SchemeId.WI3a, (5, 4, 2, 5), 6),
    (SchemeId.SI, (1, 2, 5, 4), 6),
    (SchemeId.II, (3, 3, 5, 4), 4),
]


def test_scheme_id():
    """ Test parsing scheme names. """
    assert SchemeId.parse("WI1") == SchemeId.WI1
    assert SchemeId.parse("wi-3a") == SchemeId.WI3a
    assert SchemeId.parse("Wi_3B") == SchemeId.WI3b
    assert SchemeId.parse("ii") == SchemeId.II
    assert SchemeId.WI3b.family == "WI3"
    assert SchemeId.SI.family == "SI"
    assert str(SchemeId.WI2) == "WI2"
    with pytest.raises(InvalidInput):
        SchemeId.parse("WI4")


@pytest.mark.parametrize("scheme, levels, rate", EXAMPLES)
def test_classify(scheme, levels, rate):
    """ Test picking the scheme of a channel. """
    found, tag = classify_regime(LdParams(*levels))
    assert found == scheme
    assert tag


def test_classify_out_of_scope():
    """ Test channels without a scheme. """
    with pytest.raises(OutOfScope):
        classify_regime(LdParams(2, 3, 1, 3))
    with pytest.raises(OutOfScope):
        allocate(SchemeId.WI1, LdParams(4, 2, 3, 2))


def test_find_column():
    """ Test looking up columns of a given family. """
    p = LdParams(3, 1, 2, 5)
    column = find_column(p)
    assert column.family == "WI1"
    assert column.tag == "n_c<=n_r<=n_d<=n_s"
    with pytest.raises(NoMatchingColumn):
        find_column(p, "SI")
    assert find_column(LdParams(5, 4, 2, 5)).tag == "n_s<min{n_r+n_d,3n_c-n_d}"


@pytest.mark.parametrize("scheme, levels, rate", EXAMPLES)
def test_allocation(scheme, levels, rate):
    """ Test that table allocations satisfy their constraints. """
    p = LdParams(*levels)
    alloc = allocate(scheme, p)
    assert alloc.sum_rate == rate
    assert scheme_sum_rate(scheme, p) == rate
    assert ld_sum_capacity(p) == rate
    cset = compile_constraints(scheme, p, alloc.scale)
    assert check_allocation(cset, alloc) == []


def test_allocation_values():
    """ Test the rates of a few table columns. """
    wi1 = allocate(SchemeId.WI1, LdParams(3, 1, 2, 5))
    assert wi1.rates["cn"] == 1
    assert wi1.rates["p"] == 2
    assert wi1.per_user_rate == 3
    assert wi1.users == 2
    assert wi1.scale == 1
    half = allocate(SchemeId.WI1, LdParams(2, 1, 4, 3))
    assert half.rates["df1"] == F(1, 2)
    assert half.classes == {"cn": 1, "df1": F(1, 2), "df2": 0, "cf": 0, "p": 1}
    assert half.scale == 2
    wi3 = allocate(SchemeId.WI3a, LdParams(5, 4, 2, 5))
    assert wi3.rates["lcm1"] == 4
    assert wi3.rates["p1"] == 1
    assert wi3.classes["cm1"] == 2
    ii = allocate(SchemeId.II, LdParams(3, 3, 5, 4))
    assert ii.rates == {"cm": 3, "df": 1}
    assert ii.users == 1
    assert ii.sum_rate == 4
    assert "II" in str(ii)


def test_class_rates_si():
    """ Test the per-class rates of SI. """
    p = LdParams(1, 2, 5, 4)
    alloc = allocate(SchemeId.SI, p)
    assert alloc.rates["df1"] == 1
    classes = class_rates(SchemeId.SI, p, alloc.rates)
    assert classes["cn"] == 2
    assert classes["cm1"] == 0
    assert sum(classes.values()) == 3


def test_wrong_scheme():
    """ Test allocating with a scheme that does not cover the channel. """
    with pytest.raises(InvalidInput):
        allocate(SchemeId.SI, LdParams(3, 1, 2, 5))
    with pytest.raises(InvalidInput):
        scheme_sum_rate(SchemeId.WI3b, LdParams(5, 4, 2, 5))


def test_tables_on_grid(max_level):
    """ Test that the scheme sum-rates meet the capacity on the grid. """
    for p in grid(max_level):
        scheme, _ = classify_regime(p)
        assert scheme_sum_rate(scheme, p) == ld_sum_capacity(p), p


def test_allocations_on_grid(reduced_level):
    """ Test every table allocation against its constraints. """
    for p in grid(reduced_level):
        scheme, _ = classify_regime(p)
        alloc = allocate(scheme, p)
        cset = compile_constraints(scheme, p, alloc.scale)
        assert check_allocation(cset, alloc) == [], (p, alloc)
        assert alloc.sum_rate == scheme_sum_rate(scheme, p), (p, alloc)


def test_layout_wi1(wi1_alloc):
    """ Test the WI-1 layout of Tx1 and the relay. """
    layouts = build_layouts(SchemeId.WI1, wi1_alloc.params, wi1_alloc)
    assert layouts.q == 5
    assert [(seg.label, seg.length) for seg in layouts.tx1] == [
        ("l1", 0),
        ("cn1+df1", 0),
        ("cn2", 1),
        ("cf", 0),
        ("p", 2),
        ("cn", 1),
        ("df2", 0),
        ("s", 1),
    ]
    assert layouts.tx2 == layouts.tx1
    assert layouts.tx1[2].offsets == (-1,)
    assert layouts.tx1[5].offsets == (0,)
    (relay,) = layouts.relay
    assert sum(seg.length for seg in relay) == 5
    assert relay[-2].label == "cn"
    assert relay[-2].piece.cls == "cn"
    assert relay[-3] == ("pad-cn", 1, None)
    assert wi1_alloc.lengths == {"cn2": 1, "p": 2, "cn": 1}
    assert wi1_alloc.paddings["s"] == 1


def test_layout_ii(ii_alloc):
    """ Test the II layout with a single active user. """
    layouts = build_layouts(SchemeId.II, ii_alloc.params, ii_alloc)
    assert layouts.users == (1,)
    assert [(seg.label, seg.length) for seg in layouts.tx1] == [
        ("cm", 3),
        ("df", 1),
        ("s", 1),
    ]
    assert [(seg.label, seg.length) for seg in layouts.tx2] == [("s", 5)]
    (relay,) = layouts.relay
    assert [(seg.label, seg.length) for seg in relay] == [("df", 1), ("r", 4)]
    assert relay[0].piece.mode == "stack"


def test_layout_scaled():
    """ Test that half-integer allocations are laid out at double scale. """
    alloc = allocate(SchemeId.WI1, LdParams(2, 1, 4, 3))
    layouts = build_layouts(SchemeId.WI1, alloc.params, alloc)
    assert layouts.scale == 2
    assert layouts.q == 8
    assert sum(seg.length for seg in layouts.tx1) == 8
    for layer in layouts.relay:
        assert sum(seg.length for seg in layer) == 8


def test_layout_mismatch(wi1_alloc):
    """ Test building a layout for the wrong channel. """
    with pytest.raises(InvalidInput):
        build_layouts(SchemeId.WI1, LdParams(3, 1, 2, 4), wi1_alloc)
    with pytest.raises(InvalidInput):
        build_layouts(SchemeId.WI2, wi1_alloc.params, wi1_alloc)


def test_common_code():
    """ Test the level masks of common messages. """
    assert common_code(4, 0, 1) == ()
    assert common_code(4, 2, 1) == (0b1, 0b100)
    assert common_code(6, 2, 2) == (0b1, 0b10)
    with pytest.raises(LayoutOverflow):
        common_code(4, 3, 2)
    with pytest.raises(LayoutOverflow):
        common_code(4, 1, 0)


def test_wi3_cross_floor(reduced_level):
    """ Test the cross levels of WI-3 allocations without cn1 bits. """
    assert classify_regime(LdParams(3, 1, 0, 2)) == (SchemeId.WI3a, "n_s<=n_d-n_c")
    points = [
        p
        for p in grid(reduced_level)
        if p.n_s > p.n_c and classify_regime(p)[1] == "n_s<=n_d-n_c"
    ]
    assert LdParams(3, 1, 0, 2) in points
    for p in points:
        alloc = allocate(SchemeId.WI3a, p)
        assert alloc.rates["cn1"] == 0
        cset = compile_constraints(SchemeId.WI3a, p, alloc.scale)
        assert check_allocation(cset, alloc) == [], (p, alloc)


def test_overlap_warning_once(caplog, reduced_level):
    """ Test that overlapping tables are reported once per point. """
    _warn_overlap.cache_clear()
    for p in grid(reduced_level):
        if p.n_s > p.n_c:
            find_column(p)
            find_column(p)
    messages = [rec.getMessage() for rec in caplog.records]
    assert len(messages) == len(set(messages))
    caplog.clear()
    _warn_overlap.cache_clear()
    p = LdParams(3, 1, 2, 5)
    _warn_overlap(p, "WI1", ("WI1_1", "WI1_2"), "WI1_1")
    _warn_overlap(p, "WI1", ("WI1_1", "WI1_2"), "WI1_1")
    assert len(caplog.records) == 1
    assert "Several WI1 tables match" in caplog.records[0].getMessage()
