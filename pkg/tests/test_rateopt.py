from fractions import Fraction as F

import pytest

from ldirc import (
    InvalidInput,
    LdParams,
    SchemeId,
    UnknownVariable,
    allocate,
    check_allocation,
    classify_regime,
    compile_constraints,
    ld_sum_capacity,
    optimize,
)
from ldirc.rateopt import allocation_scale, common_rate

from conftest import grid


def test_compile():
    """ Test compiling a constraint system. """
    cset = compile_constraints(SchemeId.WI1, LdParams(3, 1, 2, 5))
    assert cset.variables == ("l1", "cn", "df1", "df2", "cf", "p")
    assert cset.bounds == {"l1": 5, "cn": 2, "df1": 1, "df2": 2, "cf": 5, "p": 5}
    assert cset.scaled == LdParams(3, 1, 2, 5)
    assert "private-rate" in [cons.tag for cons in cset]
    assert len(cset) == 8
    scaled = compile_constraints(SchemeId.WI1, LdParams(2, 1, 4, 3), 2)
    assert scaled.scaled == LdParams(4, 2, 8, 6)
    with pytest.raises(InvalidInput):
        compile_constraints(SchemeId.WI1, LdParams(3, 1, 2, 5), 0)


def test_check_allocation(wi1_alloc):
    """ Test checking allocations against a system. """
    cset = compile_constraints(SchemeId.WI1, wi1_alloc.params)
    assert check_allocation(cset, wi1_alloc) == []
    assert check_allocation(cset, {"cn": 1, "p": 2}) == []
    bad = check_allocation(cset, {"cn": 1, "p": 3})
    assert "private-rate" in bad
    assert "rx-fits" in bad
    assert check_allocation(cset, {"cn": F(1, 2)}) == ["integral"]
    assert "p-non-negative" in check_allocation(cset, {"p": -1})
    with pytest.raises(UnknownVariable):
        check_allocation(cset, {"cm": 1})


def test_derive():
    """ Test deriving dependent quantities. """
    cset = compile_constraints(SchemeId.II, LdParams(3, 3, 5, 4))
    assert cset.derive({"cm": 3, "df": 1}) == {"cm": 3, "df": 1}
    assert cset.value({"cm": 3, "df": 1}) == 4
    assert cset.violations({"cm": 3, "df": 2}) == ["forward-rate"]
    with pytest.raises(InvalidInput):
        cset.derive({"cm": 3})
    with pytest.raises(UnknownVariable):
        cset.derive({"cm": 3, "df": 1, "p": 0})


def test_all_zero():
    """ Test the all-zero allocation of the schemes without floors. """
    wi1 = compile_constraints(SchemeId.WI1, LdParams(3, 1, 2, 5))
    assert wi1.violations(dict.fromkeys(wi1.variables, 0)) == []
    ii = compile_constraints(SchemeId.II, LdParams(3, 3, 5, 4))
    assert ii.violations({"cm": 0, "df": 0}) == []


@pytest.mark.parametrize(
    "scheme, levels, rate",
    [
        (SchemeId.WI1, (3, 1, 2, 5), 6),
        (SchemeId.II, (3, 3, 5, 4), 4),
        (SchemeId.SI, (1, 2, 5, 4), 6),
        (SchemeId.WI3a, (5, 4, 2, 5), 6),
    ],
)
def test_optimize(scheme, levels, rate):
    """ Test the exhaustive optimum at known points. """
    p = LdParams(*levels)
    result = optimize(compile_constraints(scheme, p))
    assert result.value == rate
    cset = compile_constraints(scheme, p)
    assert check_allocation(cset, result.rates) == []


def test_optimize_ii_rates():
    """ Test the maximizer of the II system. """
    result = optimize(compile_constraints(SchemeId.II, LdParams(3, 3, 5, 4)))
    assert result.rates == {"cm": 3, "df": 1}


def test_common_rate():
    """ Test the rate of interleaved common signals. """
    assert common_rate(4, -1) == 2
    assert common_rate(4, -3) == 1
    assert common_rate(0, -1) == 0
    assert common_rate(3, 2) == F(3, 2)


def test_allocation_scale():
    """ Test the scale of fractional rates. """
    assert allocation_scale({"a": F(1, 2), "b": 1}) == 2
    assert allocation_scale({"a": F(1, 3), "b": F(1, 2)}) == 6
    assert allocation_scale({}) == 1


@pytest.mark.timeout(600)
def test_optimizer_oracle(reduced_level):
    """ Test that the optimum meets the table and the capacity. """
    for p in grid(reduced_level):
        scheme, _ = classify_regime(p)
        alloc = allocate(scheme, p)
        result = optimize(compile_constraints(scheme, p, alloc.scale))
        assert result.value == alloc.sum_rate == ld_sum_capacity(p), p


@pytest.mark.timeout(600)
def test_optimizer_below_capacity(reduced_level):
    """ Test that no optimum of a scheme exceeds the capacity. """
    for p in grid(reduced_level):
        scheme, _ = classify_regime(p)
        if scheme.family == "WI3":
            schemes = (SchemeId.WI3a, SchemeId.WI3b)
        else:
            schemes = (scheme,)
        for variant in schemes:
            result = optimize(compile_constraints(variant, p))
            assert result.value <= ld_sum_capacity(p), (variant, p, result)


def test_wi3_relay_gaps():
    """ Test that the relay gaps of WI-3 never turn negative. """
    p = LdParams(2, 1, 0, 3)
    for variant in (SchemeId.WI3a, SchemeId.WI3b):
        cset = compile_constraints(variant, p)
        assert optimize(cset).value <= ld_sum_capacity(p) == 2
    cset = compile_constraints(SchemeId.WI3a, p)
    rates = dict.fromkeys(cset.variables, 0)
    rates["cn1"] = 1
    assert cset.derive(rates)["l2"] == -1
    assert "l2-non-negative" in cset.violations(rates)


def test_constraint_refs():
    """ Test the equation references of the constraints. """
    cset = compile_constraints(SchemeId.WI1, LdParams(3, 1, 2, 5))
    assert [cons.ref for cons in cset] == [
        f"({num})" for num in range(29, 37)
    ]
    assert cset.ref("private-rate") == "(35)"
    assert cset.describe(["private-rate", "rx-fits"]) == [
        "private-rate (35)",
        "rx-fits (36)",
    ]
    with pytest.raises(KeyError):
        cset.ref("bogus")
    ii = compile_constraints(SchemeId.II, LdParams(3, 3, 5, 4))
    assert ii.ref("forward-rate") == "SchemeII_2"
    wi3 = compile_constraints(SchemeId.WI3a, LdParams(5, 4, 2, 5))
    assert wi3.ref("cross-floor") == "Scheme3Cond6"
    assert wi3.ref("l2-non-negative") == ""
