"""
Scheme identifiers, rate allocation columns and regime classification.

Every transmission scheme comes with one or more tables. A table column
holds the condition under which it applies together with the rate
formulas and the closed-form sum-rate it achieves.
"""
import logging
from enum import IntEnum
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Tuple

from ..errors import InvalidInput, NoMatchingColumn, OutOfScope
from ..ldmodel import LdParams, Regime
from ..utils import pos

logger = logging.getLogger("ldirc.schemes")

F = Fraction
HALF = Fraction(1, 2)

Rates = Dict[str, Fraction]


class SchemeId(IntEnum):
    """The achievability schemes."""

    WI1 = 1
    WI2 = 2
    WI3a = 3
    WI3b = 4
    SI = 5
    II = 6

    @property
    def family(self) -> str:
        """Table family: the WI-3 variants share their tables."""
        return "WI3" if self in (SchemeId.WI3a, SchemeId.WI3b) else self.name

    @classmethod
    def parse(cls, name: str) -> "SchemeId":
        """
        Look up a scheme by a name like ``"WI1"``, ``"wi-3a"`` or ``"II"``.

        :raises InvalidInput: for an unknown name.
        """
        key = name.replace("-", "").replace("_", "").upper()
        for member in cls:
            if member.name.upper() == key:
                return member
        raise InvalidInput(f"Unknown scheme: {name!r}.")

    def __str__(self) -> str:
        return self.name


#: Free variables of every table family, in table order.
VARIABLES = {
    "WI1": ("l1", "cn", "df1", "df2", "cf", "p"),
    "WI2": ("cm", "cn", "cf", "p1", "p2", "l1"),
    "WI3": ("lcm1", "cm2", "cn1", "cn2", "cn3", "p1", "p2", "l1u", "l1d"),
    "SI": ("lcm1", "cm2", "cf1", "cf2", "df1", "df2", "cn2", "l1"),
    "II": ("cm", "df"),
}

Guard = Callable[[int, int, int, int], bool]
RateFn = Callable[[int, int, int, int], Rates]
SumFn = Callable[[int, int, int, int], Fraction]


class Column(NamedTuple):
    """A single rate allocation column."""

    family: str
    table: str
    tag: str
    guard: Guard
    rates: RateFn
    sum_rate: SumFn


def _rates(family: str, **values: object) -> Rates:
    out = {name: F(0) for name in VARIABLES[family]}
    for name, val in values.items():
        if name not in out:
            raise KeyError(name)
        out[name] = F(val)  # type: ignore[arg-type]
    return out


# Scheme WI-1.


def _wi1_col1(d: int, c: int, r: int, s: int) -> Rates:
    p = d - c
    df2 = F(pos(s - d - c), 2)
    cf = F(pos(pos(c + d - s) - 2 * pos(d + c - r)))
    cn = (s - cf - p - 2 * df2) / 2
    df1 = min(cn, r - d - cf - 2 * df2) / 2
    return _rates("WI1", cn=cn, df1=df1, df2=df2, cf=cf, p=p)


def _wi1_col2(d: int, c: int, r: int, s: int) -> Rates:
    cf = F(min(2 * c, r - d + c), 2)
    return _rates("WI1", l1=pos(cf - (r - d)), cf=cf, p=d - c)


def _wi1_col3(d: int, c: int, r: int, s: int) -> Rates:
    return _rates(
        "WI1",
        cn=F(min(2 * c, max(s + c - r, 2 * s - 2 * d)), 2),
        df1=F(pos(r - d - abs(s - d - c)), 2),
        df2=F(min(pos(s - d - c), r - d), 2),
        cf=min(pos(d + c - s), r - d),
        p=d - c,
    )


def _wi1_col4(d: int, c: int, r: int, s: int) -> Rates:
    return _rates("WI1", cn=F(min(2 * c, s + c - d), 2), p=d - c)


WI1_COLUMNS = [
    Column(
        "WI1",
        "WI-1",
        "n_c<n_d<=n_s<=n_r",
        lambda d, c, r, s: c < d <= s <= r,
        _wi1_col1,
        lambda d, c, r, s: F(min(s + d, r + s - c)),
    ),
    Column(
        "WI1",
        "WI-1",
        "n_c<=n_s<=n_d<=n_r",
        lambda d, c, r, s: c <= s <= d <= r,
        _wi1_col2,
        lambda d, c, r, s: F(min(2 * d, r + d - c)),
    ),
    Column(
        "WI1",
        "WI-1",
        "n_c<n_d<=n_r<=n_s",
        lambda d, c, r, s: c < d <= r <= s,
        _wi1_col3,
        lambda d, c, r, s: F(min(r + d, r + s - c)),
    ),
    Column(
        "WI1",
        "WI-1",
        "n_c<=n_r<=n_d<=n_s",
        lambda d, c, r, s: c <= r <= d <= s,
        _wi1_col4,
        lambda d, c, r, s: F(min(2 * d, s + d - c)),
    ),
]


# Scheme WI-2.


def _wi2(
    d: int, cm: Fraction, cn: Fraction, cf: Fraction, p1: Fraction, p2: Fraction
) -> Rates:
    l1 = d - 2 * cm - 2 * cn - cf - p1 - p2
    return _rates("WI2", cm=cm, cn=cn, cf=cf, p1=p1, p2=p2, l1=l1)


def _wi2_sum(d: int, c: int, r: int, s: int) -> Fraction:
    return F(min(2 * d - c, 2 * max(r + s - c, d - c)))


def _wi2_regime_a(d: int, c: int, r: int, s: int) -> bool:
    return c <= s <= r <= d


def _wi2_regime_b(d: int, c: int, r: int, s: int) -> bool:
    return c <= r <= s and s <= d - HALF * c


WI2_COLUMNS = [
    Column(
        "WI2",
        "WI-2 (n_c<=n_s<=n_r<=n_d)",
        "n_r+n_s<=n_d",
        lambda d, c, r, s: _wi2_regime_a(d, c, r, s) and r + s <= d,
        lambda d, c, r, s: _wi2(d, F(0), F(0), F(0), F(0), F(d - c)),
        _wi2_sum,
    ),
    Column(
        "WI2",
        "WI-2 (n_c<=n_s<=n_r<=n_d)",
        "n_d<n_r+n_s<=n_d+n_c/2",
        lambda d, c, r, s: _wi2_regime_a(d, c, r, s) and d < r + s <= d + HALF * c,
        lambda d, c, r, s: _wi2(
            d,
            F(0),
            F(s - max(c, d - r)),
            F(r - d + s),
            F(max(c, d - r) - c),
            F(d - s),
        ),
        _wi2_sum,
    ),
    Column(
        "WI2",
        "WI-2 (n_c<=n_s<=n_r<=n_d)",
        "n_d<min{n_r+n_s-n_c/2,3n_c/2}",
        lambda d, c, r, s: _wi2_regime_a(d, c, r, s)
        and d < min(r + s - HALF * c, 3 * HALF * c),
        lambda d, c, r, s: _wi2(d, HALF * c, F(0), F(0), F(s - c), F(d - s)),
        _wi2_sum,
    ),
    Column(
        "WI2",
        "WI-2 (n_c<=n_s<=n_r<=n_d)",
        "3n_c/2<=n_d<n_r+n_s-n_c/2",
        lambda d, c, r, s: _wi2_regime_a(d, c, r, s)
        and 3 * HALF * c <= d < r + s - HALF * c,
        lambda d, c, r, s: _wi2(
            d,
            F(0),
            s - c - pos(s - 3 * HALF * c),
            HALF * c,
            pos(s - 3 * HALF * c),
            F(d - s),
        ),
        _wi2_sum,
    ),
    Column(
        "WI2",
        "WI-2 (n_c<=n_r<=n_s<=n_d-n_c/2)",
        "n_r+n_s<=n_d",
        lambda d, c, r, s: _wi2_regime_b(d, c, r, s) and r + s <= d,
        lambda d, c, r, s: _wi2(d, F(0), F(0), F(0), F(0), F(d - c)),
        _wi2_sum,
    ),
    Column(
        "WI2",
        "WI-2 (n_c<=n_r<=n_s<=n_d-n_c/2)",
        "n_d<n_r+n_s<=n_d+n_c/2",
        lambda d, c, r, s: _wi2_regime_b(d, c, r, s) and d < r + s <= d + HALF * c,
        lambda d, c, r, s: _wi2(
            d,
            F(0),
            F(s - c - max(0, 2 * s - 2 * c + r - d)),
            F(r - d + s),
            F(max(0, 2 * s - 2 * c + r - d)),
            F(d - s),
        ),
        _wi2_sum,
    ),
    Column(
        "WI2",
        "WI-2 (n_c<=n_r<=n_s<=n_d-n_c/2)",
        "n_d+n_c/2<n_r+n_s",
        lambda d, c, r, s: _wi2_regime_b(d, c, r, s) and d + HALF * c < r + s,
        lambda d, c, r, s: _wi2(
            d,
            F(0),
            s - c - pos(s - 3 * HALF * c),
            HALF * c,
            pos(s - 3 * HALF * c),
            F(d - s),
        ),
        _wi2_sum,
    ),
]


# Scheme WI-3.


def _wi3_sum_strong_source(d: int, c: int, r: int, s: int) -> Fraction:
    return F(min(s + d - c, 2 * d + r - c, 2 * max(c, r + d - c)))


def _wi3_sum_weak_source(d: int, c: int, r: int, s: int) -> Fraction:
    return F(min(2 * d - c, 2 * max(s, d - c), 2 * max(c, r + d - c)))


def _wi3_sum_strong_relay(d: int, c: int, r: int, s: int) -> Fraction:
    return F(min(2 * d - c, 2 * max(r + s - c, d - c)))


def _wi3_upper(**values: object) -> Rates:
    # The top padding closes the gap left by cn1 below cm2.
    rates = _rates("WI3", **values)
    rates["l1u"] = rates["cm2"] - rates["cn1"]
    rates["l1d"] = F(0)
    return rates


def _wi3_lower(c: int, d: int, **values: object) -> Rates:
    rates = _rates("WI3", **values)
    gap = pos(rates["cm2"] - rates["cn1"])
    rates["l1u"] = min(F(pos(2 * c - d)), gap)
    rates["l1d"] = gap - rates["l1u"]
    return rates


def _wi3_a(d: int, c: int, r: int, s: int) -> bool:
    return r <= c < d <= s and r + d - c > c


def _wi3_b(d: int, c: int, r: int, s: int) -> bool:
    return r <= c <= d <= s and r + d - c <= c


def _wi3_c(d: int, c: int, r: int, s: int) -> bool:
    return r <= c <= s <= d and (c <= r + d - c or s <= d - c)


def _wi3_d_low(d: int, c: int, r: int, s: int) -> bool:
    return r <= c <= s <= d < min(2 * c - r, s + c)


def _wi3_d_high(d: int, c: int, r: int, s: int) -> bool:
    return c <= r <= s <= d <= s + HALF * c


def _wi3_a_col1(d: int, c: int, r: int, s: int) -> Rates:
    cm2 = F(c + d - s, 2)
    cn1 = min(F(pos(3 * d - 3 * c - s)), 2 * cm2) / 2
    cn2 = min(pos(d - c - cm2 - cn1), F(s - d))
    p1 = F(pos(d - 2 * c))
    cn3 = s - d - cn2
    p2 = min(c - cm2 - cn3, d - c - p1 - cn1)
    return _wi3_upper(cm2=cm2, cn1=cn1, cn2=cn2, p1=p1, cn3=cn3, p2=p2)


def _wi3_a_col2(d: int, c: int, r: int, s: int) -> Rates:
    p1 = F(pos(2 * d - c - s))
    cn3 = F(pos(c + s - 2 * d))
    return _wi3_upper(
        lcm1=c + d - s,
        cn2=min(d - c, s - d),
        p1=p1,
        cn3=cn3,
        p2=min(c - cn3, d - c - p1),
    )


def _wi3_a_col3(d: int, c: int, r: int, s: int) -> Rates:
    return _wi3_upper(
        cm2=c - r,
        cn1=pos(r - 2 * c + 2 * d - s),
        cn2=min(s - d, d - 2 * c + r),
        cn3=pos(c - d + r),
        p2=min(d - c, r),
    )


def _wi3_a_col4(d: int, c: int, r: int, s: int) -> Rates:
    return _wi3_upper(
        cm2=c - r,
        cn1=min(r, c - r),
        cn2=pos(2 * r - c),
        p1=d - 2 * c,
        p2=r,
    )


def _wi3_b_col1(d: int, c: int, r: int, s: int) -> Rates:
    return _wi3_a_col2(d, c, r, s)


def _wi3_b_col2(d: int, c: int, r: int, s: int) -> Rates:
    return _wi3_upper(
        cm2=d - c,
        cn3=pos(3 * c - 2 * d),
        p2=(2 * c - d) - pos(3 * c - 2 * d),
    )


def _wi3_b_col3(d: int, c: int, r: int, s: int) -> Rates:
    p1 = pos(d - r - c)
    return _wi3_upper(
        lcm1=c - r,
        cn2=r - pos(c + r - d),
        p1=p1,
        cn3=pos(c + r - d),
        p2=(d - c) - p1,
    )


def _wi3_c_mid(d: int, c: int, r: int, s: int) -> bool:
    return c - r <= d - c < s


WI3_COLUMNS = [
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<n_d<=n_s, n_r+n_d-n_c>n_c)",
        "n_s+n_c<=n_d+2n_r, 3n_c<=n_s+n_d",
        lambda d, c, r, s: _wi3_a(d, c, r, s) and s + c <= d + 2 * r and 3 * c <= s + d,
        _wi3_a_col1,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<n_d<=n_s, n_r+n_d-n_c>n_c)",
        "n_s+n_c<=n_d+2n_r, 3n_c>n_s+n_d",
        lambda d, c, r, s: _wi3_a(d, c, r, s) and s + c <= d + 2 * r and 3 * c > s + d,
        _wi3_a_col2,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<n_d<=n_s, n_r+n_d-n_c>n_c)",
        "n_s+n_c>n_d+2n_r, n_d<=2n_c",
        lambda d, c, r, s: _wi3_a(d, c, r, s) and s + c > d + 2 * r and d <= 2 * c,
        _wi3_a_col3,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<n_d<=n_s, n_r+n_d-n_c>n_c)",
        "n_s+n_c>n_d+2n_r, n_d>2n_c",
        lambda d, c, r, s: _wi3_a(d, c, r, s) and s + c > d + 2 * r and d > 2 * c,
        _wi3_a_col4,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_d<=n_s, n_r+n_d-n_c<=n_c)",
        "n_s<min{n_r+n_d,3n_c-n_d}",
        lambda d, c, r, s: _wi3_b(d, c, r, s) and s < min(r + d, 3 * c - d),
        _wi3_b_col1,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_d<=n_s, n_r+n_d-n_c<=n_c)",
        "3n_c<=min{n_s+n_d,2n_d+n_r}",
        lambda d, c, r, s: _wi3_b(d, c, r, s) and 3 * c <= min(s + d, 2 * d + r),
        _wi3_b_col2,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_d<=n_s, n_r+n_d-n_c<=n_c)",
        "n_d<=min{n_s-n_r,(3n_c-n_r)/2}",
        lambda d, c, r, s: _wi3_b(d, c, r, s) and d <= min(s - r, HALF * (3 * c - r)),
        _wi3_b_col3,
        _wi3_sum_strong_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d)",
        "n_s<=n_d-n_c",
        lambda d, c, r, s: _wi3_c(d, c, r, s) and s <= d - c,
        lambda d, c, r, s: _rates("WI3", p2=d - c, l1d=c),
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d)",
        "2(n_d-n_s)<=n_c<=2n_r, 2n_d<=3n_c",
        lambda d, c, r, s: _wi3_c(d, c, r, s)
        and _wi3_c_mid(d, c, r, s)
        and 2 * (d - s) <= c <= 2 * r
        and 2 * d <= 3 * c,
        lambda d, c, r, s: _wi3_lower(c, d, lcm1=c, p1=d - c),
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d)",
        "2(n_d-n_s)<=n_c<=2n_r, 2n_d>3n_c",
        lambda d, c, r, s: _wi3_c(d, c, r, s)
        and _wi3_c_mid(d, c, r, s)
        and 2 * (d - s) <= c <= 2 * r
        and 2 * d > 3 * c,
        lambda d, c, r, s: _wi3_lower(
            c,
            d,
            cm2=HALF * c,
            cn1=d - 3 * HALF * c - pos(d - 2 * c),
            p1=pos(d - 2 * c),
            p2=HALF * c,
        ),
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d)",
        "n_s<=min{n_d-n_c/2,n_r+n_d-n_c}",
        lambda d, c, r, s: _wi3_c(d, c, r, s)
        and _wi3_c_mid(d, c, r, s)
        and s <= min(d - HALF * c, r + d - c),
        lambda d, c, r, s: _wi3_lower(
            c,
            d,
            cm2=d - s,
            cn1=min(s - c, c + s - d),
            p1=pos(d - 2 * c),
            p2=c + s - d,
        ),
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d)",
        "max{n_r+n_d-n_s,2n_r}<=n_c",
        lambda d, c, r, s: _wi3_c(d, c, r, s)
        and _wi3_c_mid(d, c, r, s)
        and max(r + d - s, 2 * r) <= c,
        lambda d, c, r, s: _wi3_lower(
            c,
            d,
            cm2=c - r,
            cn1=r - pos(2 * c - d),
            p1=pos(d - 2 * c),
            p2=r,
        ),
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d<min{2n_c-n_r,n_s+n_c})",
        "2n_d<=3n_c",
        lambda d, c, r, s: _wi3_d_low(d, c, r, s) and 2 * d <= 3 * c,
        lambda d, c, r, s: _wi3_upper(lcm1=c, p1=d - c),
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_r<=n_c<=n_s<=n_d<min{2n_c-n_r,n_s+n_c})",
        "2n_d>3n_c",
        lambda d, c, r, s: _wi3_d_low(d, c, r, s) and 2 * d > 3 * c,
        lambda d, c, r, s: {
            **_rates("WI3", cm2=2 * c - d, p2=d - c),
            "l1u": F(d - c),
        },
        _wi3_sum_weak_source,
    ),
    Column(
        "WI3",
        "WI-3 (n_c<=n_r<=n_s<=n_d<=n_s+n_c/2)",
        "2n_d<=3n_c",
        lambda d, c, r, s: _wi3_d_high(d, c, r, s) and 2 * d <= 3 * c,
        lambda d, c, r, s: _rates("WI3", lcm1=c, p1=d - c),
        _wi3_sum_strong_relay,
    ),
    Column(
        "WI3",
        "WI-3 (n_c<=n_r<=n_s<=n_d<=n_s+n_c/2)",
        "2n_d>3n_c",
        lambda d, c, r, s: _wi3_d_high(d, c, r, s) and 2 * d > 3 * c,
        lambda d, c, r, s: _wi3_lower(
            c,
            d,
            cm2=HALF * c,
            cn1=min(d - 3 * HALF * c, HALF * c),
            p1=pos(d - 2 * c),
            p2=HALF * c,
        ),
        _wi3_sum_strong_relay,
    ),
]


# Scheme SI.


def _si_sum(d: int, c: int, r: int, s: int) -> Fraction:
    return F(min(2 * max(d, r), max(r, c) + (s - c), s + c, c + r))


def _si_col2(d: int, c: int, r: int, s: int) -> Rates:
    df1 = F(pos(r + s - 3 * c), 2)
    return _rates(
        "SI",
        cf2=min(F(r + c - s, 2), F(2 * c - s)),
        df1=df1,
        cn2=(s - c) - 2 * df1,
        l1=F(pos(3 * c - r - s), 2),
    )


SI_COLUMNS = [
    Column(
        "SI",
        "SI (n_c<=n_r)",
        "max{2n_c,n_r}<=n_s",
        lambda d, c, r, s: d <= r and c <= r and max(2 * c, r) <= s,
        lambda d, c, r, s: _rates(
            "SI",
            df1=F(min(r - c, c), 2),
            df2=F(pos(r - 2 * c), 2),
            cn2=pos(2 * c - r),
        ),
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_c<=n_r)",
        "max{n_r,n_s}<=2n_c",
        lambda d, c, r, s: d <= r and c <= r and max(r, s) <= 2 * c,
        _si_col2,
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_c<=n_r)",
        "max{n_s,2n_c}<=n_r",
        lambda d, c, r, s: d <= r and c <= r and max(s, 2 * c) <= r,
        lambda d, c, r, s: _rates(
            "SI",
            cf2=pos(2 * c - s),
            df1=min(F(s - c, 2), F(c, 2)),
            df2=F(pos(s - 2 * c), 2),
        ),
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_d<=n_r<=n_c)",
        "n_r<=n_s/2",
        lambda d, c, r, s: d <= r <= c and 2 * r <= s,
        lambda d, c, r, s: _rates(
            "SI", cf1=pos(r - s + c), cn2=min(r, s - c), l1=c - r
        ),
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_d<=n_r<=n_c)",
        "n_r>n_s/2",
        lambda d, c, r, s: d <= r <= c and 2 * r > s,
        lambda d, c, r, s: _rates(
            "SI",
            cf1=c - r,
            cf2=r - HALF * s,
            cn2=s - c,
            l1=c - HALF * s,
        ),
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_r<n_d)",
        "n_d<=min{n_s/2,(n_r+n_c)/2}",
        lambda d, c, r, s: r < d and 2 * d <= min(s, r + c),
        lambda d, c, r, s: _rates(
            "SI", cm2=d - min(r, s - c), cn2=min(r, s - c), l1=c - d
        ),
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_r<n_d)",
        "n_s<=min{n_r+n_c,2n_d}",
        lambda d, c, r, s: r < d and s <= min(r + c, 2 * d),
        lambda d, c, r, s: _rates("SI", lcm1=2 * c - s, cn2=s - c),
        _si_sum,
    ),
    Column(
        "SI",
        "SI (n_r<n_d)",
        "n_r+n_c<=min{n_s,2n_d}",
        lambda d, c, r, s: r < d and r + c <= min(s, 2 * d),
        lambda d, c, r, s: _rates("SI", lcm1=c - r, cn2=r),
        _si_sum,
    ),
]


# Scheme II.

II_COLUMNS = [
    Column(
        "II",
        "II",
        "n_c=n_d",
        lambda d, c, r, s: c == d,
        lambda d, c, r, s: _rates("II", cm=d, df=min(pos(s - d), pos(r - d))),
        lambda d, c, r, s: F(max(d, min(r, s))),
    ),
]

COLUMNS: Dict[str, List[Column]] = {
    "WI1": WI1_COLUMNS,
    "WI2": WI2_COLUMNS,
    "WI3": WI3_COLUMNS,
    "SI": SI_COLUMNS,
    "II": II_COLUMNS,
}


def _families(p: LdParams) -> Tuple[str, ...]:
    regime = p.regime
    if regime == Regime.WEAKER_SOURCE:
        raise OutOfScope(f"No scheme covers {p}, it needs n_c < n_s.")
    if regime == Regime.INTERMEDIATE:
        return ("II",)
    if regime == Regime.STRONG:
        return ("SI",)
    # WI-2 goes before WI-3 on their shared boundary.
    return ("WI1", "WI2", "WI3")


@lru_cache(maxsize=None)
def _warn_overlap(p: LdParams, family: str, tables: Tuple[str, ...], used: str) -> None:
    # Cached, so a point is reported once per process.
    logger.warning(f"Several {family} tables match {p}: {list(tables)}, using {used}.")


def find_column(p: LdParams, family: str = "") -> Column:
    """
    Return the first rate allocation column whose condition holds.

    :param LdParams p: the channel, with n_c < n_s.
    :param str family: restrict the search to one table family.
    :raises OutOfScope: when n_s <= n_c.
    :raises NoMatchingColumn: when no column applies.
    :return: the matching column.
    :rtype: Column
    """
    args = p.astuple()
    families = _families(p)
    if family:
        if family not in families:
            raise NoMatchingColumn(f"The {family} tables do not apply to {p}.")
        families = (family,)
    for fam in families:
        matches = [col for col in COLUMNS[fam] if col.guard(*args)]
        if not matches:
            continue
        tables = {col.table for col in matches}
        if len(tables) > 1:
            _warn_overlap(p, fam, tuple(sorted(tables)), matches[0].table)
        return matches[0]
    raise NoMatchingColumn(f"No rate allocation column matches {p}.")


def classify_regime(p: LdParams) -> Tuple[SchemeId, str]:
    """
    Pick the scheme and the table column that achieve the capacity.

    :param LdParams p: the channel, with n_c < n_s.
    :raises OutOfScope: when n_s <= n_c.
    :raises NoMatchingColumn: when the tables miss the channel.
    :return: the scheme and the column's condition tag.
    """
    column = find_column(p)
    if column.family == "WI3":
        rates = column.rates(*p.astuple())
        scheme = SchemeId.WI3b if rates["cn3"] > 0 else SchemeId.WI3a
    else:
        scheme = SchemeId[column.family]
    return scheme, column.tag
