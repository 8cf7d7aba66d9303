"""
Rate allocations of the achievability schemes.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping

from ..errors import InvalidInput
from ..ldmodel import LdParams
from ..rateopt import common_rate, compile_constraints
from ..utils import lcm_of_denominators
from .regime import SchemeId, classify_regime, find_column


def class_rates(
    scheme: SchemeId, p: LdParams, rates: Mapping[str, Fraction]
) -> Dict[str, Fraction]:
    """
    Information bits per channel use that one user sends in every message
    class of a scheme.

    :param SchemeId scheme: the scheme.
    :param LdParams p: the channel the rates are counted on.
    :param rates: the free variables of the scheme's table.
    :return: the per-class rates of a single user.
    """
    d, c = p.n_d, p.n_c
    get = lambda name: Fraction(rates.get(name, 0))  # noqa: E731
    family = scheme.family
    if family == "WI1":
        names = ("cn", "df1", "df2", "cf", "p")
        return {name: get(name) for name in names}
    if family == "WI2":
        out = {"cm": Fraction(common_rate(2 * get("cm"), c - d))}
        out.update({name: get(name) for name in ("cn", "cf", "p1", "p2")})
        return out
    if family == "WI3":
        out = {"cm1": Fraction(common_rate(get("lcm1"), c - d))}
        out.update(
            {name: get(name) for name in ("cm2", "cn1", "cn2", "cn3", "p1", "p2")}
        )
        return out
    if family == "SI":
        out = {"cm1": Fraction(common_rate(get("lcm1"), d - c))}
        out.update(
            {name: get(name) for name in ("cm2", "cf1", "cf2", "df1", "df2")}
        )
        out["cn"] = 2 * get("df1") + get("cn2")
        return out
    return {"cm": get("cm"), "df": get("df")}


@dataclass(frozen=True)
class RateAllocation:
    """
    The rates and paddings a scheme assigns on a channel.

    :param SchemeId scheme: the scheme.
    :param LdParams params: the channel.
    :param str column: condition tag of the table column it came from.
    :param rates: the free variables of the scheme's table, in levels.
    """

    scheme: SchemeId
    params: LdParams
    column: str
    rates: Mapping[str, Fraction] = field(default_factory=dict)

    @property
    def classes(self) -> Dict[str, Fraction]:
        """Per-user information rate of every message class."""
        return class_rates(self.scheme, self.params, self.rates)

    @property
    def users(self) -> int:
        """Number of active users."""
        return 1 if self.scheme == SchemeId.II else 2

    @property
    def per_user_rate(self) -> Fraction:
        return sum(self.classes.values(), Fraction(0))

    @property
    def sum_rate(self) -> Fraction:
        return self.users * self.per_user_rate

    @property
    def scale(self) -> int:
        """The smallest level scaling that makes every quantity integral."""
        derived = compile_constraints(self.scheme, self.params).derive(self.rates)
        return lcm_of_denominators(
            *self.rates.values(), *self.classes.values(), *derived.values()
        )

    @property
    def lengths(self) -> Dict[str, int]:
        """Segment lengths of Tx1's layout at :attr:`scale`."""
        from .layout import build_layouts

        layouts = build_layouts(self.scheme, self.params, self)
        return {seg.label: seg.length for seg in layouts.tx1 if seg.pieces}

    @property
    def paddings(self) -> Dict[str, int]:
        """Padding lengths of Tx1's layout at :attr:`scale`."""
        from .layout import build_layouts

        layouts = build_layouts(self.scheme, self.params, self)
        return {seg.label: seg.length for seg in layouts.tx1 if not seg.pieces}

    def __str__(self) -> str:
        body = ", ".join(f"{key}={val}" for key, val in self.rates.items() if val)
        return f"{self.scheme} [{self.column}] {body}"


def _check_scheme(scheme: SchemeId, p: LdParams) -> None:
    expected, _ = classify_regime(p)
    if SchemeId(scheme) != expected:
        raise InvalidInput(
            f"The scheme {SchemeId(scheme)} does not cover {p}, "
            f"it calls for {expected}."
        )


def allocate(scheme: SchemeId, p: LdParams) -> RateAllocation:
    """
    Evaluate the rate allocation table of a scheme.

    :param SchemeId scheme: the scheme :func:`classify_regime` picks.
    :param LdParams p: the channel.
    :raises InvalidInput: when the scheme does not cover the channel.
    :raises OutOfScope: when n_s <= n_c.
    :return: the allocation of the first matching column.
    :rtype: RateAllocation
    """
    _check_scheme(scheme, p)
    column = find_column(p, SchemeId(scheme).family)
    rates = column.rates(*p.astuple())
    return RateAllocation(SchemeId(scheme), p, column.tag, rates)


def scheme_sum_rate(scheme: SchemeId, p: LdParams) -> Fraction:
    """
    The closed-form sum-rate a scheme achieves on a channel.

    :param SchemeId scheme: the scheme :func:`classify_regime` picks.
    :param LdParams p: the channel.
    :raises InvalidInput: when the scheme does not cover the channel.
    :return: the sum-rate in bits per channel use.
    :rtype: Fraction
    """
    _check_scheme(scheme, p)
    column = find_column(p, SchemeId(scheme).family)
    return column.sum_rate(*p.astuple())
