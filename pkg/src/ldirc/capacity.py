"""
Closed-form sum-capacity and upper bounds of the LD-IRC.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Sequence, Tuple, Union

from .ldmodel import LdParams
from .utils import pos

logger = logging.getLogger("ldirc.capacity")

Value = Union[int, Fraction]

#: Identifiers of the upper bounds, in evaluation order.
BOUND_LABELS = (
    "equal-gains",
    "cut-set-mac",
    "genie-relay",
    "genie-source",
    "genie-cross",
    "genie-relay-cross",
    "cut-set-rx",
    "genie-source-relay",
)

#: Equation references of the LD bounds, in evaluation order.
LD_BOUND_REFS = dict(zip(BOUND_LABELS, [f"({num})" for num in range(16, 24)]))

#: Equation references of the GDoF bounds, in evaluation order.
GDOF_BOUND_REFS = dict(zip(BOUND_LABELS, [f"({num})" for num in range(29, 37)]))


class Bound(NamedTuple):
    """A single evaluated upper bound and the equation it stands for."""

    label: str
    value: Value
    applicable: bool
    ref: str = ""

    def __str__(self) -> str:
        return f"{self.label} {self.ref}" if self.ref else self.label


class BoundSet:
    """
    Labelled evaluations of a family of upper bounds.

    :param entries: the evaluated bounds. At least one of them must be
        applicable.
    :raises ValueError: when a label is unknown or nothing is applicable.
    """

    def __init__(self, entries: Sequence[Bound]) -> None:
        for entry in entries:
            if entry.label not in BOUND_LABELS:
                raise ValueError(f"Unknown bound label: {entry.label}.")
        if not any(entry.applicable for entry in entries):
            raise ValueError("At least one bound must be applicable.")
        self._entries: Tuple[Bound, ...] = tuple(entries)

    @property
    def entries(self) -> Tuple[Bound, ...]:
        return self._entries

    @property
    def binding(self) -> str:
        """
        Label of the smallest applicable bound. Ties go to the bound
        that comes first in the evaluation order.
        """
        best = min(
            (entry for entry in self._entries if entry.applicable),
            key=lambda entry: entry.value,
        )
        return best.label

    @property
    def value(self) -> Value:
        """The minimum over the applicable bounds."""
        return min(entry.value for entry in self._entries if entry.applicable)

    def __getitem__(self, label: str) -> Bound:
        for entry in self._entries:
            if entry.label == label:
                return entry
        raise KeyError(label)

    def __iter__(self) -> Iterator[Bound]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"<BoundSet binding={self.binding} value={self.value}>"


def weaker_source_capacity(d: Value, c: Value, r: Value, s: Value) -> Value:
    """
    Sum-capacity when the source-relay links are not stronger than the
    cross links (s <= c). Works on levels as well as on normalized
    exponents (1, alpha, beta, gamma).
    """
    return min(
        2 * max(d, r),
        2 * max(d, s),
        max(d, c, r) + max(d, c) - c,
        2 * max(d, c) - c + s,
        2 * max(c, r, d - c),
        2 * max(c, d + s - c),
    )


def stronger_source_capacity(d: Value, c: Value, r: Value, s: Value) -> Value:
    """
    Sum-capacity when the source-relay links are stronger than the cross
    links (c < s) and c != d. Works on levels as well as on normalized
    exponents.
    """
    return min(
        2 * max(d, r),
        max(d, c, r) + max(d, c) - pos(c - pos(s - max(d, c))),
        r + 2 * max(d, c) - c,
        2 * max(s, r + s - c, d - c),
        max(d, c) + max(d, s),
        2 * max(c, r + pos(d - c)),
    )


def equal_gains_capacity(d: Value, r: Value, s: Value) -> Value:
    """ Sum-capacity when the cross and direct links are equally strong. """
    return max(d, min(r, s))


def ld_sum_capacity(p: LdParams) -> int:
    """
    Evaluate the sum-capacity of the LD-IRC.

    :param LdParams p: the channel.
    :return: the sum-capacity in bits per channel use.
    :rtype: int
    """
    d, c, r, s = p.astuple()
    if s <= c:
        value = weaker_source_capacity(d, c, r, s)
        if s == c and c == d:
            other = equal_gains_capacity(d, r, s)
            if other != value:
                logger.debug(
                    f"Capacity formulas disagree at the seam {p}: "
                    f"{value} (authoritative) != {other}."
                )
        return value
    if c == d:
        return equal_gains_capacity(d, r, s)
    return stronger_source_capacity(d, c, r, s)


def ld_capacity_ic(p: LdParams) -> int:
    """
    Sum-capacity of the symmetric LD interference channel that remains
    when the relay is removed.

    :param LdParams p: the channel, n_r and n_s are ignored.
    :return: the sum-capacity in bits per channel use.
    :rtype: int
    """
    d, c = p.n_d, p.n_c
    return min(2 * d, 2 * max(d - c, c), max(d, c) + pos(d - c))


def _bound_values(
    d: Value, c: Value, r: Value, s: Value
) -> List[Tuple[str, Value]]:
    return [
        ("equal-gains", max(d, min(r, s))),
        ("cut-set-mac", max(d, c, r) + max(d, c)),
        ("genie-relay", r + 2 * max(d, c) - c),
        ("genie-source", max(d, c) + max(d, s)),
        ("genie-cross", 2 * max(c, r, d - max(c, s)) + 2 * pos(s - c)),
        ("genie-relay-cross", 2 * max(c, r + pos(d - c))),
        ("cut-set-rx", 2 * max(d, r)),
        ("genie-source-relay", max(d, r, c) + max(d, c) - c + pos(s - max(d, c))),
    ]


def ld_upper_bounds(p: LdParams) -> BoundSet:
    """
    Evaluate every upper bound on the LD sum-capacity.

    The equal-gains bound is only applicable when n_c = n_d. The relay
    cross bound is used in its unconditional form.

    :param LdParams p: the channel.
    :return: the evaluated bounds.
    :rtype: BoundSet
    """
    d, c, r, s = p.astuple()
    entries = [
        Bound(label, value, label != "equal-gains" or d == c, LD_BOUND_REFS[label])
        for label, value in _bound_values(d, c, r, s)
    ]
    return BoundSet(entries)
