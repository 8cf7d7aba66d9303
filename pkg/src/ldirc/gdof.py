"""
Generalized degrees of freedom of the Gaussian interference relay channel.
"""
from fractions import Fraction
from typing import NamedTuple, Union

from .capacity import (
    GDOF_BOUND_REFS,
    Bound,
    BoundSet,
    _bound_values,
    equal_gains_capacity,
    stronger_source_capacity,
    weaker_source_capacity,
)
from .errors import InvalidInput
from .ldmodel import LdParams
from .utils import parse_rational

RationalLike = Union[str, int, float, Fraction]


class GdofParams(NamedTuple):
    """
    Channel exponents normalized by the direct link exponent.

    :param Fraction alpha: cross link exponent ratio.
    :param Fraction beta: relay-destination exponent ratio.
    :param Fraction gamma: source-relay exponent ratio.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    @classmethod
    def create(
        cls, alpha: RationalLike, beta: RationalLike, gamma: RationalLike
    ) -> "GdofParams":
        """
        Create exponents from rationals, integers, floats or "p/q"
        strings.

        :raises InvalidInput: when an exponent is negative or malformed.
        """
        values = [parse_rational(val) for val in (alpha, beta, gamma)]
        if any(val < 0 for val in values):
            raise InvalidInput("The exponents must be non-negative.")
        return cls(*values)

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, beta={self.beta}, gamma={self.gamma})"


def gdof(g: GdofParams) -> Fraction:
    """
    The GDoF of the symmetric Gaussian IRC.

    :param GdofParams g: the exponents.
    :return: the sum GDoF.
    :rtype: Fraction
    """
    one = Fraction(1)
    alpha, beta, gamma = (Fraction(val) for val in g)
    if alpha == 1:
        return Fraction(equal_gains_capacity(one, beta, gamma))
    if gamma > alpha:
        return Fraction(stronger_source_capacity(one, alpha, beta, gamma))
    return Fraction(weaker_source_capacity(one, alpha, beta, gamma))


def gdof_ic(alpha: RationalLike) -> Fraction:
    """
    The GDoF of the symmetric Gaussian interference channel without a
    relay (the "W" curve).

    :param alpha: the cross exponent ratio, non-negative.
    :raises InvalidInput: when alpha is negative.
    :return: the sum GDoF.
    :rtype: Fraction
    """
    alpha = parse_rational(alpha)
    if alpha < 0:
        raise InvalidInput("The exponent alpha must be non-negative.")
    if alpha <= 1:
        return min(max(2 - 2 * alpha, 2 * alpha), 2 - alpha)
    return min(alpha, Fraction(2))


def gdof_upper_bounds(g: GdofParams) -> BoundSet:
    """
    Evaluate every GDoF upper bound of the Gaussian IRC.

    The equal-gains bound only holds at alpha = 1, the relay cross bound
    only when beta <= alpha <= 1.

    :param GdofParams g: the exponents.
    :return: the evaluated bounds.
    :rtype: BoundSet
    """
    alpha, beta, gamma = (Fraction(val) for val in g)
    applicable = {
        "equal-gains": alpha == 1,
        "genie-relay-cross": beta <= alpha <= 1,
    }
    entries = [
        Bound(
            label,
            Fraction(value),
            applicable.get(label, True),
            GDOF_BOUND_REFS[label],
        )
        for label, value in _bound_values(Fraction(1), alpha, beta, gamma)
    ]
    return BoundSet(entries)


def scale_to_ld(g: GdofParams, n: int) -> LdParams:
    """
    Map exponents to LD levels at resolution `n`.

    :param GdofParams g: the exponents.
    :param int n: the direct link level, positive.
    :raises InvalidInput: when n is not positive.
    :return: ``(n, floor(alpha n), floor(beta n), floor(gamma n))``.
    :rtype: LdParams
    """
    if n < 1:
        raise InvalidInput("The resolution must be positive.")
    return LdParams(n, *(int(Fraction(val) * n // 1) for val in g))
