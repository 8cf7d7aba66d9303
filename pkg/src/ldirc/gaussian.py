"""
Bridge from the LD model to the Gaussian IRC.

A power P is cut into N sub-channels of ``delta = P^(1/N)``. Every link
then behaves like an LD link whose level is the number of sub-channels
above the noise floor, each carrying ``1/2 log2(delta/4)`` bits.
"""
import logging
import math
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple, Union

from .capacity import ld_sum_capacity
from .errors import InvalidInput
from .gdof import GdofParams, gdof
from .ldmodel import LdParams
from .utils import parse_rational

logger = logging.getLogger("ldirc.gaussian")

Real = Union[Fraction, float]
RationalLike = Union[str, int, float, Fraction]


class SubchannelPlan(NamedTuple):
    """
    A sub-channel plan.

    :param power: the transmit power P.
    :param gains: squared gains (g_d, g_c, g_r, g_s).
    :param int n: number of sub-channels N.
    :param log_delta: log2 of the sub-channel power ratio delta.
    :param LdParams levels: sub-channels above noise on every link.
    :param rate: bits per sub-channel, negative when delta < 4.
    :param bool usable: True, if delta > 4.
    :param float relay_power: relay power delta^N_r / g_r that puts the
        relay signal exactly N_r sub-channels above noise.
    :param alignment: the level l with P g_c = g_d delta^l, when it is a
        non-negative integer.
    :param bool exact: True, if every exponent was computed exactly.
    """

    power: Fraction
    gains: Tuple[Fraction, Fraction, Fraction, Fraction]
    n: int
    log_delta: Real
    levels: LdParams
    rate: Real
    usable: bool
    relay_power: float
    alignment: Optional[int]
    exact: bool

    @property
    def delta(self) -> float:
        return 2.0 ** float(self.log_delta)


def _log2_exact(value: Fraction) -> Optional[int]:
    """ Exact base two logarithm of a power of two, or None. """
    num, den = value.numerator, value.denominator
    if num & (num - 1) == 0 and den & (den - 1) == 0:
        return num.bit_length() - den.bit_length()
    return None


def _floor(value: Real) -> int:
    if isinstance(value, Fraction):
        return math.floor(value)
    return math.floor(value + 1e-9)


def _integral(value: Real) -> Optional[int]:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else None
    near = round(value)
    return int(near) if abs(value - near) < 1e-9 else None


def plan_subchannels(
    power: RationalLike,
    g_d: RationalLike,
    g_c: RationalLike,
    g_r: RationalLike,
    g_s: RationalLike,
    n: int,
) -> SubchannelPlan:
    """
    Cut the power of a Gaussian IRC into `n` sub-channels.

    :param power: the transmit power P.
    :param g_d: squared direct gain.
    :param g_c: squared cross gain.
    :param g_r: squared relay-destination gain.
    :param g_s: squared source-relay gain.
    :param int n: number of sub-channels, positive.
    :raises InvalidInput: when n is not positive, a gain is not positive
        or the channel is noise-limited (P min g <= 1).
    :return: the plan. A plan with delta <= 4 is returned with
        ``usable = False``.
    :rtype: SubchannelPlan
    """
    if n < 1:
        raise InvalidInput("The number of sub-channels must be positive.")
    pwr = parse_rational(power)
    gains = tuple(parse_rational(val) for val in (g_d, g_c, g_r, g_s))
    if pwr <= 0 or any(val <= 0 for val in gains):
        raise InvalidInput("The power and the gains must be positive.")
    if pwr * min(gains) <= 1:
        raise InvalidInput(
            "The channel is noise-limited: P times the weakest gain is at most 1."
        )
    exps = [_log2_exact(val) for val in (pwr,) + gains]
    exact = all(exp is not None for exp in exps)
    if exact:
        log_p = Fraction(exps[0])  # type: ignore[arg-type]
        logs = [log_p + exp for exp in exps[1:]]  # type: ignore[operator]
        log_delta: Real = log_p / n
    else:
        log_p = math.log2(pwr)  # type: ignore[assignment]
        logs = [log_p + math.log2(val) for val in gains]  # type: ignore[misc]
        log_delta = log_p / n
    levels = LdParams(*(_floor(val / log_delta) for val in logs))
    rate = (log_delta - 2) / 2
    usable = log_delta > 2
    if not usable:
        logger.warning(
            f"A sub-channel plan with N={n} has delta <= 4, "
            f"every sub-channel carries {float(rate):.4g} bits."
        )
    relay_power = 2.0 ** (float(log_delta) * levels.n_r) / float(gains[2])
    alignment = _integral((logs[1] - logs[0] + log_p) / log_delta)
    if alignment is not None and alignment < 0:
        alignment = None
    return SubchannelPlan(
        pwr,
        gains,  # type: ignore[arg-type]
        n,
        log_delta,
        levels,
        rate,
        usable,
        relay_power,
        alignment,
        exact,
    )


def gdof_limit(
    k_d: RationalLike,
    k_c: RationalLike,
    k_r: RationalLike,
    k_s: RationalLike,
    g: GdofParams,
) -> Fraction:
    """
    The GDoF of a linear combination of link levels
    ``k_d n_d + k_c n_c + k_r n_r + k_s n_s``, that is
    ``k_d + k_c alpha + k_r beta + k_s gamma``.
    """
    coeffs = [parse_rational(val) for val in (k_d, k_c, k_r, k_s)]
    return coeffs[0] + coeffs[1] * g.alpha + coeffs[2] * g.beta + coeffs[3] * g.gamma


def gdof_achievable_check(g: GdofParams, n: int) -> Tuple[int, Fraction, bool]:
    """
    Compare the LD capacity at resolution `n` with the scaled GDoF.

    :param GdofParams g: the exponents.
    :param int n: the direct level, such that every exponent times `n`
        is an integer.
    :raises InvalidInput: when an exponent times `n` is not an integer.
    :return: the LD sum-capacity, ``n`` times the GDoF and whether they
        agree.
    """
    if n < 1:
        raise InvalidInput("The resolution must be positive.")
    levels = [Fraction(val) * n for val in g]
    if any(val.denominator != 1 for val in levels):
        raise InvalidInput(f"The exponents {g} are not multiples of 1/{n}.")
    p = LdParams(n, *(int(val) for val in levels))
    ld_value = ld_sum_capacity(p)
    scaled = n * gdof(g)
    return ld_value, scaled, ld_value == scaled
