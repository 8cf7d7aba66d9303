import logging
import math
from fractions import Fraction
from typing import IO, Optional, TypeVar, Union

from .errors import InvalidInput

#: Largest denominator accepted when a float is converted to a rational.
MAX_DENOMINATOR = 10**6

Num = TypeVar("Num", int, Fraction)


def pos(value: Num) -> Num:
    """
    Positive part of a number, max{0, value}.

    :param value: an integer or an exact rational.
    :return: the value itself when it is positive, otherwise zero of
        the same type.
    """
    return value if value > 0 else value * 0


def parse_rational(text: Union[str, int, float, Fraction]) -> Fraction:
    """
    Convert a command line value into an exact rational.

    Accepts "p/q" strings, integers and decimal strings. Floats are
    approximated by the closest fraction with a denominator of at most
    :data:`MAX_DENOMINATOR`.

    :param text: the value to convert.
    :raises InvalidInput: when the value cannot be parsed.
    :return: the exact rational.
    :rtype: Fraction
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        if isinstance(text, float):
            return Fraction(text).limit_denominator(MAX_DENOMINATOR)
        text = text.strip()
        if "/" in text:
            return Fraction(text)
        return Fraction(text).limit_denominator(MAX_DENOMINATOR)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"Not a rational number: {text!r}.") from exc


def format_decimal(value: Fraction) -> str:
    """
    Render an exact rational with 12 significant digits for CSV output.

    :param Fraction value: the rational to render.
    :return: the decimal representation.
    :rtype: str
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.12g}"


def lcm_of_denominators(*values: Fraction) -> int:
    """ Least common multiple of the denominators of `values`. """
    result = 1
    for val in values:
        den = Fraction(val).denominator
        result = result * den // math.gcd(result, den)
    return result


def set_debug(debug: bool, stream: Optional[IO[str]] = None) -> None:
    """
    Turn debug logging of the package on or off.

    A stream handler is attached to the ``ldirc`` logger the first time
    debugging is switched on.

    :param bool debug: debug level if True, warning level otherwise.
    :param stream: the stream of the handler, stderr by default.
    """
    logger = logging.getLogger("ldirc")
    if debug and not any(
        getattr(hdl, "_ldirc_debug", False) for hdl in logger.handlers
    ):
        handler = logging.StreamHandler(stream)
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(name)s %(levelname)s: %(message)s")
        )
        setattr(handler, "_ldirc_debug", True)
        logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if debug else logging.WARNING)
