import io
import logging
from fractions import Fraction as F

import pytest

from ldirc import InvalidInput, format_decimal, parse_rational, set_debug
from ldirc.utils import lcm_of_denominators, pos


def test_parse_rational():
    """ Test parsing rationals from strings and numbers. """
    assert parse_rational("1/10") == F(1, 10)
    assert parse_rational(" 7/10 ") == F(7, 10)
    assert parse_rational("0.7") == F(7, 10)
    assert parse_rational(0.1) == F(1, 10)
    assert parse_rational(3) == 3
    assert parse_rational(F(2, 3)) == F(2, 3)
    with pytest.raises(InvalidInput):
        parse_rational("x")
    with pytest.raises(InvalidInput):
        parse_rational("1/0")


def test_format_decimal():
    """ Test rendering rationals for CSV output. """
    assert format_decimal(F(5)) == "5"
    assert format_decimal(F(7, 2)) == "3.5"
    assert format_decimal(F(1, 3)) == "0.333333333333"
    assert format_decimal(F(-3, 8)) == "-0.375"


def test_pos():
    """ Test the positive part. """
    assert pos(-3) == 0
    assert pos(4) == 4
    assert pos(F(-1, 2)) == 0
    assert pos(F(1, 2)) == F(1, 2)


def test_lcm_of_denominators():
    """ Test the common denominator of rationals. """
    assert lcm_of_denominators(F(1, 2), F(1, 3), 2) == 6
    assert lcm_of_denominators() == 1


def test_set_debug():
    """ Test switching debug logging on and off. """
    stream = io.StringIO()
    logger = logging.getLogger("ldirc")
    try:
        set_debug(True, stream)
        set_debug(True, stream)
        handlers = [
            hdl for hdl in logger.handlers if getattr(hdl, "_ldirc_debug", False)
        ]
        assert len(handlers) == 1
        assert logger.level == logging.DEBUG
        logging.getLogger("ldirc.test").debug("debug message")
        assert "ldirc.test DEBUG: debug message" in stream.getvalue()
        set_debug(False)
        assert logger.level == logging.WARNING
    finally:
        for hdl in list(logger.handlers):
            if getattr(hdl, "_ldirc_debug", False):
                logger.removeHandler(hdl)
        logger.setLevel(logging.NOTSET)
