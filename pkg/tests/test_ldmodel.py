import numpy as np
import pytest

from ldirc import BitWord, InvalidInput, LdParams, Regime
from ldirc import relay_output, rx_output, shift_down


def test_params():
    """ Test creating channel parameters. """
    p = LdParams(3, 1, 2, 5)
    assert p.q == 5
    assert p.astuple() == (3, 1, 2, 5)
    assert p.scaled(2) == LdParams(6, 2, 4, 10)
    assert str(p) == "(n_d=3, n_c=1, n_r=2, n_s=5)"
    with pytest.raises(InvalidInput):
        _ = LdParams(3, -1, 2, 5)
    with pytest.raises(InvalidInput):
        _ = LdParams(3, 1.5, 2, 5)
    with pytest.raises(InvalidInput):
        p.scaled(0)


def test_regime():
    """ Test the regime classification of the channel. """
    assert LdParams(3, 1, 2, 5).regime == Regime.WEAK
    assert LdParams(1, 2, 5, 4).regime == Regime.STRONG
    assert LdParams(3, 3, 5, 4).regime == Regime.INTERMEDIATE
    assert LdParams(2, 3, 1, 3).regime == Regime.WEAKER_SOURCE
    assert LdParams(0, 0, 0, 0).regime == Regime.WEAKER_SOURCE


def test_bitword():
    """ Test basic BitWord operations. """
    word = BitWord.from_string("1011")
    assert len(word) == 4
    assert word.bits == (1, 0, 1, 1)
    assert word[0] == 1
    assert str(word) == "1011"
    assert word == (1, 0, 1, 1)
    assert word ^ BitWord.from_string("0011") == BitWord.from_string("1000")
    assert not BitWord.zeros(3).any()
    assert BitWord.zeros(0) == BitWord()
    with pytest.raises(InvalidInput):
        _ = BitWord.from_string("012")
    with pytest.raises(InvalidInput):
        _ = BitWord.from_string("0a")
    with pytest.raises(InvalidInput):
        _ = word ^ BitWord.zeros(3)


def test_shift_down():
    """ Test the down-shift of bit words. """
    word = BitWord.from_string("1011")
    assert shift_down(word, 0) == word
    assert shift_down(word, 1) == BitWord.from_string("0101")
    assert shift_down(word, 3) == BitWord.from_string("0001")
    assert shift_down(word, 4) == BitWord.zeros(4)
    assert shift_down(word, 9) == BitWord.zeros(4)
    with pytest.raises(InvalidInput):
        shift_down(word, -1)


def test_shift_down_linear():
    """ Test that the down-shift is linear over GF(2). """
    rng = np.random.default_rng(42)
    for _ in range(20):
        xa = BitWord(rng.integers(0, 2, size=6))
        xb = BitWord(rng.integers(0, 2, size=6))
        for shift in range(7):
            assert shift_down(xa ^ xb, shift) == shift_down(xa, shift) ^ shift_down(
                xb, shift
            )


def test_relay_output():
    """ Test the signal received by the relay. """
    p = LdParams(2, 1, 1, 3)
    x1 = BitWord.from_string("101")
    x2 = BitWord.from_string("011")
    assert relay_output(p, x1, x2) == BitWord.from_string("110")
    weak = LdParams(3, 1, 2, 2)
    assert relay_output(weak, x1, x2) == BitWord.from_string("011")
    with pytest.raises(InvalidInput):
        relay_output(p, x1, BitWord.zeros(2))


def test_rx_output():
    """ Test the signals received by the destinations. """
    p = LdParams(3, 1, 2, 3)
    x1 = BitWord.from_string("100")
    x2 = BitWord.from_string("110")
    xr = BitWord.from_string("011")
    assert rx_output(p, 1, x1, x2, xr) == BitWord.from_string("100")
    assert rx_output(p, 2, x1, x2, xr) == BitWord.from_string("110")
    with pytest.raises(InvalidInput):
        rx_output(p, 3, x1, x2, xr)
    with pytest.raises(InvalidInput):
        rx_output(p, 1, x1, x2, BitWord.zeros(4))


def test_zero_levels():
    """ Test that a zero level link delivers nothing. """
    p = LdParams(2, 0, 0, 1)
    x1 = BitWord.from_string("11")
    x2 = BitWord.from_string("11")
    xr = BitWord.from_string("11")
    assert rx_output(p, 1, x1, x2, xr) == x1
    assert relay_output(p, x1, BitWord.zeros(2)) == BitWord.from_string("01")
