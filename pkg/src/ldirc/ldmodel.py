"""
Linear deterministic model of the symmetric interference relay channel.

A transmitted signal is a binary column vector of ``q`` bit levels, the
top-most level first. A link of strength ``n`` delivers the top-most
``n`` levels of its input, shifted down by ``q - n`` positions.
"""
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Iterable, Iterator, Tuple, Union

import numpy as np

from .errors import InvalidInput


class Regime(IntEnum):
    """Operating regimes of the LD-IRC."""

    #: Source-relay links no stronger than the cross links (n_s <= n_c).
    WEAKER_SOURCE = 0
    #: Weak interference (n_c < n_d) with n_c < n_s.
    WEAK = 1
    #: Strong interference (n_d < n_c) with n_c < n_s.
    STRONG = 2
    #: Intermediate interference (n_c = n_d) with n_c < n_s.
    INTERMEDIATE = 3


@dataclass(frozen=True)
class LdParams:
    """
    The four bit levels of a symmetric LD-IRC.

    :param int n_d: direct link strength.
    :param int n_c: cross link strength.
    :param int n_r: relay-destination link strength.
    :param int n_s: source-relay link strength.
    :raises InvalidInput: when a level is negative or not an integer.
    """

    n_d: int
    n_c: int
    n_r: int
    n_s: int

    def __post_init__(self) -> None:
        for name in ("n_d", "n_c", "n_r", "n_s"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, (int, np.integer)):
                raise InvalidInput(f"The level {name} must be an integer.")
            if val < 0:
                raise InvalidInput(f"The level {name} must be non-negative.")
            object.__setattr__(self, name, int(val))

    @property
    def q(self) -> int:
        """Length of the transmitted and received bit vectors."""
        return max(self.n_d, self.n_c, self.n_r, self.n_s)

    @property
    def regime(self) -> Regime:
        """The operating regime of the channel."""
        if self.n_s <= self.n_c:
            return Regime.WEAKER_SOURCE
        if self.n_c < self.n_d:
            return Regime.WEAK
        if self.n_d < self.n_c:
            return Regime.STRONG
        return Regime.INTERMEDIATE

    def scaled(self, factor: int) -> "LdParams":
        """
        Multiply every level by `factor`.

        :param int factor: a positive integer.
        :return: the scaled channel.
        :rtype: LdParams
        """
        if factor < 1:
            raise InvalidInput("The scaling factor must be positive.")
        return LdParams(
            self.n_d * factor, self.n_c * factor, self.n_r * factor, self.n_s * factor
        )

    def astuple(self) -> Tuple[int, int, int, int]:
        return (self.n_d, self.n_c, self.n_r, self.n_s)

    def __str__(self) -> str:
        return "(n_d={}, n_c={}, n_r={}, n_s={})".format(*self.astuple())


class BitWord:
    """
    An immutable binary vector. Index 0 is the top-most bit level.

    :param bits: an iterable of 0/1 values or a numpy array.
    :raises InvalidInput: when a value is not a bit.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[Iterable[int], np.ndarray] = ()) -> None:
        arr = np.array(list(bits) if not isinstance(bits, np.ndarray) else bits)
        if arr.size == 0:
            arr = np.zeros(0, dtype=np.uint8)
        if arr.ndim != 1 or np.any((arr != 0) & (arr != 1)):
            raise InvalidInput("A bit word is a flat sequence of 0 and 1 values.")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._bits = arr

    @classmethod
    def zeros(cls, length: int) -> "BitWord":
        """ Create the all-zero word of `length` levels. """
        return cls(np.zeros(length, dtype=np.uint8))

    @classmethod
    def from_string(cls, text: str) -> "BitWord":
        """ Create a word from a string like ``"0101"``. """
        try:
            return cls(int(char) for char in text)
        except ValueError:
            raise InvalidInput(f"Invalid bit string: {text!r}.") from None

    @property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the bits."""
        return self._bits

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple(int(bit) for bit in self._bits)

    def any(self) -> bool:
        """ True, if at least one bit is set. """
        return bool(self._bits.any())

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, idx: int) -> int:
        return int(self._bits[idx])

    def __xor__(self, other: "BitWord") -> "BitWord":
        if not isinstance(other, BitWord):
            return NotImplemented
        if len(self) != len(other):
            raise InvalidInput("Bit words of different length cannot be added.")
        return BitWord(np.bitwise_xor(self._bits, other._bits))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, BitWord):
            return np.array_equal(self._bits, other._bits)
        try:
            return self.bits == tuple(other)
        except TypeError:
            return False

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)

    def __repr__(self) -> str:
        return f"<BitWord {self}>"


def shift_down(word: BitWord, shift: int) -> BitWord:
    """
    Apply the down-shift matrix ``S^shift`` to a word.

    The top-most `shift` levels become zero and the bottom-most
    `shift` levels are lost. Shifts of at least the word length give
    the all-zero word.

    :param BitWord word: the word to shift.
    :param int shift: non-negative number of positions.
    :raises InvalidInput: when the shift is negative.
    :return: the shifted word.
    :rtype: BitWord
    """
    if shift < 0:
        raise InvalidInput("The shift must be non-negative.")
    size = len(word)
    out = np.zeros(size, dtype=np.uint8)
    if shift < size:
        out[shift:] = word.array[: size - shift]
    return BitWord(out)


def _check_length(p: LdParams, *words: BitWord) -> None:
    for word in words:
        if len(word) != p.q:
            raise InvalidInput(
                f"Expected a word of length {p.q}, got length {len(word)}."
            )


def relay_output(p: LdParams, x1: BitWord, x2: BitWord) -> BitWord:
    """
    The signal observed by the relay.

    :param LdParams p: the channel.
    :param BitWord x1: the word sent by Tx1.
    :param BitWord x2: the word sent by Tx2.
    :raises InvalidInput: on length mismatch.
    :return: ``S^(q-n_s) x1 + S^(q-n_s) x2``.
    :rtype: BitWord
    """
    _check_length(p, x1, x2)
    shift = p.q - p.n_s
    return shift_down(x1, shift) ^ shift_down(x2, shift)


def rx_output(p: LdParams, j: int, x1: BitWord, x2: BitWord, xr: BitWord) -> BitWord:
    """
    The signal observed by receiver `j`.

    :param LdParams p: the channel.
    :param int j: receiver index, 1 or 2.
    :param BitWord x1: the word sent by Tx1.
    :param BitWord x2: the word sent by Tx2.
    :param BitWord xr: the word sent by the relay.
    :raises InvalidInput: on length mismatch or an invalid receiver index.
    :return: the received word.
    :rtype: BitWord
    """
    if j not in (1, 2):
        raise InvalidInput("The receiver index must be 1 or 2.")
    _check_length(p, x1, x2, xr)
    own, other = (x1, x2) if j == 1 else (x2, x1)
    return (
        shift_down(own, p.q - p.n_d)
        ^ shift_down(other, p.q - p.n_c)
        ^ shift_down(xr, p.q - p.n_r)
    )
