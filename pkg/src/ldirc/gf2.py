"""Incremental GF(2) elimination over int bitsets."""
from typing import Dict, Iterable, Optional, Tuple

#: A linear form over message bits with its observed parity.
Row = Tuple[int, int]


class LinearSpan:
    """
    The span of observed GF(2) linear forms. Every row is a bitmask of
    unknowns together with the parity it evaluated to. Stored rows have
    pairwise distinct leading (highest) bits, so a form is in the span
    iff leading-bit reduction clears it.

    :param rows: initial rows.
    """

    __slots__ = ("_pivots",)

    def __init__(self, rows: Iterable[Row] = ()) -> None:
        self._pivots: Dict[int, Row] = {}
        for mask, value in rows:
            self.add(mask, value)

    def reduce(self, mask: int, value: int = 0) -> Row:
        """
        Eliminate leading bits of `mask` with the stored rows.

        :return: the residual mask and the accumulated parity.
        """
        while mask:
            row = self._pivots.get(mask.bit_length() - 1)
            if row is None:
                break
            mask ^= row[0]
            value ^= row[1]
        return mask, value

    def add(self, mask: int, value: int) -> bool:
        """
        Add an observed row.

        :return: True, if the row increased the rank.
        """
        mask, value = self.reduce(mask, value)
        if mask == 0:
            return False
        self._pivots[mask.bit_length() - 1] = (mask, value)
        return True

    def solve(self, mask: int) -> Optional[int]:
        """
        The parity of the unknowns in `mask`, if the span determines it.

        :return: 0 or 1, or None when `mask` is outside the span.
        """
        residual, value = self.reduce(mask)
        if residual:
            return None
        return value

    def __contains__(self, mask: int) -> bool:
        return self.solve(mask) is not None

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def copy(self) -> "LinearSpan":
        """A span with the same rows that can grow independently."""
        other = LinearSpan()
        other._pivots = dict(self._pivots)
        return other

    def truncate(self, limit: int) -> None:
        """
        Drop the rows whose leading bit is at or above `limit`. Forms
        below that bit keep their solutions.
        """
        for lead in [lead for lead in self._pivots if lead >= limit]:
            del self._pivots[lead]
