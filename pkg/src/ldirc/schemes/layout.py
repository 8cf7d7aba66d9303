"""
Bit-level signal layouts of the transmission schemes.

A transmitter layout is an ordered list of segments from the top-most
level down. Every segment carries pieces of message classes, either
from the current or from the previous channel use. The relay sends one
or more superposed layers, each built from segments that carry the sums
or the stacked copies of what it decoded in the previous channel use.
"""
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import InvalidInput, LayoutOverflow
from ..gf2 import LinearSpan
from ..ldmodel import LdParams
from ..rateopt import compile_constraints
from .regime import SchemeId

MYPY = False

if MYPY:
    from .tables import RateAllocation

logger = logging.getLogger("ldirc.schemes")

#: Random draws tried when the plain interleaving falls short.
CODE_SEARCH_LIMIT = 4096


class Piece(NamedTuple):
    """
    Info bits of one message class placed inside a segment.

    :param str cls: message class label.
    :param int offset: 0 for the current channel use, -1 for the
        previous one.
    :param int start: index of the first info bit of the class.
    :param int count: number of info bits.
    :param str placement: ``"fill"`` places the bits in order,
        ``"split"`` gives user 1 the top and user 2 the bottom half of
        the segment, ``"code"`` sends the linear combinations in `code`.
    :param code: for ``"code"``, the level mask of every info bit.
    """

    cls: str
    offset: int
    start: int
    count: int
    placement: str = "fill"
    code: Tuple[int, ...] = ()

    def masks(self, user: int) -> List[int]:
        """Level masks, relative to the segment top, of every info bit."""
        if self.placement == "code":
            return list(self.code)
        base = (user - 1) * self.count if self.placement == "split" else 0
        return [1 << (base + idx) for idx in range(self.count)]


class Segment(NamedTuple):
    """A run of levels of a transmitted word."""

    label: str
    length: int
    pieces: Tuple[Piece, ...] = ()

    @property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(piece.offset for piece in self.pieces)


class RelayPiece(NamedTuple):
    """
    What a relay segment forwards from the previous channel use.

    :param str cls: message class label.
    :param int start: index of the first info bit.
    :param int count: number of info bits per user.
    :param str mode: ``"sum"`` sends the XOR of the users' bits,
        ``"stack"`` sends the users' bits one block after the other.
    """

    cls: str
    start: int
    count: int
    mode: str = "sum"


class RelaySegment(NamedTuple):
    """A run of levels of a relay layer."""

    label: str
    length: int
    piece: Optional[RelayPiece] = None


class Layouts(NamedTuple):
    """The complete layout of a scheme at one scale."""

    scheme: SchemeId
    params: LdParams
    scale: int
    users: Tuple[int, ...]
    classes: Dict[str, int]
    tx1: Tuple[Segment, ...]
    tx2: Tuple[Segment, ...]
    relay: Tuple[Tuple[RelaySegment, ...], ...]

    @property
    def q(self) -> int:
        """Word length at the layout's scale."""
        return self.params.q * self.scale

    def tx(self, user: int) -> Tuple[Segment, ...]:
        return self.tx1 if user == 1 else self.tx2


def common_code(length: int, count: int, shift: int) -> Tuple[int, ...]:
    """
    Level masks for `count` common bits sent over `length` levels, such
    that a receiver that also sees the other user's copy shifted by
    `shift` levels resolves both.

    Bits only use the top ``length - shift`` levels. The levels are
    picked top-down while they do not collide with the shifted copy.
    When that falls short, seeded random combinations are tried.

    :raises LayoutOverflow: when no such code is found.
    """
    if count == 0:
        return ()
    usable = length - shift
    if shift < 1 or count > usable or 2 * count > length:
        raise LayoutOverflow(
            f"No common code of {count} bits over {length} levels "
            f"with shift {shift}."
        )
    chosen: List[int] = []
    for idx in range(usable):
        if len(chosen) == count:
            break
        if idx - shift not in chosen:
            chosen.append(idx)
    if len(chosen) == count:
        return tuple(1 << idx for idx in chosen)
    rng = np.random.default_rng([length, count, shift])
    for _ in range(CODE_SEARCH_LIMIT):
        draws = [int(val) for val in rng.integers(1, 1 << usable, size=count)]
        span = LinearSpan()
        if all(span.add(mask, 0) and span.add(mask << shift, 0) for mask in draws):
            return tuple(draws)
    raise LayoutOverflow(
        f"No common code of {count} bits over {length} levels with shift {shift}."
    )


def _fresh(
    cls: str, count: int, start: int = 0, placement: str = "fill"
) -> Tuple[Piece, ...]:
    return (Piece(cls, 0, start, count, placement),) if count else ()


def _code_pieces(code: Tuple[int, ...]) -> Tuple[Piece, ...]:
    return (Piece("cm1", 0, 0, len(code), "code", code),) if code else ()


def _old(cls: str, count: int, start: int = 0) -> Tuple[Piece, ...]:
    return (Piece(cls, -1, start, count),) if count else ()


def _close(q: int, segments: Sequence[Segment], pad: str = "s") -> Tuple[Segment, ...]:
    for seg in segments:
        if seg.length < 0:
            raise LayoutOverflow(f"The segment {seg.label} has a negative length.")
    used = sum(seg.length for seg in segments)
    if used > q:
        raise LayoutOverflow(f"The segments need {used} of {q} levels.")
    return tuple(segments) + (Segment(pad, q - used),)


Item = Union[RelaySegment, Tuple[int, RelaySegment]]


def _relay_layer(
    q: int, items: Sequence[Item], pad: str = "r"
) -> Tuple[RelaySegment, ...]:
    """
    Lay out relay segments top-down. An item given as ``(level, seg)``
    is moved down to `level` with a padding segment.
    """
    out: List[RelaySegment] = []
    top = 0
    for item in items:
        if isinstance(item, RelaySegment):
            seg = item
        else:
            level, seg = item
            gap = level - top
            if gap < 0:
                raise LayoutOverflow(
                    f"The relay segment {seg.label} should start at level "
                    f"{level}, but the levels down to {top} are taken."
                )
            out.append(RelaySegment(f"pad-{seg.label}", gap))
            top = level
        if seg.length < 0:
            raise LayoutOverflow(
                f"The relay segment {seg.label} has a negative length."
            )
        out.append(seg)
        top += seg.length
    if top > q:
        raise LayoutOverflow(f"The relay layer needs {top} of {q} levels.")
    out.append(RelaySegment(pad, q - top))
    return tuple(out)


def _relay(
    label: str,
    length: int,
    cls: str,
    count: int,
    start: int = 0,
    mode: str = "sum",
) -> RelaySegment:
    piece = RelayPiece(cls, start, count, mode) if count else None
    return RelaySegment(label, length, piece)


def _cn_relay(
    c: int, r: int, old_top: int, count: int, label: str = "cn"
) -> Optional[Tuple[int, RelaySegment]]:
    # The relay copy has to meet the cross-received old bits at the receiver.
    visible = max(min(count, c - old_top), 0)
    level = old_top + r - c
    if not visible:
        return None
    if level < 0:
        raise LayoutOverflow(
            f"The relay cannot align {label}: it would start at level {level}."
        )
    return level, _relay(label, visible, "cn", visible)


def _wi1(sp: LdParams, env: Dict[str, int], classes: Dict[str, int]) -> tuple:
    d, c, r, s = sp.astuple()
    q = sp.q
    names = ("l1", "cn", "df1", "df2", "cf", "p")
    l1, cn, df1, df2, cf, p = (env[key] for key in names)
    cn1 = 2 * df1
    tx = _close(
        q,
        [
            Segment("l1", l1),
            Segment(
                "cn1+df1",
                cn1,
                _old("cn", cn1) + _fresh("df1", df1, placement="split"),
            ),
            Segment("cn2", cn - cn1, _old("cn", cn - cn1, cn1)),
            Segment("cf", cf, _fresh("cf", cf)),
            Segment("p", p, _fresh("p", p)),
            Segment("cn", cn, _fresh("cn", cn)),
            Segment("df2", 2 * df2, _fresh("df2", df2, placement="split")),
        ],
    )
    items: List[Item] = [
        _relay("cf", cf, "cf", cf),
        _relay("df1", 2 * df1, "df1", df1, mode="stack"),
        _relay("df2", 2 * df2, "df2", df2, mode="stack"),
    ]
    aligned = _cn_relay(c, r, l1, cn)
    if aligned:
        items.append(aligned)
    return tx, (_relay_layer(q, items),)


def _wi2(sp: LdParams, env: Dict[str, int], classes: Dict[str, int]) -> tuple:
    d, c, r, s = sp.astuple()
    q = sp.q
    cm, cn, cf, p1, p2, l1 = (env[key] for key in ("cm", "cn", "cf", "p1", "p2", "l1"))
    code = common_code(2 * cm, classes["cm"], d - c)
    cm_piece = (Piece("cm", 0, 0, classes["cm"], "code", code),) if code else ()
    tx = _close(
        q,
        [
            Segment("cm", 2 * cm, cm_piece),
            Segment("cn-old", cn, _old("cn", cn)),
            Segment("cf", cf, _fresh("cf", cf)),
            Segment("l1", l1),
            Segment("p1", p1, _fresh("p1", p1)),
            Segment("cn", cn, _fresh("cn", cn)),
            Segment("p2", p2, _fresh("p2", p2)),
        ],
    )
    cf1, cf2 = env["cf1"], env["cf2"]
    forward = _relay_layer(
        q,
        [
            (env["l2"], _relay("cf1", cf1, "cf", cf1)),
            (env["l2"] + cf1 + env["l3"], _relay("cf2", cf2, "cf", cf2, cf1)),
        ]
        if cf
        else [],
    )
    layers = [forward]
    if env["l6"]:
        layers.append(
            _relay_layer(q, [(env["l5"], _relay("cn", env["l6"], "cn", env["l6"]))])
        )
    return tx, tuple(layers)


def _wi3(sp: LdParams, env: Dict[str, int], classes: Dict[str, int]) -> tuple:
    d, c, r, s = sp.astuple()
    q = sp.q
    names = ("lcm1", "cm2", "cn1", "cn2", "cn3", "p1", "p2", "l1u", "l1d")
    lcm1, cm2, cn1, cn2, cn3, p1, p2, l1u, l1d = (env[key] for key in names)
    code = common_code(lcm1, classes["cm1"], d - c)
    tx = _close(
        q,
        [
            Segment("cm1", lcm1, _code_pieces(code)),
            Segment("cm2", cm2, _fresh("cm2", cm2)),
            Segment("cn1-old", cn1, _old("cn1", cn1)),
            Segment("cn2-old", cn2, _old("cn2", cn2)),
            Segment("p1", p1, _fresh("p1", p1)),
            Segment("l1u", l1u),
            Segment("cn1", cn1, _fresh("cn1", cn1)),
            Segment("l1d", l1d),
            Segment("cn3-old", cn3, _old("cn3", cn3)),
            Segment("p2", p2, _fresh("p2", p2)),
            Segment("cn2", cn2, _fresh("cn2", cn2)),
            Segment("cn3", cn3, _fresh("cn3", cn3)),
        ],
    )
    items: List[Item] = []
    if cn1 or cn2 or cn3:
        items = [
            (env["l2"], _relay("cn1", cn1, "cn1", cn1)),
            _relay("cn2", cn2, "cn2", cn2),
            (env["l2"] + cn1 + cn2 + env["l3"], _relay("cn3", cn3, "cn3", cn3)),
        ]
    return tx, (_relay_layer(q, items),)


def _si(sp: LdParams, env: Dict[str, int], classes: Dict[str, int]) -> tuple:
    d, c, r, s = sp.astuple()
    q = sp.q
    names = ("lcm1", "cm2", "cf1", "cf2", "df1", "df2", "cn2", "l1")
    lcm1, cm2, cf1, cf2, df1, df2, cn2, l1 = (env[key] for key in names)
    cn1 = 2 * df1
    code = common_code(lcm1, classes["cm1"], c - d)
    tx = _close(
        q,
        [
            Segment("cm1", lcm1, _code_pieces(code)),
            Segment("cm2", cm2, _fresh("cm2", cm2)),
            Segment("cf1", cf1, _fresh("cf1", cf1)),
            Segment("l1", l1),
            Segment("cf2", cf2, _fresh("cf2", cf2)),
            Segment(
                "cn1+df1",
                cn1,
                _old("cn", cn1) + _fresh("df1", df1, placement="split"),
            ),
            Segment("cn2-old", cn2, _old("cn", cn2, cn1)),
            Segment("df2", 2 * df2, _fresh("df2", df2, placement="split")),
            Segment("cn", cn1 + cn2, _fresh("cn", cn1 + cn2)),
        ],
    )
    items: List[Item] = [
        (env["l2"], _relay("df1", 2 * df1, "df1", df1, mode="stack")),
        _relay("df2", 2 * df2, "df2", df2, mode="stack"),
        _relay("cf1", cf1, "cf1", cf1),
        _relay("cf2", cf2, "cf2", cf2),
    ]
    aligned = _cn_relay(c, r, lcm1 + cm2 + cf1 + l1 + cf2, cn1 + cn2)
    if aligned:
        items.append(aligned)
    return tx, (_relay_layer(q, items),)


def _ii(sp: LdParams, env: Dict[str, int], classes: Dict[str, int]) -> tuple:
    q = sp.q
    cm, df = env["cm"], env["df"]
    tx = _close(
        q,
        [
            Segment("cm", cm, _fresh("cm", cm)),
            Segment("df", df, _fresh("df", df)),
        ],
    )
    return tx, (_relay_layer(q, [_relay("df", df, "df", df, mode="stack")]),)


_BUILDERS = {"WI1": _wi1, "WI2": _wi2, "WI3": _wi3, "SI": _si, "II": _ii}


def build_layouts(scheme: SchemeId, p: LdParams, a: "RateAllocation") -> Layouts:
    """
    Lay out the signals of a scheme.

    Half-integer allocations are laid out on the channel scaled by
    ``a.scale``.

    :param SchemeId scheme: the scheme.
    :param LdParams p: the channel.
    :param RateAllocation a: the allocation of `scheme` on `p`.
    :raises InvalidInput: when the allocation belongs to another scheme
        or channel.
    :raises LayoutOverflow: when the segments do not fit or the relay
        cannot align its signals.
    :return: the layouts of both transmitters and of the relay.
    :rtype: Layouts
    """
    scheme = SchemeId(scheme)
    if a.scheme != scheme or a.params != p:
        raise InvalidInput(
            f"The allocation is for {a.scheme} on {a.params}, "
            f"not for {scheme} on {p}."
        )
    scale = a.scale
    cset = compile_constraints(scheme, p, scale)
    values = {name: int(val * scale) for name, val in a.rates.items()}
    env = cset.derive(values)
    ienv = {key: int(val) for key, val in env.items()}
    classes = {key: int(val * scale) for key, val in a.classes.items()}
    sp = p.scaled(scale)
    tx1, relay = _BUILDERS[scheme.family](sp, ienv, classes)
    users = (1,) if scheme == SchemeId.II else (1, 2)
    tx2 = tx1 if 2 in users else (Segment("s", sp.q),)
    logger.debug(f"Layout of {scheme} on {p} at scale {scale}: {tx1}.")
    return Layouts(scheme, p, scale, users, classes, tx1, tx2, relay)
