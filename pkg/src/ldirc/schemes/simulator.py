"""
Bit-exact block-Markov simulation of a scheme over the LD-IRC.

Messages are random bits. Every transmitted level is tracked both by its
value and by the GF(2) form of message bits it carries. The relay may
only forward what the span of its past observations determines, and the
receivers decode backward, from the last channel use to the first, in
the successive steps of the scheme.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import (
    IO,
    Dict,
    FrozenSet,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from ..errors import InvalidInput, UndefinedOnFailure
from ..gf2 import LinearSpan
from ..ldmodel import BitWord, LdParams, relay_output, rx_output
from .layout import Layouts, build_layouts
from .regime import SchemeId

MYPY = False

if MYPY:
    from .tables import RateAllocation

logger = logging.getLogger("ldirc.simulator")

Forms = List[int]
BitKey = Tuple[int, str, int]
#: Message bits as ``(who, cls, offset)``, `who` being ``"own"``,
#: ``"other"`` or ``"both"`` and `offset` 0 or -1.
BitSpec = Tuple[str, str, int]
#: A form to resolve with the class, users and info bit it stands for.
Goal = Tuple[int, str, Tuple[int, ...], int]
Owner = Optional[Tuple[str, Tuple[int, ...], int]]


class Violation(NamedTuple):
    """The first step at which the scheme broke down."""

    k: int
    stage: str
    users: Tuple[int, ...]
    cls: str
    bit: int
    reason: str
    step: str = ""

    def __str__(self) -> str:
        if len(self.users) == 1:
            who = f"user {self.users[0]}"
        else:
            who = "users " + ", ".join(str(user) for user in self.users)
        text = (
            f"{self.stage} at k={self.k}: bit {self.bit} of {self.cls} "
            f"({who}) {self.reason}"
        )
        return f"{text} in {self.step}" if self.step else text


class AlignedSum(NamedTuple):
    """
    A receiver level where the relay's sum met the other user's old
    signal. `value` is what the two contributions add up to, and it
    equals bit `bit` of the receiver's own class `cls` of use ``k - 1``.
    """

    k: int
    user: int
    level: int
    cls: str
    bit: int
    value: int


@dataclass
class TransmissionTrace:
    """Every word sent and received, and the ledger of message bits."""

    n: int
    params: LdParams
    words: List[Dict[str, BitWord]] = field(default_factory=list)
    injected: Dict[BitKey, Tuple[int, ...]] = field(default_factory=dict)
    recovered: Dict[BitKey, Tuple[Optional[int], ...]] = field(default_factory=dict)
    aligned: List[AlignedSum] = field(default_factory=list)


class SimOutcome(NamedTuple):
    """Result of a simulation."""

    success: bool
    delivered_bits: Dict[int, int]
    violated_step: Optional[Violation]
    scale: int
    trace: TransmissionTrace

    @property
    def total_bits(self) -> int:
        return sum(self.delivered_bits.values())


class DecodeStep(NamedTuple):
    """
    One stage of the successive decoding of a channel use.

    A received level joins the receiver's knowledge in the first stage
    where every unknown in it is either a target or already determined.
    Levels with other unknowns are treated as noise until a later stage.

    :param str name: the stage name reported on failure.
    :param targets: the bits this stage adds to the targets of the
        earlier ones.
    :param goals: the bits that are resolved after this stage.
    :param relay: labels of the relay segments resolved after this stage.
    :param bool rest: every message bit is a target.
    """

    name: str
    targets: Tuple[BitSpec, ...] = ()
    goals: Tuple[BitSpec, ...] = ()
    relay: Tuple[str, ...] = ()
    rest: bool = False


#: The receivers' decoding order of every table family.
DECODE_STEPS: Dict[str, Tuple[DecodeStep, ...]] = {
    "WI1": (
        DecodeStep(
            "relay-forwards",
            (("both", "cf", -1), ("both", "df1", -1), ("both", "df2", -1)),
            relay=("cf", "df1", "df2"),
        ),
        DecodeStep("cn-neutralization", (("own", "cn", -1),), (("own", "cn", -1),)),
        DecodeStep("cf-successive", (("both", "cf", 0),), (("own", "cf", 0),)),
        DecodeStep("private", goals=(("own", "p", 0),), rest=True),
    ),
    "WI2": (
        DecodeStep("common", (("both", "cm", 0),), (("own", "cm", 0),)),
        DecodeStep("cn-neutralization", (("own", "cn", -1),), (("own", "cn", -1),)),
        DecodeStep("cf-successive", (("both", "cf", 0),), (("own", "cf", 0),)),
        DecodeStep("relay-cf1", (("both", "cf", -1),), relay=("cf1",)),
        DecodeStep("private1", (("own", "p1", 0),), (("own", "p1", 0),)),
        DecodeStep("relay-cf2", relay=("cf2",)),
        DecodeStep("private2", goals=(("own", "p2", 0),), rest=True),
    ),
    "WI3": (
        DecodeStep("common", (("both", "cm1", 0),), (("own", "cm1", 0),)),
        DecodeStep(
            "own-signals",
            (
                ("own", "cm2", 0),
                ("own", "cn1", -1),
                ("own", "cn2", -1),
                ("own", "p1", 0),
            ),
            (
                ("own", "cm2", 0),
                ("own", "cn1", -1),
                ("own", "cn2", -1),
                ("own", "p1", 0),
            ),
        ),
        DecodeStep("cross-common", (("other", "cm2", 0),), (("other", "cm2", 0),)),
        DecodeStep("cn3-successive", (("own", "cn3", -1),), (("own", "cn3", -1),)),
        DecodeStep("private", goals=(("own", "p2", 0),), rest=True),
    ),
    "SI": (
        DecodeStep("common", (("both", "cm1", 0),), (("own", "cm1", 0),)),
        DecodeStep(
            "cross-signals",
            (("other", "cm2", 0), ("both", "cf1", 0)),
            (("other", "cm2", 0), ("own", "cf1", 0)),
        ),
        DecodeStep(
            "relay-forwards",
            (
                ("both", "df1", -1),
                ("both", "df2", -1),
                ("both", "cf1", -1),
                ("both", "cf2", -1),
            ),
            relay=("df1", "df2", "cf1", "cf2"),
        ),
        DecodeStep("own-common", (("own", "cm2", 0),), (("own", "cm2", 0),)),
        DecodeStep("cf-successive", (("both", "cf2", 0),), (("own", "cf2", 0),)),
        DecodeStep("cn-neutralization", goals=(("own", "cn", -1),), rest=True),
    ),
    "II": (
        DecodeStep("relay-forwards", (("own", "df", -1),), relay=("df",)),
        DecodeStep("direct", goals=(("own", "cm", 0),), rest=True),
    ),
}


def _shift(forms: Sequence[int], shift: int) -> Forms:
    size = len(forms)
    out = [0] * size
    for idx in range(shift, size):
        out[idx] = forms[idx - shift]
    return out


def _xor(*rows: Sequence[int]) -> Forms:
    out = [0] * len(rows[0])
    for row in rows:
        for idx, val in enumerate(row):
            out[idx] ^= val
    return out


def _units(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class _Messages:
    """
    Message bits of every user, class and channel use as GF(2) unknowns.
    Bits of later channel uses get higher indices.
    """

    def __init__(self, layouts: Layouts, n: int, seed: int, zero: bool) -> None:
        self.n = n
        self.users = layouts.users
        self.classes = dict(layouts.classes)
        self._index: Dict[Tuple[int, str, int, int], int] = {}
        self._first: Dict[int, int] = {}
        for k in range(1, n):
            self._first[k] = len(self._index)
            for user in layouts.users:
                for cls, count in layouts.classes.items():
                    for bit in range(count):
                        self._index[(user, cls, k, bit)] = len(self._index)
        self._first[n] = len(self._index)
        self._keys = {idx: key for key, idx in self._index.items()}
        size = len(self._index)
        if zero:
            bits = np.zeros(size, dtype=np.uint8)
        else:
            bits = np.random.default_rng(seed).integers(0, 2, size=size, dtype=np.uint8)
        self.bits = bits
        self.state = sum(1 << idx for idx in np.flatnonzero(bits).tolist())

    def mask(self, user: int, cls: str, k: int, bit: int) -> int:
        idx = self._index.get((user, cls, k, bit))
        return 0 if idx is None else 1 << idx

    def value(self, mask: int) -> int:
        return bin(mask & self.state).count("1") & 1

    def first(self, k: int) -> int:
        """Index of the first bit of channel use `k`."""
        return self._first[min(max(k, 1), self.n)]

    def key(self, mask: int) -> Optional[Tuple[int, str, int, int]]:
        """The single bit a form stands for, if it is a single bit."""
        if mask <= 0 or mask & (mask - 1):
            return None
        return self._keys.get(mask.bit_length() - 1)

    def block(self, user: int, cls: str, k: int, count: int) -> Tuple[int, ...]:
        return tuple(
            int(self.bits[self._index[(user, cls, k, bit)]]) for bit in range(count)
        )

    def select(self, specs: Sequence[BitSpec], user: int, k: int) -> Iterator[Goal]:
        """The bits of `specs` seen from receiver `user` at channel use `k`."""
        other = 3 - user
        for who, cls, offset in specs:
            if who == "own":
                users: Tuple[int, ...] = (user,)
            elif who == "other":
                users = (other,)
            else:
                users = self.users
            for owner in users:
                for bit in range(self.classes.get(cls, 0)):
                    mask = self.mask(owner, cls, k + offset, bit)
                    if mask:
                        yield mask, cls, (owner,), bit


def _tx_forms(
    layouts: Layouts,
    msgs: _Messages,
    user: int,
    k: int,
    old: Optional[FrozenSet[str]] = None,
) -> Forms:
    # With `old`, only the previous-use pieces of those classes count.
    forms = [0] * layouts.q
    top = 0
    for seg in layouts.tx(user):
        for piece in seg.pieces:
            if old is not None and (piece.offset != -1 or piece.cls not in old):
                continue
            for idx, levels in enumerate(piece.masks(user)):
                var = msgs.mask(user, piece.cls, k + piece.offset, piece.start + idx)
                level = top
                while levels:
                    if levels & 1:
                        forms[level] ^= var
                    levels >>= 1
                    level += 1
        top += seg.length
    return forms


def _relay_pieces(
    layouts: Layouts, msgs: _Messages, k: int
) -> Iterator[Tuple[str, int, Goal]]:
    """Every relay level with a piece, as segment label, level and form."""
    for layer in layouts.relay:
        top = 0
        for seg in layer:
            piece = seg.piece
            if piece is not None:
                for idx in range(piece.count):
                    bit = piece.start + idx
                    if piece.mode == "stack":
                        for num, user in enumerate(layouts.users):
                            mask = msgs.mask(user, piece.cls, k - 1, bit)
                            level = top + num * piece.count + idx
                            yield seg.label, level, (mask, piece.cls, (user,), bit)
                    else:
                        mask = 0
                        for user in layouts.users:
                            mask ^= msgs.mask(user, piece.cls, k - 1, bit)
                        goal = (mask, piece.cls, layouts.users, bit)
                        yield seg.label, top + idx, goal
            top += seg.length


def _relay_forms(
    layouts: Layouts,
    msgs: _Messages,
    k: int,
    classes: Optional[FrozenSet[str]] = None,
) -> Tuple[Forms, List[Owner]]:
    forms = [0] * layouts.q
    owners: List[Owner] = [None] * layouts.q
    for _, level, (mask, cls, users, bit) in _relay_pieces(layouts, msgs, k):
        if classes is not None and cls not in classes:
            continue
        forms[level] ^= mask
        owners[level] = (cls, users, bit)
    return forms, owners


def _relay_goals(
    layouts: Layouts, msgs: _Messages, k: int, labels: Sequence[str]
) -> List[Goal]:
    return [
        goal
        for label, _, goal in _relay_pieces(layouts, msgs, k)
        if label in labels and goal[0]
    ]


def _relay_input(layouts: Layouts, msgs: _Messages, k: int) -> Forms:
    sp = layouts.params.scaled(layouts.scale)
    fx = [_tx_forms(layouts, msgs, user, k) for user in (1, 2)]
    return _shift(_xor(*fx), sp.q - sp.n_s)


def _cn_classes(layouts: Layouts) -> FrozenSet[str]:
    return frozenset(
        seg.piece.cls
        for layer in layouts.relay
        for seg in layer
        if seg.piece is not None
        and seg.piece.mode == "sum"
        and seg.piece.cls.startswith("cn")
    )


def _aligned_sums(
    layouts: Layouts, msgs: _Messages, k: int, cn: FrozenSet[str]
) -> List[AlignedSum]:
    sp = layouts.params.scaled(layouts.scale)
    q = sp.q
    relay = _shift(_relay_forms(layouts, msgs, k, cn)[0], q - sp.n_r)
    out = []
    for user in layouts.users:
        other = _shift(_tx_forms(layouts, msgs, 3 - user, k, cn), q - sp.n_c)
        for level, (theirs, forwarded) in enumerate(zip(other, relay)):
            if not forwarded:
                continue
            key = msgs.key(theirs ^ forwarded)
            if key is None or key[0] != user or key[2] != k - 1:
                continue
            value = msgs.value(theirs) ^ msgs.value(forwarded)
            out.append(AlignedSum(k, user, level, key[1], key[3], value))
    return out


def replay_relay(
    scheme: SchemeId,
    p: LdParams,
    a: "RateAllocation",
    n: int,
    history: Sequence[BitWord],
) -> BitWord:
    """
    Compute the relay's word from its own observations alone.

    :param SchemeId scheme: the scheme.
    :param LdParams p: the channel.
    :param RateAllocation a: the allocation of `scheme` on `p`.
    :param int n: number of channel uses of the run.
    :param history: the words the relay received in the channel uses
        before the one to compute.
    :raises InvalidInput: when the history covers every channel use.
    :raises UndefinedOnFailure: when the history does not determine a
        level of the word.
    :return: the relay's word in channel use ``len(history) + 1``.
    :rtype: BitWord
    """
    k = len(history) + 1
    if k > n:
        raise InvalidInput(f"A run of {n} channel uses has no use {k}.")
    layouts = build_layouts(scheme, p, a)
    msgs = _Messages(layouts, n, 0, True)
    span = LinearSpan()
    for use, word in enumerate(history, start=1):
        for mask, val in zip(_relay_input(layouts, msgs, use), word):
            span.add(mask, val)
    forms, _ = _relay_forms(layouts, msgs, k)
    bits = []
    for level, mask in enumerate(forms):
        val = span.solve(mask)
        if val is None:
            raise UndefinedOnFailure(
                f"The relay observations do not determine level {level} at k={k}."
            )
        bits.append(val)
    return BitWord(bits)


def _decode(
    layouts: Layouts,
    msgs: _Messages,
    user: int,
    received: Sequence[Tuple[Forms, BitWord]],
    trace: TransmissionTrace,
) -> Tuple[int, Optional[Violation]]:
    """Backward successive decoding at one receiver."""
    n = len(received)
    steps = DECODE_STEPS[layouts.scheme.family]
    known = LinearSpan()
    joint = LinearSpan()
    delivered = 0
    violation: Optional[Violation] = None
    stage = f"rx{user}"
    for k in range(n, 0, -1):
        pending = list(zip(*received[k - 1]))
        for mask, val in pending:
            joint.add(mask, val)
        targets = 0
        for step in steps:
            if step.rest:
                usable, pending = pending, []
            else:
                for mask, _, _, _ in msgs.select(step.targets, user, k):
                    targets |= mask
                allowed = known.copy()
                for unit in _units(targets):
                    allowed.add(unit, 0)
                usable = [row for row in pending if row[0] in allowed]
                pending = [row for row in pending if row[0] not in allowed]
            for mask, val in usable:
                known.add(mask, val)
            goals = list(msgs.select(step.goals, user, k))
            goals += _relay_goals(layouts, msgs, k, step.relay)
            for mask, cls, users, bit in goals:
                if violation is None and mask not in known:
                    reason = "undetermined"
                    if mask in joint:
                        reason += ", jointly decodable"
                    violation = Violation(k, stage, users, cls, bit, reason, step.name)
        if k < n:
            for cls, count in layouts.classes.items():
                if not count:
                    continue
                sent = msgs.block(user, cls, k, count)
                got = tuple(
                    known.solve(msgs.mask(user, cls, k, bit)) for bit in range(count)
                )
                trace.injected[(user, cls, k)] = sent
                trace.recovered[(user, cls, k)] = got
                for bit, (exp, val) in enumerate(zip(sent, got)):
                    if val == exp:
                        delivered += 1
                    elif violation is None:
                        reason = "not decodable" if val is None else "decoded wrong"
                        violation = Violation(
                            k, stage, (user,), cls, bit, reason, steps[-1].name
                        )
        known.truncate(msgs.first(k))
        joint.truncate(msgs.first(k))
    return delivered, violation


def simulate(
    scheme: SchemeId,
    p: LdParams,
    a: "RateAllocation",
    n: int,
    seed: int = 0,
    zero_messages: bool = False,
) -> SimOutcome:
    """
    Run a scheme over `n` channel uses.

    Messages are sent in uses 1 to n-1. Allocations with half-integer
    rates run on the channel scaled by ``a.scale``. The relay computes
    every level it sends from the span of what it received before. A
    level it cannot determine is sent as zero and reported as the
    violation.

    :param SchemeId scheme: the scheme.
    :param LdParams p: the channel.
    :param RateAllocation a: the allocation of `scheme` on `p`.
    :param int n: number of channel uses, at least 3.
    :param int seed: seed of the message bits.
    :param bool zero_messages: send all-zero messages.
    :raises InvalidInput: when n < 3 or the allocation does not match.
    :raises LayoutOverflow: when the layout cannot be built.
    :return: the outcome with the full trace.
    :rtype: SimOutcome
    """
    if n < 3:
        raise InvalidInput("At least three channel uses are needed.")
    layouts = build_layouts(scheme, p, a)
    sp = layouts.params.scaled(layouts.scale)
    q = sp.q
    msgs = _Messages(layouts, n, seed, zero_messages)
    trace = TransmissionTrace(n, sp)
    violation: Optional[Violation] = None
    cn = _cn_classes(layouts)

    relay_span = LinearSpan()
    received: Dict[int, List[Tuple[Forms, BitWord]]] = {1: [], 2: []}
    for k in range(1, n + 1):
        fx = {user: _tx_forms(layouts, msgs, user, k) for user in (1, 2)}
        fr, owners = _relay_forms(layouts, msgs, k)
        bits = []
        for level, mask in enumerate(fr):
            val = relay_span.solve(mask)
            if val is None:
                if violation is None:
                    cls, users, bit = owners[level] or ("", layouts.users, level)
                    violation = Violation(k, "relay", users, cls, bit, "undetermined")
                fr[level] = 0
                val = 0
            bits.append(val)
        x1 = BitWord(msgs.value(mask) for mask in fx[1])
        x2 = BitWord(msgs.value(mask) for mask in fx[2])
        xr = BitWord(bits)
        yr = relay_output(sp, x1, x2)
        words = {"x1": x1, "x2": x2, "xr": xr, "yr": yr}
        for mask, val in zip(_relay_input(layouts, msgs, k), yr):
            relay_span.add(mask, val)
        for j in (1, 2):
            own, other = (fx[1], fx[2]) if j == 1 else (fx[2], fx[1])
            forms = _xor(
                _shift(own, q - sp.n_d),
                _shift(other, q - sp.n_c),
                _shift(fr, q - sp.n_r),
            )
            word = rx_output(sp, j, x1, x2, xr)
            received[j].append((forms, word))
            words[f"y{j}"] = word
        if cn:
            trace.aligned.extend(_aligned_sums(layouts, msgs, k, cn))
        trace.words.append(words)

    delivered = {user: 0 for user in layouts.users}
    for user in layouts.users:
        delivered[user], found = _decode(layouts, msgs, user, received[user], trace)
        if violation is None:
            violation = found
    success = violation is None
    if not success:
        logger.info(f"Simulation of {scheme} on {p} failed: {violation}.")
    return SimOutcome(success, delivered, violation, layouts.scale, trace)


def achieved_rate(outcome: SimOutcome, n: int) -> Fraction:
    """
    Delivered bits of all users per channel use of the unscaled channel.

    :raises UndefinedOnFailure: when the simulation failed.
    """
    if not outcome.success:
        raise UndefinedOnFailure(f"The simulation failed: {outcome.violated_step}.")
    return Fraction(outcome.total_bits, n * outcome.scale)


def dump_trace(trace: TransmissionTrace, stream: IO[str]) -> None:
    """
    Write every channel use of a trace as a line of bit strings.

    :param TransmissionTrace trace: the trace.
    :param stream: a text stream.
    """
    names = ("x1", "x2", "xr", "y1", "y2", "yr")
    stream.write("k " + " ".join(names) + "\n")
    for k, words in enumerate(trace.words, start=1):
        stream.write(f"{k} " + " ".join(str(words[name]) for name in names) + "\n")
