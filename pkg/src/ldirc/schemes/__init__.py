from .regime import SchemeId, classify_regime, find_column
from .tables import RateAllocation, allocate, class_rates, scheme_sum_rate
from .layout import Layouts, Piece, RelayPiece, RelaySegment, Segment, build_layouts
from .simulator import (
    DECODE_STEPS,
    AlignedSum,
    DecodeStep,
    SimOutcome,
    TransmissionTrace,
    Violation,
    achieved_rate,
    dump_trace,
    replay_relay,
    simulate,
)

__all__ = [
    "SchemeId",
    "classify_regime",
    "find_column",
    "RateAllocation",
    "allocate",
    "class_rates",
    "scheme_sum_rate",
    "Layouts",
    "Piece",
    "RelayPiece",
    "RelaySegment",
    "Segment",
    "build_layouts",
    "DECODE_STEPS",
    "AlignedSum",
    "DecodeStep",
    "SimOutcome",
    "TransmissionTrace",
    "Violation",
    "achieved_rate",
    "dump_trace",
    "replay_relay",
    "simulate",
]
