from .ldmodel import BitWord, LdParams, Regime, relay_output, rx_output, shift_down
from .capacity import (
    GDOF_BOUND_REFS,
    LD_BOUND_REFS,
    Bound,
    BoundSet,
    ld_capacity_ic,
    ld_sum_capacity,
    ld_upper_bounds,
)
from .gdof import GdofParams, gdof, gdof_ic, gdof_upper_bounds, scale_to_ld
from .gf2 import LinearSpan
from .schemes import (
    RateAllocation,
    SchemeId,
    SimOutcome,
    achieved_rate,
    allocate,
    build_layouts,
    classify_regime,
    replay_relay,
    scheme_sum_rate,
    simulate,
)
from .rateopt import (
    ConstraintSet,
    OptResult,
    check_allocation,
    compile_constraints,
    optimize,
)
from .gaussian import (
    SubchannelPlan,
    gdof_achievable_check,
    gdof_limit,
    plan_subchannels,
)
from .pool import ClosedPool, PoolError, SweepPool
from .errors import *
from .utils import *

__version__ = "0.3.1"

__all__ = [
    "BitWord",
    "LdParams",
    "Regime",
    "relay_output",
    "rx_output",
    "shift_down",
    "GDOF_BOUND_REFS",
    "LD_BOUND_REFS",
    "Bound",
    "BoundSet",
    "ld_capacity_ic",
    "ld_sum_capacity",
    "ld_upper_bounds",
    "GdofParams",
    "gdof",
    "gdof_ic",
    "gdof_upper_bounds",
    "scale_to_ld",
    "LinearSpan",
    "RateAllocation",
    "SchemeId",
    "SimOutcome",
    "achieved_rate",
    "allocate",
    "build_layouts",
    "classify_regime",
    "replay_relay",
    "scheme_sum_rate",
    "simulate",
    "ConstraintSet",
    "OptResult",
    "check_allocation",
    "compile_constraints",
    "optimize",
    "SubchannelPlan",
    "gdof_achievable_check",
    "gdof_limit",
    "plan_subchannels",
    "ClosedPool",
    "PoolError",
    "SweepPool",
    # Errors
    "IrcError",
    "InvalidInput",
    "OutOfScope",
    "NoMatchingColumn",
    "LayoutOverflow",
    "UnknownVariable",
    "UndefinedOnFailure",
    # Util functions
    "format_decimal",
    "parse_rational",
    "set_debug",
]
