"""
Exhaustive verification sweeps over the LD grid and GDoF curves.
"""
import csv
import itertools
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import (
    IO,
    Dict,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .capacity import ld_capacity_ic, ld_sum_capacity, ld_upper_bounds
from .errors import InvalidInput, IrcError
from .gdof import GdofParams, gdof, gdof_ic, gdof_upper_bounds
from .ldmodel import LdParams
from .pool import SweepPool
from .rateopt import check_allocation, compile_constraints, optimize
from .schemes import allocate, classify_regime, scheme_sum_rate, simulate
from .utils import format_decimal, parse_rational

logger = logging.getLogger("ldirc.verify")

#: Checks a sweep can run on every grid point.
CHECKS = ("sandwich", "tables", "simulate", "optimize", "monotone", "relay-helps")

#: The (beta, gamma) pairs of the published GDoF curves.
GOLDEN_CURVES = (
    ("1/10", "7/10"),
    ("2/5", "7/10"),
    ("7/10", "7/10"),
    ("3/2", "7/10"),
    ("1/5", "3"),
    ("3/2", "3"),
    ("2", "3"),
    ("6", "3"),
)

Range = Tuple[int, int]


@dataclass(frozen=True)
class SweepSpec:
    """
    A verification sweep over integer level tuples with n_c < n_s.

    :param n_d: inclusive range of n_d, the same for the other levels.
    :param checks: names of the checks to run, from :data:`CHECKS`.
    :param bool skip_equal_gains: leave out tuples with n_c = n_d.
    :param int blocks: channel uses of every simulation.
    :param seeds: message seeds, one simulation per seed.
    :param int workers: worker processes, 0 runs in-process.
    :raises InvalidInput: on an unknown check, a negative level or fewer
        than three blocks.
    """

    n_d: Range = (0, 8)
    n_c: Range = (0, 8)
    n_r: Range = (0, 8)
    n_s: Range = (0, 8)
    checks: Tuple[str, ...] = ("sandwich",)
    skip_equal_gains: bool = False
    blocks: int = 10
    seeds: Tuple[int, ...] = (1,)
    workers: int = 0

    def __post_init__(self) -> None:
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise InvalidInput(f"Unknown checks: {sorted(unknown)}.")
        for rng in (self.n_d, self.n_c, self.n_r, self.n_s):
            if rng[0] < 0:
                raise InvalidInput("The level ranges must be non-negative.")
        if self.blocks < 3:
            raise InvalidInput("A simulation needs at least three blocks.")
        if self.workers < 0:
            raise InvalidInput("The workers must be non-negative.")

    @classmethod
    def uniform(cls, low: int, high: int, **kwargs: object) -> "SweepSpec":
        """ A sweep with the same range for every level. """
        rng = (low, high)
        return cls(rng, rng, rng, rng, **kwargs)  # type: ignore[arg-type]

    def points(self) -> Iterator[LdParams]:
        """ The grid points in lexicographic (n_d, n_c, n_r, n_s) order. """
        ranges = [
            range(lo, hi + 1) for lo, hi in (self.n_d, self.n_c, self.n_r, self.n_s)
        ]
        for d, c, r, s in itertools.product(*ranges):
            if c >= s:
                continue
            if self.skip_equal_gains and c == d:
                continue
            yield LdParams(d, c, r, s)


class PointTask(NamedTuple):
    params: LdParams
    checks: Tuple[str, ...]
    blocks: int
    seeds: Tuple[int, ...]


def _check_sandwich(p: LdParams, task: PointTask) -> List[str]:
    capacity = ld_sum_capacity(p)
    bounds = ld_upper_bounds(p)
    scheme, _ = classify_regime(p)
    achieved = scheme_sum_rate(scheme, p)
    if bounds.value == capacity == achieved:
        return []
    return [
        f"{p}: bounds {bounds.value} ({bounds.binding}), capacity {capacity}, "
        f"{scheme} achieves {achieved}"
    ]


def _check_tables(p: LdParams, task: PointTask) -> List[str]:
    scheme, _ = classify_regime(p)
    alloc = allocate(scheme, p)
    out = []
    cset = compile_constraints(scheme, p, alloc.scale)
    violated = check_allocation(cset, alloc)
    if violated:
        out.append(f"{p}: {alloc} violates {cset.describe(violated)}")
    expected = scheme_sum_rate(scheme, p)
    if alloc.sum_rate != expected:
        out.append(f"{p}: {alloc} sums to {alloc.sum_rate}, not {expected}")
    return out


def _check_simulate(p: LdParams, task: PointTask) -> List[str]:
    scheme, _ = classify_regime(p)
    alloc = allocate(scheme, p)
    out = []
    for seed in task.seeds:
        outcome = simulate(scheme, p, alloc, task.blocks, seed)
        expected = (task.blocks - 1) * alloc.sum_rate * outcome.scale
        if not outcome.success:
            out.append(f"{p} seed {seed}: {outcome.violated_step}")
        elif outcome.total_bits != expected:
            out.append(
                f"{p} seed {seed}: delivered {outcome.total_bits} bits, "
                f"expected {expected}"
            )
    return out


def _check_optimize(p: LdParams, task: PointTask) -> List[str]:
    scheme, _ = classify_regime(p)
    alloc = allocate(scheme, p)
    result = optimize(compile_constraints(scheme, p, alloc.scale))
    capacity = ld_sum_capacity(p)
    if result.value == alloc.sum_rate == capacity:
        return []
    return [
        f"{p}: optimum {result.value}, table {alloc.sum_rate}, capacity {capacity}"
    ]


def _check_monotone(p: LdParams, task: PointTask) -> List[str]:
    if p.n_c == p.n_d:
        return []
    stronger = LdParams(p.n_d, p.n_c, p.n_r, p.n_s + 1)
    if ld_sum_capacity(p) <= ld_sum_capacity(stronger):
        return []
    return [f"{p}: capacity drops when n_s grows"]


def _check_relay_helps(p: LdParams, task: PointTask) -> List[str]:
    if ld_sum_capacity(p) >= ld_capacity_ic(p):
        return []
    return [f"{p}: capacity {ld_sum_capacity(p)} < IC capacity {ld_capacity_ic(p)}"]


_CHECK_FUNCS = {
    "sandwich": _check_sandwich,
    "tables": _check_tables,
    "simulate": _check_simulate,
    "optimize": _check_optimize,
    "monotone": _check_monotone,
    "relay-helps": _check_relay_helps,
}


def evaluate_point(task: PointTask) -> Dict[str, List[str]]:
    """
    Run the checks of a task on one grid point.

    Errors raised by the library are reported as failures.
    """
    out: Dict[str, List[str]] = {}
    for name in task.checks:
        try:
            out[name] = _CHECK_FUNCS[name](task.params, task)
        except IrcError as exc:
            out[name] = [f"{task.params}: {exc}"]
    return out


@dataclass
class VerifyReport:
    """Result of a sweep."""

    grid_size: int
    checks: Dict[str, List[str]] = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    def as_dict(self) -> Dict[str, object]:
        return {
            "grid_size": self.grid_size,
            "checks": [
                {"name": name, "failures": failures}
                for name, failures in self.checks.items()
            ],
            "elapsed_ms": self.elapsed_ms,
        }

    def summary(self) -> str:
        lines = [f"{self.grid_size} tuples checked in {self.elapsed_ms} ms"]
        for name, failures in self.checks.items():
            lines.append(f"  {name}: {len(failures)} failures")
            lines.extend(f"    {fail}" for fail in failures[:5])
        return "\n".join(lines)


def run_verify(spec: SweepSpec, pool: Optional[SweepPool] = None) -> VerifyReport:
    """
    Run a verification sweep.

    :param SweepSpec spec: the sweep.
    :param SweepPool pool: the pool to use, a new one with
        ``spec.workers`` workers by default.
    :return: the report.
    :rtype: VerifyReport
    """
    start = time.perf_counter()
    tasks = [
        PointTask(p, tuple(spec.checks), spec.blocks, tuple(spec.seeds))
        for p in spec.points()
    ]
    pool = pool if pool is not None else SweepPool(spec.workers)
    with pool.spawn():
        results = pool.map(evaluate_point, tasks)
    report = VerifyReport(len(tasks), {name: [] for name in spec.checks})
    for result in results:
        for name, failures in result.items():
            report.checks[name].extend(failures)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    if not report.ok:
        logger.warning(f"Verification failed: {report.summary()}")
    return report


@dataclass(frozen=True)
class CurveSpec:
    """
    A GDoF curve over alpha for fixed beta and gamma.

    :raises InvalidInput: when the step is not positive or a value is
        negative.
    """

    beta: Fraction
    gamma: Fraction
    alpha_min: Fraction = Fraction(0)
    alpha_max: Fraction = Fraction(3)
    step: Fraction = Fraction(1, 20)
    include_ic: bool = True

    def __post_init__(self) -> None:
        for name in ("beta", "gamma", "alpha_min", "alpha_max", "step"):
            val = parse_rational(getattr(self, name))
            if val < 0:
                raise InvalidInput(f"The {name} must be non-negative.")
            object.__setattr__(self, name, val)
        if self.step <= 0:
            raise InvalidInput("The step must be positive.")

    def alphas(self) -> Iterator[Fraction]:
        alpha = self.alpha_min
        while alpha <= self.alpha_max:
            yield alpha
            alpha += self.step


class CurveRow(NamedTuple):
    alpha: Fraction
    d_irc: Fraction
    d_ic: Optional[Fraction]
    binding: str


def curve_rows(spec: CurveSpec) -> List[CurveRow]:
    """
    Evaluate the GDoF of the IRC, and optionally of the IC, along alpha.

    :param CurveSpec spec: the curve.
    :return: one row per alpha value.
    """
    rows = []
    for alpha in spec.alphas():
        params = GdofParams(alpha, spec.beta, spec.gamma)
        rows.append(
            CurveRow(
                alpha,
                gdof(params),
                gdof_ic(alpha) if spec.include_ic else None,
                gdof_upper_bounds(params).binding,
            )
        )
    return rows


def write_curve(rows: Sequence[CurveRow], stream: IO[str]) -> None:
    """ Write curve rows as CSV with an ``alpha,d_irc,d_ic,binding`` header. """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("alpha", "d_irc", "d_ic", "binding"))
    for row in rows:
        writer.writerow(
            (
                format_decimal(row.alpha),
                format_decimal(row.d_irc),
                "" if row.d_ic is None else format_decimal(row.d_ic),
                row.binding,
            )
        )


def golden_name(beta: Union[str, Fraction], gamma: Union[str, Fraction]) -> str:
    """ File name of a golden curve, like ``curve_b0.1_g0.7.csv``. """
    beta_txt = format_decimal(parse_rational(beta))
    gamma_txt = format_decimal(parse_rational(gamma))
    return f"curve_b{beta_txt}_g{gamma_txt}.csv"
