"""
Command line front end of the LD-IRC lab.

Machine readable output (CSV, JSON) goes to stdout, human reports and
summaries to stderr. Library errors exit with 2, decode and verification
failures with 1.
"""
import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import IO, List, Optional, Sequence

from .capacity import BoundSet, ld_capacity_ic, ld_sum_capacity, ld_upper_bounds
from .errors import IrcError, OutOfScope
from .gaussian import plan_subchannels
from .gdof import GdofParams, gdof, gdof_ic, gdof_upper_bounds
from .ldmodel import LdParams
from .schemes import (
    SchemeId,
    achieved_rate,
    allocate,
    classify_regime,
    dump_trace,
    simulate,
)
from .utils import parse_rational, set_debug
from .verify import (
    CHECKS,
    GOLDEN_CURVES,
    CurveSpec,
    SweepSpec,
    curve_rows,
    golden_name,
    run_verify,
    write_curve,
)

logger = logging.getLogger("ldirc.cli")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except IrcError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> List[int]:
    try:
        return [int(val) for val in text.split(",") if val.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Not a list of integers: {text!r}.") from exc


def _check_list(text: str) -> List[str]:
    names = [val.strip() for val in text.split(",") if val.strip()]
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"Unknown checks {unknown}, choose from {', '.join(CHECKS)}."
        )
    return names


def _add_levels(parser: argparse.ArgumentParser) -> None:
    for name, help_txt in (
        ("nd", "direct link level"),
        ("nc", "cross link level"),
        ("nr", "relay-destination link level"),
        ("ns", "source-relay link level"),
    ):
        parser.add_argument(f"--{name}", type=int, required=True, help=help_txt)


def _add_exponents(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=_rational, required=True)
    parser.add_argument("--beta", type=_rational, required=True)
    parser.add_argument("--gamma", type=_rational, required=True)


def _levels(args: argparse.Namespace) -> LdParams:
    return LdParams(args.nd, args.nc, args.nr, args.ns)


def _print_bounds(bounds: BoundSet, err: IO[str]) -> None:
    binding = bounds.binding
    for bound in bounds:
        if not bound.applicable:
            mark = "n/a"
        elif bound.label == binding:
            mark = "binding"
        else:
            mark = ""
        line = f"  {bound.label:<20} {bound.ref:<5} {str(bound.value):>8}  {mark}"
        print(line.rstrip(), file=err)


def cmd_capacity(args: argparse.Namespace, out: IO[str]) -> int:
    err = sys.stderr
    p = _levels(args)
    bounds = ld_upper_bounds(p)
    print(f"channel   {p}", file=err)
    print(f"regime    {p.regime.name}", file=err)
    try:
        scheme, tag = classify_regime(p)
        print(f"scheme    {scheme} ({tag})", file=err)
    except OutOfScope:
        print("scheme    none, the relay link is too weak", file=err)
    print(f"capacity  {ld_sum_capacity(p)}", file=err)
    print(f"ic        {ld_capacity_ic(p)}", file=err)
    print(f"binding   {bounds.binding}", file=err)
    print("bounds:", file=err)
    _print_bounds(bounds, err)
    return 0


def cmd_bounds(args: argparse.Namespace, out: IO[str]) -> int:
    err = sys.stderr
    p = _levels(args)
    bounds = ld_upper_bounds(p)
    print(f"channel   {p}", file=err)
    print(f"minimum   {bounds.value} ({bounds.binding})", file=err)
    _print_bounds(bounds, err)
    return 0


def cmd_gdof(args: argparse.Namespace, out: IO[str]) -> int:
    err = sys.stderr
    g = GdofParams.create(args.alpha, args.beta, args.gamma)
    bounds = gdof_upper_bounds(g)
    print(f"exponents {g}", file=err)
    print(f"d_irc     {gdof(g)}", file=err)
    print(f"d_ic      {gdof_ic(g.alpha)}", file=err)
    print(f"binding   {bounds.binding}", file=err)
    print("bounds:", file=err)
    _print_bounds(bounds, err)
    return 0


def cmd_curve(args: argparse.Namespace, out: IO[str]) -> int:
    if args.golden:
        os.makedirs(args.golden, exist_ok=True)
        for beta, gamma in GOLDEN_CURVES:
            spec = CurveSpec(
                parse_rational(beta),
                parse_rational(gamma),
                args.alpha_min,
                args.alpha_max,
                args.step,
            )
            path = os.path.join(args.golden, golden_name(beta, gamma))
            with open(path, "w", newline="") as stream:
                write_curve(curve_rows(spec), stream)
            logger.info(f"Curve is written to {path}.")
        return 0
    if args.beta is None or args.gamma is None:
        raise argparse.ArgumentTypeError("--beta and --gamma are required.")
    spec = CurveSpec(
        args.beta,
        args.gamma,
        args.alpha_min,
        args.alpha_max,
        args.step,
        not args.no_ic,
    )
    rows = curve_rows(spec)
    if args.out:
        with open(args.out, "w", newline="") as stream:
            write_curve(rows, stream)
    else:
        write_curve(rows, out)
    return 0


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    rng = (args.min_level, args.max_level)
    spec = SweepSpec(
        rng,
        rng,
        rng,
        rng,
        checks=tuple(args.checks),
        skip_equal_gains=args.skip_equal_gains,
        blocks=args.blocks,
        seeds=tuple(args.seeds),
        workers=args.workers,
    )
    report = run_verify(spec)
    json.dump(report.as_dict(), out, indent=2)
    out.write("\n")
    print(report.summary(), file=sys.stderr)
    return 0 if report.ok else 1


def cmd_simulate(args: argparse.Namespace, out: IO[str]) -> int:
    err = sys.stderr
    p = _levels(args)
    if args.scheme:
        scheme = SchemeId.parse(args.scheme)
    else:
        scheme, _ = classify_regime(p)
    alloc = allocate(scheme, p)
    outcome = simulate(scheme, p, alloc, args.n, args.seed, args.zero_messages)
    print(f"scheme      {scheme}", file=err)
    print(f"channel     {p}", file=err)
    print(f"allocation  {alloc}", file=err)
    print(f"blocks      {args.n}", file=err)
    print(f"seed        {args.seed}", file=err)
    print(f"success     {'yes' if outcome.success else 'no'}", file=err)
    users = ", ".join(
        f"user {user}: {bits}" for user, bits in sorted(outcome.delivered_bits.items())
    )
    print(f"delivered   {outcome.total_bits} bits ({users})", file=err)
    if args.dump_trace:
        with open(args.dump_trace, "w", newline="") as stream:
            dump_trace(outcome.trace, stream)
    if not outcome.success:
        print(f"violated    {outcome.violated_step}", file=err)
        print(f"asymptotic  {alloc.sum_rate}", file=err)
        return 1
    print(f"achieved    {achieved_rate(outcome, args.n)}", file=err)
    print(f"asymptotic  {alloc.sum_rate}", file=err)
    return 0


def cmd_subchannels(args: argparse.Namespace, out: IO[str]) -> int:
    err = sys.stderr
    plan = plan_subchannels(args.power, args.gd, args.gc, args.gr, args.gs, args.n)
    print(f"sub-channels {plan.n}", file=err)
    print(f"log2 delta   {plan.log_delta}", file=err)
    print(f"levels       {plan.levels}", file=err)
    print(f"rate         {plan.rate} bits per sub-channel", file=err)
    print(f"usable       {'yes' if plan.usable else 'no'}", file=err)
    print(f"relay power  {plan.relay_power:.6g}", file=err)
    alignment = "none" if plan.alignment is None else str(plan.alignment)
    print(f"alignment    {alignment}", file=err)
    print(f"exact        {'yes' if plan.exact else 'no'}", file=err)
    return 0


def build_parser() -> argparse.ArgumentParser:
    """ Create the argument parser with every subcommand. """
    parser = argparse.ArgumentParser(
        prog="ldirc",
        description="Exact capacity, GDoF and scheme verification for the "
        "symmetric LD interference relay channel.",
    )
    parser.add_argument("--debug", action="store_true", help="debug logging")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("capacity", help="sum-capacity of an LD channel")
    _add_levels(sub)
    sub.set_defaults(func=cmd_capacity)

    sub = subs.add_parser("bounds", help="upper bounds of an LD channel")
    _add_levels(sub)
    sub.set_defaults(func=cmd_bounds)

    sub = subs.add_parser("gdof", help="GDoF of the Gaussian channel")
    _add_exponents(sub)
    sub.set_defaults(func=cmd_gdof)

    sub = subs.add_parser("curve", help="GDoF curve over alpha as CSV")
    sub.add_argument("--beta", type=_rational)
    sub.add_argument("--gamma", type=_rational)
    sub.add_argument("--alpha-min", type=_rational, default=Fraction(0))
    sub.add_argument("--alpha-max", type=_rational, default=Fraction(3))
    sub.add_argument("--step", type=_rational, default=Fraction(1, 20))
    sub.add_argument("--no-ic", action="store_true", help="leave d_ic empty")
    sub.add_argument("--out", help="write the CSV into a file")
    sub.add_argument("--golden", metavar="DIR", help="write every golden curve")
    sub.set_defaults(func=cmd_curve)

    sub = subs.add_parser("verify", help="exhaustive sweep over the LD grid")
    sub.add_argument("--min-level", type=int, default=0)
    sub.add_argument("--max-level", type=int, default=8)
    sub.add_argument(
        "--checks",
        type=_check_list,
        default=["sandwich"],
        help=f"comma separated subset of {', '.join(CHECKS)}",
    )
    sub.add_argument("--skip-equal-gains", action="store_true")
    sub.add_argument("-n", "--blocks", type=int, default=10)
    sub.add_argument("--seeds", type=_int_list, default=[1])
    sub.add_argument("--workers", type=int, default=0)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("simulate", help="bit-exact run of a scheme")
    sub.add_argument("--scheme", help="WI1, WI2, WI3a, WI3b, SI or II")
    _add_levels(sub)
    sub.add_argument("-n", type=int, default=10, help="channel uses")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--zero-messages", action="store_true")
    sub.add_argument("--dump-trace", metavar="FILE")
    sub.set_defaults(func=cmd_simulate)

    sub = subs.add_parser("subchannels", help="Gaussian sub-channel plan")
    sub.add_argument("--power", type=_rational, required=True)
    sub.add_argument("--gd", type=_rational, required=True)
    sub.add_argument("--gc", type=_rational, required=True)
    sub.add_argument("--gr", type=_rational, required=True)
    sub.add_argument("--gs", type=_rational, required=True)
    sub.add_argument("-N", dest="n", type=int, required=True)
    sub.set_defaults(func=cmd_subchannels)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None) -> int:
    """
    Run the command line interface.

    :param argv: the arguments, ``sys.argv[1:]`` by default.
    :param out: the output stream, stdout by default.
    :return: the exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.debug:
        set_debug(True)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except (IrcError, argparse.ArgumentTypeError) as exc:
        print(f"ldirc {args.command}: {exc}", file=sys.stderr)
        return 2
