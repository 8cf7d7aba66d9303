"""
Constraint systems of the transmission schemes and an exact integer
optimizer over them.

The variables of a system are the rates and paddings of a scheme's table,
counted in bit levels of the channel scaled by an integer factor. The
optimizer is a depth-first branch and bound over the bounded integer
lattice.
"""
import logging
from fractions import Fraction
from typing import (
    Callable,
    Dict,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .errors import InvalidInput, UnknownVariable
from .ldmodel import LdParams
from .schemes.regime import VARIABLES, SchemeId
from .utils import lcm_of_denominators, pos

logger = logging.getLogger("ldirc.rateopt")

Value = Union[int, Fraction]
Env = Dict[str, Value]
Expr = Callable[[Env], Value]


class Constraint(NamedTuple):
    """
    A single linear-piecewise constraint ``lhs <relation> rhs``.

    A constraint with a guard is only active where the guard holds. A
    monotone constraint only depends on free variables, its left-hand
    side never decreases and its right-hand side is constant, so it can
    be checked on a partial assignment. The `ref` names the equation the
    constraint stands for, like ``"(35)"`` or ``"Scheme2Cond7"``.
    """

    tag: str
    lhs: Expr
    rhs: Expr
    relation: str = "<="
    guard: Optional[Callable[[Env], bool]] = None
    monotone: bool = False
    ref: str = ""

    def active(self, env: Env) -> bool:
        return self.guard is None or bool(self.guard(env))

    def __str__(self) -> str:
        return f"{self.tag} {self.ref}" if self.ref else self.tag

    def holds(self, env: Env) -> bool:
        """ True, if the constraint is inactive or satisfied. """
        if not self.active(env):
            return True
        lhs, rhs = self.lhs(env), self.rhs(env)
        if self.relation == "<=":
            return lhs <= rhs
        if self.relation == "==":
            return lhs == rhs
        return lhs >= rhs


class ConstraintSet:
    """
    The compiled constraint system of one scheme on one channel.

    :param SchemeId scheme: the scheme.
    :param LdParams params: the unscaled channel.
    :param int scale: the integer scaling factor of the levels.
    :param variables: names of the free variables.
    :param bounds: inclusive upper bound of every free variable.
    :param derived: ordered derived quantities, evaluated after the free
        variables.
    :param constraints: the constraints.
    :param objective: the sum-rate as a function of the free variables.
    """

    def __init__(
        self,
        scheme: SchemeId,
        params: LdParams,
        scale: int,
        variables: Sequence[str],
        bounds: Mapping[str, int],
        derived: Sequence[Tuple[str, Expr]],
        constraints: Sequence[Constraint],
        objective: Expr,
    ) -> None:
        self.scheme = scheme
        self.params = params
        self.scale = scale
        self.variables = tuple(variables)
        self.bounds = dict(bounds)
        self.derived = tuple(derived)
        self.constraints = tuple(constraints)
        self.objective = objective

    @property
    def scaled(self) -> LdParams:
        """The channel the variables are counted on."""
        return self.params.scaled(self.scale)

    def derive(self, values: Mapping[str, Value]) -> Env:
        """
        Extend an assignment of the free variables with the derived
        quantities.

        :raises UnknownVariable: when a name is not a free variable.
        :raises InvalidInput: when a free variable is missing.
        """
        unknown = set(values) - set(self.variables)
        if unknown:
            raise UnknownVariable(
                f"Unknown variables for {self.scheme}: {sorted(unknown)}."
            )
        missing = set(self.variables) - set(values)
        if missing:
            raise InvalidInput(f"Missing variables: {sorted(missing)}.")
        env: Env = dict(values)
        for name, func in self.derived:
            env[name] = func(env)
        return env

    def violations(self, values: Mapping[str, Value]) -> List[str]:
        """ Tags of the constraints violated by a full assignment. """
        env = self.derive(values)
        return [cons.tag for cons in self.constraints if not cons.holds(env)]

    def ref(self, tag: str) -> str:
        """
        The equation reference of a constraint tag.

        :raises KeyError: when no constraint carries the tag.
        """
        for cons in self.constraints:
            if cons.tag == tag:
                return cons.ref
        raise KeyError(tag)

    def describe(self, tags: Sequence[str]) -> List[str]:
        """ Tags with their equation references, for reports. """
        names = {cons.tag: str(cons) for cons in self.constraints}
        return [names.get(tag, tag) for tag in tags]

    def value(self, values: Mapping[str, Value]) -> Fraction:
        """ The sum-rate of an assignment in unscaled bit levels. """
        return Fraction(self.objective(dict(values))) / self.scale

    def __iter__(self) -> Iterator[Constraint]:
        return iter(self.constraints)

    def __len__(self) -> int:
        return len(self.constraints)

    def __repr__(self) -> str:
        return (
            f"<ConstraintSet {self.scheme} {self.params} scale={self.scale} "
            f"constraints={len(self)}>"
        )


class OptResult(NamedTuple):
    """The maximizing assignment in unscaled levels and its sum-rate."""

    rates: Dict[str, Fraction]
    value: Fraction


def _le(tag: str, lhs: Expr, rhs: Expr, **kwds: object) -> Constraint:
    return Constraint(tag, lhs, rhs, "<=", **kwds)  # type: ignore[arg-type]


def _eq(tag: str, lhs: Expr, rhs: Expr, **kwds: object) -> Constraint:
    return Constraint(tag, lhs, rhs, "==", **kwds)  # type: ignore[arg-type]


def _ge(tag: str, lhs: Expr, rhs: Expr, **kwds: object) -> Constraint:
    return Constraint(tag, lhs, rhs, ">=", **kwds)  # type: ignore[arg-type]


def _const(val: Value) -> Expr:
    return lambda e: val


def common_rate(lcm: Value, gap: Value) -> Value:
    """Rate of a common signal interleaved over `lcm` levels."""
    return min(Fraction(lcm) / 2, pos(gap + lcm))


def _wi1_system(d: int, c: int, r: int, s: int, q: int) -> tuple:
    weights = {"l1": 1, "cn": 2, "df1": 4, "df2": 2, "cf": 1, "p": 1}
    constraints = [
        _le("df-within-cn", lambda e: 2 * e["df1"], lambda e: e["cn"]),
        _le(
            "tx-fits",
            lambda e: 2 * e["cn"] + e["cf"] + e["p"] + 2 * e["df2"] + e["l1"],
            _const(q),
            monotone=True,
        ),
        _le(
            "relay-sees",
            lambda e: e["l1"] + e["cf"] + e["p"] + 2 * (e["cn"] + e["df2"]),
            _const(s),
            guard=lambda e: max(e["cn"], e["df2"]) > 0,
        ),
        _le(
            "relay-sees-cf",
            lambda e: e["l1"] + e["cf"],
            _const(s),
            guard=lambda e: max(e["cn"], e["df2"]) == 0,
        ),
        _le(
            "rx-relay-levels",
            lambda e: e["cf"] + 2 * (e["df1"] + e["df2"]),
            lambda e: pos(r - d + e["l1"]),
        ),
        _le(
            "cn-alignment",
            lambda e: c - e["l1"],
            _const(r),
            guard=lambda e: e["cn"] > 0,
        ),
        _le("private-rate", lambda e: e["p"], _const(d - c), monotone=True),
        _le(
            "rx-fits",
            lambda e: e["l1"]
            + e["cn"]
            + e["cf"]
            + e["p"]
            + pos(e["cn"] + 2 * e["df2"] - pos(s - d)),
            _const(d),
            monotone=True,
        ),
    ]

    def objective(e: Env) -> Value:
        return 2 * (e["cn"] + e["df1"] + e["df2"] + e["cf"] + e["p"])

    return weights, [], constraints, objective


def _wi2_l2(d: int, r: int) -> Expr:
    def func(e: Env) -> Value:
        base = r - d + 2 * e["cm"] + e["cn"] + e["cf"]
        if e["cf1"] > 0:
            return pos(base)
        if e["cf2"] > 0:
            return pos(base + e["l1"] + e["p1"])
        return r

    return func


def _wi2_system(d: int, c: int, r: int, s: int, q: int) -> tuple:
    weights = {"cm": 2, "cn": 2, "cf": 1, "p1": 1, "p2": 1, "l1": 1}
    derived = [
        ("l4", lambda e: pos(e["cf"] - e["cn"])),
        ("cf1", lambda e: e["l4"]),
        ("cf2", lambda e: e["cf"] - e["l4"]),
        ("l2", _wi2_l2(d, r)),
        ("l3", lambda e: e["p1"] if e["cf1"] > 0 else 0),
        ("l5", lambda e: r - c + 2 * e["cm"]),
        ("l6", lambda e: min(e["cn"], pos(c - 2 * e["cm"]))),
    ]
    constraints = [
        _le(
            "tx-fits",
            lambda e: 2 * e["cm"]
            + 2 * e["cn"]
            + e["cf"]
            + e["l1"]
            + e["p1"]
            + e["p2"],
            _const(q),
            monotone=True,
        ),
        _le(
            "relay-sees",
            lambda e: 2 * e["cm"] + 2 * e["cn"] + e["cf"] + e["l1"] + e["p1"],
            _const(s),
            monotone=True,
        ),
        _le(
            "relay-cf-levels",
            lambda e: e["l2"] + e["cf"] + e["l3"],
            _const(r),
        ),
        _le("relay-cn-levels", lambda e: e["l5"] + e["l6"], _const(r)),
        _le(
            "common-clear",
            lambda e: r - e["l2"],
            lambda e: d - 2 * e["cm"],
            guard=lambda e: e["cf"] > 0,
        ),
        _le("common-cross", lambda e: 2 * e["cm"], _const(c), monotone=True),
        _le(
            "relay-below-cf",
            lambda e: r - e["l2"],
            lambda e: d - 2 * e["cm"] - e["cn"] - e["cf"],
            guard=lambda e: e["cf"] > 0,
        ),
        _ge("cn-align-levels", lambda e: e["l5"], _const(0)),
        _le(
            "cross-below-floor",
            lambda e: c - 2 * e["cm"] - e["cn"] - e["cf"] - e["l1"],
            _const(0),
        ),
        _ge("cf1-clear", lambda e: e["l1"], lambda e: e["l4"]),
    ]

    def objective(e: Env) -> Value:
        return 2 * (
            common_rate(2 * e["cm"], c - d)
            + e["cn"]
            + e["cf"]
            + e["p1"]
            + e["p2"]
        )

    return weights, derived, constraints, objective


def _wi3_tx(e: Env) -> Value:
    return (
        e["lcm1"]
        + e["cm2"]
        + 2 * (e["cn1"] + e["cn2"] + e["cn3"])
        + e["p1"]
        + e["p2"]
        + e["l1u"]
        + e["l1d"]
    )


def _wi3_floor(e: Env) -> Value:
    # Cross levels reaching below the zero gaps. Without cn1 the two gaps
    # are contiguous.
    gap = e["l1u"] + (e["l1d"] if e["cn1"] == 0 else 0)
    return e["ncp"] - e["cm2"] - e["cn1"] - e["cn2"] - gap


def _wi3_system(
    variant: SchemeId, d: int, c: int, r: int, s: int, q: int
) -> tuple:
    weights = {
        "lcm1": 1,
        "cm2": 1,
        "cn1": 2,
        "cn2": 2,
        "cn3": 2,
        "p1": 1,
        "p2": 1,
        "l1u": 1,
        "l1d": 1,
    }
    derived: List[Tuple[str, Expr]] = [
        ("l1", lambda e: e["l1u"] + e["l1d"]),
        ("cm1", lambda e: common_rate(e["lcm1"], c - d)),
        ("ndp", lambda e: d - e["lcm1"]),
        ("ncp", lambda e: pos(c - e["lcm1"])),
    ]
    if variant == SchemeId.WI3a:

        def l2_a(e: Env) -> Value:
            if e["cn1"] or e["cn2"]:
                return r - e["ncp"] + e["cm2"]
            return r

        derived += [("l2", l2_a), ("l3", _const(0))]
    else:

        def l2_b(e: Env) -> Value:
            if e["cn2"]:
                return r - e["ncp"] + e["cm2"]
            if e["cn3"]:
                return r - e["cn3"]
            return r

        derived += [
            ("l2", l2_b),
            ("l3", lambda e: e["l1"] if e["cn2"] else 0),
        ]
    derived.append(("nrp", lambda e: r - e["l2"]))

    constraints = [
        _le("tx-fits", _wi3_tx, _const(q), monotone=True),
        _le(
            "relay-sees",
            _wi3_tx,
            _const(s),
            guard=lambda e: bool(e["cn2"] or e["cn3"]),
        ),
        _le(
            "relay-sees-cn1",
            lambda e: e["lcm1"] + e["cm2"] + 2 * e["cn1"] + e["p1"] + e["l1u"],
            _const(s),
            guard=lambda e: not (e["cn2"] or e["cn3"]) and e["cn1"] > 0,
        ),
        _le(
            "relay-cn-levels",
            lambda e: e["cn1"] + e["cn2"] + e["cn3"] + e["l2"] + e["l3"],
            _const(r),
        ),
        _ge("l2-non-negative", lambda e: e["l2"], _const(0)),
        _ge("l3-non-negative", lambda e: e["l3"], _const(0)),
        _le(
            "common-clear",
            lambda e: r - e["l2"],
            lambda e: d - e["lcm1"],
            guard=lambda e: e["lcm1"] > 0,
        ),
    ]
    if variant == SchemeId.WI3a:
        constraints += [
            _le("variant-a", lambda e: e["cn3"], _const(0), monotone=True),
            _le(
                "rx-fits",
                lambda e: e["lcm1"]
                + e["cm2"]
                + 2 * e["cn1"]
                + e["cn2"]
                + e["p1"]
                + e["l1u"]
                + e["l1d"]
                + e["p2"],
                _const(d),
                monotone=True,
            ),
            _le(
                "cross-clear",
                lambda e: e["cm2"] + e["cn1"] + e["cn2"] + e["p1"],
                lambda e: e["ndp"] - e["ncp"],
            ),
            _le(
                "relay-clear",
                lambda e: e["cm2"] + e["cn1"] + e["cn2"] + e["p1"],
                lambda e: e["ndp"] - e["nrp"],
            ),
            _eq(
                "cn-alignment",
                lambda e: e["ncp"] - e["cm2"],
                lambda e: e["nrp"],
                guard=lambda e: bool(e["cn1"] or e["cn2"]),
            ),
            _le(
                "common2-clear",
                lambda e: e["ndp"]
                - e["cm2"]
                - 2 * e["cn1"]
                - e["cn2"]
                - e["p1"]
                - e["l1"],
                lambda e: e["ncp"] - e["cm2"],
                guard=lambda e: e["cm2"] > 0,
            ),
            _eq(
                "cross-floor-private",
                lambda e: e["ncp"] - e["cm2"] - e["cn1"] - e["cn2"],
                _const(0),
                guard=lambda e: e["p1"] > 0,
            ),
            _le(
                "cross-floor",
                _wi3_floor,
                _const(0),
                guard=lambda e: e["p1"] == 0,
            ),
        ]

        def objective(e: Env) -> Value:
            return 2 * (
                common_rate(e["lcm1"], c - d)
                + e["cm2"]
                + e["cn1"]
                + e["cn2"]
                + e["p1"]
                + e["p2"]
            )

    else:
        constraints += [
            _le(
                "variant-b",
                lambda e: e["cn1"] + e["p1"],
                _const(0),
                monotone=True,
            ),
            _le(
                "rx-fits",
                lambda e: e["lcm1"]
                + e["cm2"]
                + e["cn2"]
                + e["l1u"]
                + e["l1d"]
                + e["cn3"]
                + e["p2"],
                _const(d),
                monotone=True,
            ),
            _le(
                "cross-clear",
                lambda e: e["cm2"] + e["cn2"],
                lambda e: e["ndp"] - e["ncp"],
            ),
            _le(
                "relay-clear",
                lambda e: e["cm2"] + e["cn2"],
                lambda e: e["ndp"] - e["nrp"],
            ),
            _le(
                "common2-clear",
                lambda e: e["ndp"] - e["cm2"] - e["cn2"] - e["l1"],
                lambda e: e["ncp"] - e["cm2"],
                guard=lambda e: e["cm2"] > 0,
            ),
            _eq(
                "cn2-alignment",
                lambda e: e["nrp"],
                lambda e: e["ncp"] - e["cm2"],
                guard=lambda e: e["cn2"] > 0,
            ),
            _eq(
                "cn3-alignment",
                lambda e: e["nrp"],
                lambda e: e["cn3"],
                guard=lambda e: e["cn2"] == 0,
            ),
            _le(
                "private2-rate",
                lambda e: e["p2"],
                lambda e: e["ndp"] - e["ncp"],
            ),
        ]

        def objective(e: Env) -> Value:
            return 2 * (
                common_rate(e["lcm1"], c - d)
                + e["cm2"]
                + e["cn2"]
                + e["cn3"]
                + e["p2"]
            )

    return weights, derived, constraints, objective


def _si_tx(e: Env) -> Value:
    return (
        e["lcm1"]
        + e["cm2"]
        + e["cf1"]
        + e["cf2"]
        + 4 * e["df1"]
        + 2 * e["cn2"]
        + 2 * e["df2"]
        + e["l1"]
    )


def _si_system(d: int, c: int, r: int, s: int, q: int) -> tuple:
    weights = {
        "lcm1": 1,
        "cm2": 1,
        "cf1": 1,
        "cf2": 1,
        "df1": 4,
        "df2": 2,
        "cn2": 2,
        "l1": 1,
    }

    def top(e: Env) -> Value:
        # Cross-received level of the first signal below the cm2/cf1 block.
        return e["ncp"] - e["cm2"] - e["cf1"] - e["l1"]

    derived = [
        ("cn1", lambda e: 2 * e["df1"]),
        ("cm1", lambda e: common_rate(e["lcm1"], d - c)),
        ("ndp", lambda e: pos(d - e["lcm1"])),
        ("ncp", lambda e: c - e["lcm1"]),
        (
            "l2",
            lambda e: pos(
                r
                - (e["ncp"] - e["l1"] + e["cf2"] + 2 * e["df1"] + 2 * e["df2"])
            ),
        ),
        ("nrp", lambda e: r - e["l2"]),
        (
            "l3",
            lambda e: e["nrp"]
            - 2 * e["df1"]
            - 2 * e["df2"]
            - e["cf1"]
            - e["cf2"]
            - e["cn1"]
            - e["cn2"],
        ),
    ]
    constraints = [
        _le("tx-fits", _si_tx, _const(q), monotone=True),
        _le("relay-sees", _si_tx, _const(s), monotone=True),
        _le(
            "common-clear",
            lambda e: r - e["l2"],
            lambda e: c - e["lcm1"],
            guard=lambda e: e["lcm1"] > 0,
        ),
        _le(
            "cross-common-relay",
            lambda e: e["cm2"] + e["cf1"],
            lambda e: pos(e["ncp"] - e["nrp"]),
        ),
        _le(
            "cross-common-direct",
            lambda e: e["cm2"] + e["cf1"],
            lambda e: e["ncp"] - e["ndp"],
        ),
        _le(
            "relay-clear",
            lambda e: 2 * e["df1"] + 2 * e["df2"] + e["cf1"] + e["cf2"],
            lambda e: pos(e["nrp"] - e["ndp"]),
            guard=lambda e: e["cm2"] > 0,
        ),
        _le(
            "relay-cf-levels",
            lambda e: 2 * e["df1"] + 2 * e["df2"] + e["cf1"] + e["cf2"],
            lambda e: pos(e["nrp"] - top(e)),
        ),
        _le(
            "common2-clear",
            lambda e: e["cm2"],
            lambda e: pos(e["ndp"] - top(e)),
        ),
        _ge(
            "cn-received",
            lambda e: top(e) - e["cf2"] - e["cn1"] - e["cn2"],
            _const(0),
        ),
        _le("relay-cn-levels", lambda e: e["cn1"] + e["cn2"], lambda e: e["nrp"]),
        _le(
            "cross-floor",
            lambda e: top(e) - e["cf2"] - e["cn1"] - e["cn2"] - 2 * e["df2"],
            _const(0),
        ),
        _ge("relay-fits", lambda e: e["l3"], _const(0)),
    ]

    def objective(e: Env) -> Value:
        return 2 * (
            common_rate(e["lcm1"], d - c)
            + e["cm2"]
            + e["cf1"]
            + e["cf2"]
            + e["df1"]
            + e["df2"]
            + 2 * e["df1"]
            + e["cn2"]
        )

    return weights, derived, constraints, objective


def _ii_system(d: int, c: int, r: int, s: int, q: int) -> tuple:
    weights = {"cm": 1, "df": 1}
    constraints = [
        _le("direct-rate", lambda e: e["cm"], _const(d), monotone=True),
        _le(
            "forward-rate",
            lambda e: e["df"],
            _const(min(pos(s - d), pos(r - d))),
            monotone=True,
        ),
        _le("tx-fits", lambda e: e["cm"] + e["df"], _const(q), monotone=True),
    ]
    return weights, [], constraints, lambda e: e["cm"] + e["df"]


#: Equation references of the constraint tags of every table family.
REFS: Dict[str, Dict[str, str]] = {
    "WI1": {
        "df-within-cn": "(29)",
        "tx-fits": "(30)",
        "relay-sees": "(31)",
        "relay-sees-cf": "(32)",
        "rx-relay-levels": "(33)",
        "cn-alignment": "(34)",
        "private-rate": "(35)",
        "rx-fits": "(36)",
    },
    "WI2": {
        "tx-fits": "Scheme2Cond1",
        "relay-sees": "Scheme2Cond2",
        "relay-cf-levels": "Scheme2Cond3",
        "relay-cn-levels": "Scheme2Cond4",
        "common-clear": "Scheme2Cond5",
        "common-cross": "Scheme2Cond6",
        "relay-below-cf": "Scheme2Cond7",
        "cn-align-levels": "Scheme2Cond8",
        "cross-below-floor": "Scheme2Cond9",
        "cf1-clear": "Scheme2Cond10",
    },
    "WI3": {
        "tx-fits": "Scheme1Condnd",
        "relay-sees": "rate_const_Re_B3_1",
        "relay-sees-cn1": "rate_const_Re_B3_1",
        "relay-cn-levels": "Scheme3Cond1",
        "common-clear": "Scheme3Cond2",
        "cross-clear": "cond_scheme3_rx_2",
        "relay-clear": "Scheme3Cond4",
        "cn-alignment": "Scheme3Cond5",
        "cross-floor-private": "Scheme3Cond6",
        "cross-floor": "Scheme3Cond6",
        "common2-clear": "rate_const_Re_B3b_7",
        "cn2-alignment": "rate_const_Re_B3b_5",
        "cn3-alignment": "rate_const_Re_B3b_8",
        "private2-rate": "rate_const_Re_B3b_9",
    },
    "SI": {
        "tx-fits": "SI_1",
        "relay-sees": "Sch4_cond1",
        "common-clear": "SI_5",
        "cross-common-relay": "sch4_cond_3",
        "cross-common-direct": "sch4_cond_4",
        "relay-cf-levels": "SI_9",
        "cross-floor": "SI_14",
    },
    "II": {
        "direct-rate": "SchemeII_1",
        "forward-rate": "SchemeII_2",
    },
}


def compile_constraints(
    scheme: SchemeId, p: LdParams, scale: int = 1
) -> ConstraintSet:
    """
    Build the constraint system of a scheme.

    :param SchemeId scheme: the scheme.
    :param LdParams p: the channel.
    :param int scale: count variables in units of ``1/scale`` levels.
    :raises InvalidInput: when the scale is not positive.
    :return: the system, with variables bounded to ``[0, q]``.
    :rtype: ConstraintSet
    """
    if scale < 1:
        raise InvalidInput("The scale must be positive.")
    scheme = SchemeId(scheme)
    d, c, r, s = p.scaled(scale).astuple()
    q = max(d, c, r, s)
    if scheme.family == "WI3":
        system = _wi3_system(scheme, d, c, r, s, q)
    else:
        builder = {
            "WI1": _wi1_system,
            "WI2": _wi2_system,
            "SI": _si_system,
            "II": _ii_system,
        }[scheme.family]
        system = builder(d, c, r, s, q)
    weights, derived, constraints, objective = system
    refs = REFS[scheme.family]
    constraints = [
        cons._replace(ref=refs.get(cons.tag, "")) for cons in constraints
    ]
    variables = VARIABLES[scheme.family]
    bounds = {name: q // weights[name] for name in variables}
    return ConstraintSet(
        scheme, p, scale, variables, bounds, derived, constraints, objective
    )


def _partial_ok(cset: ConstraintSet, env: Env) -> bool:
    filled = {name: env.get(name, 0) for name in cset.variables}
    return all(cons.holds(filled) for cons in cset.constraints if cons.monotone)


def optimize(cset: ConstraintSet) -> OptResult:
    """
    Maximize the sum-rate over the integer points of a system.

    The search tries large values first and keeps the first maximizer it
    meets. An infeasible system gives the all-zero assignment with a
    sum-rate of zero.

    :param ConstraintSet cset: the system.
    :return: the maximizer in unscaled levels and its sum-rate.
    :rtype: OptResult
    """
    names = cset.variables
    best: List[Optional[Tuple[Value, Env]]] = [None]
    visited = [0]

    def optimistic(env: Env) -> Value:
        full = {name: env.get(name, cset.bounds[name]) for name in names}
        return cset.objective(full)

    def search(idx: int, env: Env) -> None:
        visited[0] += 1
        if best[0] is not None and optimistic(env) <= best[0][0]:
            return
        if idx == len(names):
            full = cset.derive(env)
            if all(cons.holds(full) for cons in cset.constraints):
                best[0] = (cset.objective(env), dict(env))
            return
        name = names[idx]
        for val in range(cset.bounds[name], -1, -1):
            env[name] = val
            if _partial_ok(cset, env):
                search(idx + 1, env)
        del env[name]

    search(0, {})
    logger.debug(f"Branch and bound for {cset!r} visited {visited[0]} nodes.")
    if best[0] is None:
        logger.info(f"No feasible point for {cset.scheme} on {cset.params}.")
        return OptResult({name: Fraction(0) for name in names}, Fraction(0))
    value, env = best[0]
    rates = {name: Fraction(env[name], cset.scale) for name in names}
    return OptResult(rates, Fraction(value) / cset.scale)


def check_allocation(cset: ConstraintSet, allocation: object) -> List[str]:
    """
    Check an allocation against a system.

    :param ConstraintSet cset: the system.
    :param allocation: a :class:`RateAllocation` or a mapping of the free
        variables, in unscaled levels.
    :raises UnknownVariable: when the allocation names an unknown
        variable.
    :return: tags of the violated constraints, empty when it satisfies
        every active constraint. Values that are not integral at the
        system's scale are reported as ``"integral"``.
    """
    rates: Mapping[str, Value] = getattr(  # type: ignore[assignment]
        allocation, "rates", allocation
    )
    unknown = set(rates) - set(cset.variables)
    if unknown:
        raise UnknownVariable(
            f"Unknown variables for {cset.scheme}: {sorted(unknown)}."
        )
    values: Env = {}
    problems: List[str] = []
    for name in cset.variables:
        val = Fraction(rates.get(name, 0)) * cset.scale
        if val.denominator != 1:
            problems.append("integral")
            return problems
        if val < 0:
            problems.append(f"{name}-non-negative")
        values[name] = int(val)
    return problems + cset.violations(values)


def allocation_scale(rates: Mapping[str, Value]) -> int:
    """ The smallest scale at which all `rates` are integral. """
    return lcm_of_denominators(*rates.values())
