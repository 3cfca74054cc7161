"""Bounds on pi from the hexagon by repeated angle halving.

A right triangle with legs ``a`` (adjacent) and ``c`` (opposite) and
hypotenuse ``b`` has its angle halved by ``a <- a + b`` with ``c`` fixed.
Starting from the 30 degree triangle (``a/c = sqrt 3``, ``b = 2c``), ``k``
halvings give the angle of a regular polygon with ``6 * 2**k`` sides, so

* circumscribed: ``pi < n * c / a`` when every surd is bounded from below,
* inscribed:     ``pi > n * c / b`` when every surd is bounded from above.

All state is exact; each square root is replaced by a directed rational bound
and the direction is re-checked by squaring after every step.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, NamedTuple, Optional

from .rational import DomainError, Rational, as_fraction, to_decimal
from .sqrt_methods import Side, StopRule, dyadic_sqrt_bound, interpolate
from .trace import Trace

ARCHIMEDES_SQRT3_LOWER = Fraction(265, 153)
ARCHIMEDES_SQRT3_UPPER = Fraction(1351, 780)

ALPHA_RECORDED = Fraction(20227, 11)       # 1838 9/11
ALPHA_BISECTED = Fraction(7355, 4)         # 1838 3/4
BETA_RECORDED = Fraction(6055, 6)          # 1009 1/6
BETA_BISECTED = Fraction(4037, 4)          # 1009 1/4
FINAL_WITH_BETA_BISECTED = Fraction(6052, 3)  # 2017 1/3

ARCHIMEDES_DOUBLINGS = 4


class Direction(enum.Enum):
    """Which way every square root is rounded along a chain."""

    LOWER_CHAIN = "circumscribed"
    UPPER_CHAIN = "inscribed"

    @property
    def side(self) -> Side:
        return Side.LOWER if self is Direction.LOWER_CHAIN else Side.UPPER


class BoundViolation(DomainError):
    """A hypotenuse bound points the wrong way for its chain."""


@dataclass(frozen=True)
class TriangleState:
    a: Fraction
    c: Fraction
    b: Fraction
    direction: Direction
    doublings_done: int = 0

    def __post_init__(self):
        for name in ("a", "c", "b"):
            value = as_fraction(getattr(self, name))
            if value <= 0:
                raise DomainError(f"triangle leg {name} must be positive, got {value}")
            object.__setattr__(self, name, value)
        # b = 2c at the start is the true hexagon hypotenuse, which is what
        # soundness needs; sqrt(a^2 + c^2) differs only through the sqrt 3 bound.
        hexagon = self.doublings_done == 0 and self.b == 2 * self.c
        if not hexagon and not _respects(self.b, self.a * self.a + self.c * self.c,
                                         self.direction):
            raise BoundViolation(
                f"b = {self.b} is not a valid {self.direction.side.value} bound "
                f"on sqrt({self.a}^2 + {self.c}^2)")

    @property
    def sides(self) -> int:
        return 6 * 2 ** self.doublings_done


def _respects(b: Fraction, radicand: Fraction, direction: Direction) -> bool:
    sq = b * b
    return sq <= radicand if direction is Direction.LOWER_CHAIN else sq >= radicand


def starting_state(sqrt3_bound: Rational, direction: Direction,
                   normalize: bool = False) -> TriangleState:
    """Hexagon triangle ``(p, q, 2q)`` from a bound ``p/q`` on sqrt 3.

    ``b = 2c`` is exact because the hypotenuse of the 30 degree triangle is
    twice its short leg.  With ``normalize`` the short leg is 1.
    """
    f = as_fraction(sqrt3_bound)
    if normalize:
        return TriangleState(f, Fraction(1), Fraction(2), direction)
    return TriangleState(Fraction(f.numerator), Fraction(f.denominator),
                         Fraction(2 * f.denominator), direction)


@dataclass(frozen=True)
class ChainSchedule:
    """Per-step hypotenuse overrides and rescaling factors for one chain.

    A rescale keyed by step ``k`` multiplies the whole triangle before the
    ``k``-th halving; an override replaces the ``k``-th computed root.
    """

    overrides: Mapping[int, Fraction] = field(default_factory=dict)
    rescales: Mapping[int, Fraction] = field(default_factory=dict)


@dataclass(frozen=True)
class SqrtPolicy:
    depth: int = 3
    circumscribed: ChainSchedule = ChainSchedule()
    inscribed: ChainSchedule = ChainSchedule()
    name: str = ""

    def __post_init__(self):
        if self.depth < 0:
            raise DomainError("dyadic depth must be non-negative")
        if not self.name:
            object.__setattr__(self, "name", f"dyadic:{self.depth}")

    @classmethod
    def dyadic(cls, depth: int) -> SqrtPolicy:
        return cls(depth=depth)

    @classmethod
    def archimedes_recorded(cls) -> SqrtPolicy:
        """Depth-3 bisection plus the two recorded exceptions and rescalings."""
        inscribed = ChainSchedule(
            overrides={2: ALPHA_RECORDED, 3: BETA_RECORDED},
            rescales={2: Fraction(4, 13), 3: Fraction(11, 40)},
        )
        return cls(depth=3, inscribed=inscribed, name="archimedes")

    def schedule(self, direction: Direction) -> ChainSchedule:
        return self.circumscribed if direction is Direction.LOWER_CHAIN else self.inscribed

    def with_override(self, direction: Direction, step: int, value: Rational) -> SqrtPolicy:
        sched = self.schedule(direction)
        new = ChainSchedule({**sched.overrides, step: as_fraction(value)}, sched.rescales)
        key = "circumscribed" if direction is Direction.LOWER_CHAIN else "inscribed"
        return replace(self, **{key: new}, name=f"{self.name}+override")


def rescale(s: TriangleState, factor: Rational) -> TriangleState:
    factor = as_fraction(factor)
    if factor <= 0:
        raise DomainError(f"rescale factor must be positive, got {factor}")
    return TriangleState(s.a * factor, s.c * factor, s.b * factor,
                         s.direction, s.doublings_done)


_CHAIN_COLUMNS = ("step", "sides", "a", "c", "b", "radicand", "decision",
                  "override", "rescale")


def _new_chain_trace(s: TriangleState) -> Trace:
    trace = Trace(s.direction.value, _CHAIN_COLUMNS)
    trace.add(step=s.doublings_done, sides=s.sides, a=s.a, c=s.c, b=s.b,
              decision="start", override=False)
    return trace


def _advance(s: TriangleState, policy: SqrtPolicy) -> tuple[Fraction, Fraction, Optional[Fraction]]:
    step = s.doublings_done + 1
    factor = policy.schedule(s.direction).rescales.get(step)
    if factor is not None:
        s = rescale(s, factor)
    return s.a + s.b, s.c, factor


def halve_angle(s: TriangleState, policy: SqrtPolicy,
                trace: Optional[Trace] = None) -> TriangleState:
    step = s.doublings_done + 1
    a, c, factor = _advance(s, policy)
    radicand = a * a + c * c
    override = policy.schedule(s.direction).overrides.get(step)
    if override is not None:
        b = as_fraction(override)
        if b <= 0 or not _respects(b, radicand, s.direction):
            raise BoundViolation(
                f"{s.direction.value} step {step}: override {b} is not a valid "
                f"{s.direction.side.value} bound on sqrt({radicand})")
        decision = "override"
    else:
        b = dyadic_sqrt_bound(radicand, policy.depth, s.direction.side)
        decision = f"dyadic:{policy.depth} {s.direction.side.value}"
    nxt = TriangleState(a, c, b, s.direction, step)
    if trace is not None:
        trace.add(step=step, sides=nxt.sides, a=a, c=c, b=b, radicand=radicand,
                  decision=decision, override=override is not None, rescale=factor)
    return nxt


class ChainResult(NamedTuple):
    bound: Fraction
    trace: Trace


def circumscribed_chain(doublings: int, policy: SqrtPolicy,
                        start: Optional[TriangleState] = None) -> ChainResult:
    """Upper bound ``n * c / a`` on pi for the ``6 * 2**doublings``-gon.

    The last halving only needs the new ``a``, so no root is taken there.
    """
    if doublings < 1:
        raise DomainError("need at least one doubling")
    s = start or starting_state(ARCHIMEDES_SQRT3_LOWER, Direction.LOWER_CHAIN)
    if s.direction is not Direction.LOWER_CHAIN:
        raise DomainError("circumscribed chain needs lower bounds on every root")
    trace = _new_chain_trace(s)
    for _ in range(doublings - 1):
        s = halve_angle(s, policy, trace)
    a, c, factor = _advance(s, policy)
    sides = 6 * 2 ** (s.doublings_done + 1)
    trace.add(step=s.doublings_done + 1, sides=sides, a=a, c=c,
              decision="final", override=False, rescale=factor)
    trace.result = sides * c / a
    return ChainResult(trace.result, trace)


def inscribed_chain(doublings: int, policy: SqrtPolicy,
                    start: Optional[TriangleState] = None) -> ChainResult:
    """Lower bound ``n * c / b`` on pi for the ``6 * 2**doublings``-gon."""
    if doublings < 1:
        raise DomainError("need at least one doubling")
    s = start or starting_state(ARCHIMEDES_SQRT3_UPPER, Direction.UPPER_CHAIN)
    if s.direction is not Direction.UPPER_CHAIN:
        raise DomainError("inscribed chain needs upper bounds on every root")
    trace = _new_chain_trace(s)
    for _ in range(doublings):
        s = halve_angle(s, policy, trace)
    trace.result = s.sides * s.c / s.b
    return ChainResult(trace.result, trace)


# -- independent certification ---------------------------------------------------

class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


class VerificationError(ArithmeticError):
    pass


def sqrt3_enclosure(precision: int) -> tuple[Fraction, Fraction]:
    """Mediant-interpolated bracket of sqrt 3 of width at most ``2**-precision``."""
    trace = interpolate(3, 1, 2, StopRule(width=Fraction(1, 2 ** precision)))
    e = trace.result
    return e.lo, e.hi


def chain_bounds(doublings: int, precision: int) -> tuple[Fraction, Fraction]:
    """``(lower, upper)`` on pi from both chains at ``Dyadic(precision)``.

    The chains start from a sqrt 3 bracket of matching width and a unit leg,
    so ``precision`` is an absolute accuracy on every root.
    """
    lo3, hi3 = sqrt3_enclosure(precision)
    policy = SqrtPolicy.dyadic(precision)
    upper, _ = circumscribed_chain(
        doublings, policy, starting_state(lo3, Direction.LOWER_CHAIN, normalize=True))
    lower, _ = inscribed_chain(
        doublings, policy, starting_state(hi3, Direction.UPPER_CHAIN, normalize=True))
    return lower, upper


def reference_pi(precision: int = 128, doublings: int = 40) -> tuple[Fraction, Fraction]:
    return chain_bounds(doublings, precision)


def verify_bound(claimed: Rational, side: Side, precision: int = 64,
                 doublings: int = ARCHIMEDES_DOUBLINGS, max_retries: int = 4) -> Verdict:
    """Certify ``claimed < pi`` (LOWER) or ``claimed > pi`` (UPPER).

    When ``claimed`` falls inside the reference enclosure the reference is
    refined (more doublings, doubled precision) up to ``max_retries`` times.
    """
    claimed = as_fraction(claimed)
    for _ in range(max_retries + 1):
        lo, hi = chain_bounds(doublings, precision)
        if side is Side.LOWER:
            if claimed <= lo:
                return Verdict.PASS
            if claimed >= hi:
                return Verdict.FAIL
        else:
            if claimed >= hi:
                return Verdict.PASS
            if claimed <= lo:
                return Verdict.FAIL
        doublings += 4
        precision *= 2
    return Verdict.INDETERMINATE


@dataclass(frozen=True)
class PiBoundsResult:
    lower: Fraction
    upper: Fraction
    circumscribed_trace: Trace
    inscribed_trace: Trace

    def decimals(self, digits: int = 6) -> tuple[str, str]:
        return to_decimal(self.lower, digits), to_decimal(self.upper, digits)


def run_archimedes(policy: Optional[SqrtPolicy] = None,
                   doublings: int = ARCHIMEDES_DOUBLINGS,
                   precision: int = 64) -> PiBoundsResult:
    policy = policy or SqrtPolicy.archimedes_recorded()
    upper, circ = circumscribed_chain(doublings, policy)
    lower, insc = inscribed_chain(doublings, policy)
    if not lower < upper:
        raise VerificationError(f"bounds out of order: {lower} >= {upper}")
    for claimed, side in ((lower, Side.LOWER), (upper, Side.UPPER)):
        verdict = verify_bound(claimed, side, precision)
        if verdict is not Verdict.PASS:
            raise VerificationError(f"{side.value} bound {claimed}: {verdict.value}")
    return PiBoundsResult(lower, upper, circ, insc)


def exact_96gon_bounds(precision: int = 64) -> tuple[str, str]:
    """Six-digit floors of the 96-gon perimeter bounds, 96 sin(pi/96) and 96 tan(pi/96)."""
    if precision < 32:
        raise DomainError("precision must be at least 32")
    lower, upper = chain_bounds(ARCHIMEDES_DOUBLINGS, precision)
    return to_decimal(lower, 6), to_decimal(upper, 6)


def halving_errors(precision: int = 64, doublings: tuple[int, ...] = (3, 4),
                   pi_ref: Optional[Fraction] = None) -> dict[int, tuple[Fraction, Fraction]]:
    """``{k: (pi - lower_k, upper_k - pi)}`` for the ``6 * 2**k``-gon."""
    if pi_ref is None:
        lo, hi = reference_pi()
        pi_ref = (lo + hi) / 2
    out = {}
    for k in doublings:
        lower, upper = chain_bounds(k, precision)
        out[k] = (pi_ref - lower, upper - pi_ref)
    return out
