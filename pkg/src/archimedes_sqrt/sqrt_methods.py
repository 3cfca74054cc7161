"""Square-root approximation procedures over exact rationals.

Brute-force residual scans, the c = 2 Pell recurrence, mediant
interpolation, continued fractions, Hero's iteration and dyadic bisection.
Each procedure that walks through steps returns a :class:`Trace`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .rational import (
    Cmp,
    DomainError,
    Rational,
    as_fraction,
    cmp_sqrt,
    isqrt,
    mediant,
)
from .trace import Trace


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"

    @classmethod
    def parse(cls, text: str) -> Side:
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"side must be 'lower' or 'upper', got {text!r}") from None


def _residual(f: Fraction, c: Fraction) -> int:
    # sign-exact f^2 - c scaled to integers; equals a^2 - c b^2 for integer c
    return f.numerator ** 2 * c.denominator - c.numerator * f.denominator ** 2


# -- incremental squares and brute force -------------------------------------

def squares_table(start: int, end: int, multiplier: int = 3) -> Trace:
    """Tabulate ``n**2`` and ``multiplier * n**2`` using (n+1)^2 = n^2 + 2n + 1.

    Rows for multiples of ten are re-checked by direct multiplication.
    """
    if start < 0 or end < start:
        raise DomainError(f"need 0 <= start <= end, got {start}..{end}")
    trace = Trace("squares", ("n", "square", "increment", "scaled",
                              "scaled_increment", "checked"))
    sq = start * start
    for n in range(start, end + 1):
        checked = n % 10 == 0
        if checked and sq != n * n:
            raise ArithmeticError(f"incremental square of {n} went wrong: {sq}")
        inc = 2 * n + 1 if n < end else None
        trace.add(n=n, square=sq, increment=inc, scaled=multiplier * sq,
                  scaled_increment=None if inc is None else multiplier * inc,
                  checked=checked)
        if inc is not None:
            sq += inc
    trace.result = trace.rows[-1]["scaled"]
    return trace


@dataclass(frozen=True)
class ResidualRecord:
    a: int
    b: int
    residual: int
    bound_side: Side

    def __post_init__(self):
        if (self.residual < 0) != (self.bound_side is Side.LOWER):
            raise DomainError(f"{self.a}/{self.b}: side does not match residual")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.a, self.b)


def brute_force_scan(c: int, max_b: int, min_b: int = 2) -> list[ResidualRecord]:
    """Pairs ``(a, b)`` whose residual ``a^2 - c b^2`` is as small as it gets.

    For every ``b`` in ``[min_b, max_b]`` the two candidates are
    ``a = isqrt(c b^2)`` (below) and ``a + 1`` (above).  On each side the
    pairs attaining the smallest ``|residual|`` seen over the whole range are
    returned, ordered by ``b``.  ``b = 1`` is skipped by default since it only
    gives the integer bracket of the root.
    """
    if isqrt(c) ** 2 == c:
        raise DomainError(f"exact root: {c} is a perfect square")
    if max_b < 1 or min_b < 1:
        raise DomainError("b bounds must be positive")
    candidates: list[ResidualRecord] = []
    # squares are carried incrementally, as one would by hand
    b_sq = (min_b - 1) ** 2
    for b in range(min_b, max_b + 1):
        b_sq += 2 * b - 1
        target = c * b_sq
        a = isqrt(target)
        candidates.append(ResidualRecord(a, b, a * a - target, Side.LOWER))
        candidates.append(ResidualRecord(a + 1, b, (a + 1) ** 2 - target, Side.UPPER))
    best = {}
    for side in Side:
        mags = [abs(r.residual) for r in candidates if r.bound_side is side]
        best[side] = min(mags) if mags else None
    return [r for r in candidates if abs(r.residual) == best[r.bound_side]]


# -- mediant interpolation ----------------------------------------------------

@dataclass(frozen=True)
class Enclosure:
    """``lo < sqrt(c) < hi`` with both inequalities strict."""

    c: Fraction
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        for name in ("c", "lo", "hi"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if cmp_sqrt(self.lo, self.c) is not Cmp.BELOW:
            raise DomainError(f"lower end {self.lo} is not below sqrt({self.c})")
        if cmp_sqrt(self.hi, self.c) is not Cmp.ABOVE:
            raise DomainError(f"upper end {self.hi} is not above sqrt({self.c})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"{self.lo} < √{self.c} < {self.hi}"


@dataclass(frozen=True)
class ExactRoot:
    value: Fraction


@dataclass(frozen=True)
class StopRule:
    """When to stop interpolating; the first rule that fires wins.

    ``iterations`` counts listed enclosures with the starting bracket as the
    first one, so ``iterations=16`` lists sixteen brackets (fifteen mediants).
    ``max_den`` refuses any mediant whose denominator would exceed it.
    """

    iterations: Optional[int] = None
    width: Optional[Fraction] = None
    max_den: Optional[int] = None

    def __post_init__(self):
        if self.iterations is None and self.width is None and self.max_den is None:
            raise DomainError("StopRule needs at least one criterion")
        if self.iterations is not None and self.iterations < 1:
            raise DomainError("iterations must be >= 1")
        if self.width is not None and as_fraction(self.width) <= 0:
            raise DomainError("width must be positive")


def interpolate_step(e: Enclosure) -> Union[Enclosure, ExactRoot]:
    m = mediant(e.lo, e.hi)
    pos = cmp_sqrt(m, e.c)
    if pos is Cmp.BELOW:
        return Enclosure(e.c, m, e.hi)
    if pos is Cmp.ABOVE:
        return Enclosure(e.c, e.lo, m)
    return ExactRoot(m)


_INTERP_COLUMNS = ("step", "lo", "hi", "mediant", "residual", "decision")


def interpolate(c: Rational, lo0: Rational, hi0: Rational, stop: StopRule) -> Trace:
    """Repeatedly replace one end of ``[lo0, hi0]`` by the mediant."""
    c, lo0, hi0 = as_fraction(c), as_fraction(lo0), as_fraction(hi0)
    if lo0 < 0 or cmp_sqrt(lo0, c) is not Cmp.BELOW:
        raise DomainError(f"invalid bracket: lower end {lo0} is not below sqrt({c})")
    if cmp_sqrt(hi0, c) is not Cmp.ABOVE:
        raise DomainError(f"invalid bracket: upper end {hi0} is not above sqrt({c})")
    e: Union[Enclosure, ExactRoot] = Enclosure(c, lo0, hi0)
    trace = Trace("interpolation", _INTERP_COLUMNS)
    trace.add(step=0, lo=lo0, hi=hi0, decision="start")
    step = 0
    while True:
        if stop.iterations is not None and len(trace) >= stop.iterations:
            break
        if stop.width is not None and e.width <= stop.width:
            break
        m = mediant(e.lo, e.hi)
        if stop.max_den is not None and m.denominator > stop.max_den:
            break
        step += 1
        nxt = interpolate_step(e)
        if isinstance(nxt, ExactRoot):
            trace.add(step=step, lo=m, hi=m, mediant=m, residual=0, decision="exact")
            e = nxt
            break
        decision = "raise lo" if nxt.lo == m else "lower hi"
        trace.add(step=step, lo=nxt.lo, hi=nxt.hi, mediant=m,
                  residual=_residual(m, c), decision=decision)
        e = nxt
    trace.result = e
    return trace


def enclosures(trace: Trace) -> list[tuple[Fraction, Fraction]]:
    """The ``(lo, hi)`` pairs listed by an interpolation trace."""
    return [(row["lo"], row["hi"]) for row in trace.rows]


# -- Pell recurrence for sqrt(2) -----------------------------------------------

@dataclass(frozen=True)
class PellPair:
    a: int
    b: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1) or self.a * self.a - 2 * self.b * self.b != self.sign:
            raise DomainError(f"({self.a}, {self.b}) does not satisfy a^2 - 2b^2 = {self.sign}")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.a, self.b)


def pell2_step(p: PellPair) -> PellPair:
    # (a + 2b)^2 - 2(a + b)^2 = -(a^2 - 2b^2)
    return PellPair(p.a + 2 * p.b, p.a + p.b, -p.sign)


def pell2_iterate(n: int) -> list[PellPair]:
    if n < 1:
        raise DomainError("need at least one pair")
    pairs = [PellPair(1, 1, -1)]
    while len(pairs) < n:
        pairs.append(pell2_step(pairs[-1]))
    return pairs


# -- continued fractions -------------------------------------------------------

def cf_expansion(c: int, n_terms: int) -> list[int]:
    """Partial quotients of sqrt(c) from the integer surd recurrence."""
    a0 = isqrt(c)
    if a0 * a0 == c:
        raise DomainError(f"exact root: {c} is a perfect square")
    terms = []
    m, d, a = 0, 1, a0
    while len(terms) < n_terms:
        terms.append(a)
        m = d * a - m
        d = (c - m * m) // d
        a = (a0 + m) // d
    return terms


def convergents(terms: list[int]) -> list[Fraction]:
    if any(t < 1 for t in terms[1:]) or (terms and terms[0] < 0):
        raise DomainError("partial quotients must be positive")
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    out = []
    for t in terms:
        p_prev, p = t * p_prev + p, p_prev
        q_prev, q = t * q_prev + q, q_prev
        out.append(Fraction(p_prev, q_prev))
    return out


# -- Hero's method -------------------------------------------------------------

def hero_step(a: Rational, c: Rational) -> Fraction:
    """Arithmetic mean of ``a`` and ``c/a``."""
    a, c = as_fraction(a), as_fraction(c)
    if a <= 0:
        raise DomainError("hero_step needs a > 0")
    return (a + c / a) / 2


def harmonic_partner(a: Rational, c: Rational) -> Fraction:
    """``c/a``: the harmonic mean belonging to arithmetic mean ``a``."""
    a, c = as_fraction(a), as_fraction(c)
    if a <= 0:
        raise DomainError("harmonic_partner needs a > 0")
    return c / a


@dataclass(frozen=True)
class Theorem1Report:
    x: Fraction
    am: Fraction
    hm: Fraction
    product_is_three: bool
    hm_below: bool
    am_above: bool
    three_divides_hm_numerator: bool

    @property
    def passed(self) -> bool:
        return (self.product_is_three and self.hm_below and self.am_above
                and self.three_divides_hm_numerator)


def theorem1_check(x: Rational) -> Theorem1Report:
    """Means of ``x`` and ``3/x``: ``am * hm = 3``, ``hm < sqrt 3 < am``, 3 | num(hm)."""
    x = as_fraction(x)
    if x <= 0:
        raise DomainError("theorem1_check needs x > 0")
    am = (x + 3 / x) / 2
    hm = 2 / (1 / x + x / 3)
    return Theorem1Report(
        x=x, am=am, hm=hm,
        product_is_three=am * hm == 3,
        hm_below=cmp_sqrt(hm, 3) is Cmp.BELOW,
        am_above=cmp_sqrt(am, 3) is Cmp.ABOVE,
        three_divides_hm_numerator=hm.numerator % 3 == 0,
    )


def heath_mixed() -> Trace:
    """Heath's route to 265/153 < sqrt 3 < 1351/780.

    Three Hero steps from 1 reach 97/56, whose partner is 168/97; the mediant
    of that pair gives the lower bound, and two Hero steps from 5/3 give the
    upper bound.  The pair is recorded in its true order, 168/97 < sqrt 3 < 97/56.
    """
    trace = Trace("heath-mixed", ("step", "operation", "input", "output", "position"))

    def log(op: str, inp: Fraction, out: Fraction) -> None:
        trace.add(step=len(trace) + 1, operation=op, input=inp, output=out,
                  position=cmp_sqrt(out, 3))

    a = Fraction(1)
    for _ in range(3):
        nxt = hero_step(a, 3)
        log("hero", a, nxt)
        a = nxt
    partner = harmonic_partner(a, 3)
    log("harmonic partner", a, partner)
    pair = Enclosure(3, partner, a)
    lower = mediant(pair.hi, pair.lo)
    trace.add(step=len(trace) + 1, operation="mediant", input=None, output=lower,
              position=cmp_sqrt(lower, 3))
    if cmp_sqrt(lower, 3) is not Cmp.BELOW:
        raise ArithmeticError("mediant failed to give a lower bound")
    upper = Fraction(5, 3)
    for _ in range(2):
        nxt = hero_step(upper, 3)
        log("hero", upper, nxt)
        upper = nxt
    trace.result = Enclosure(3, lower, upper)
    return trace


# -- dyadic bisection ------------------------------------------------------------

def midpoint_square(a: Rational, b: Rational, a_sq: Rational, b_sq: Rational) -> Fraction:
    """``((a+b)/2)^2`` from cached squares: ``(a^2 + b^2)/2 - ((a-b)/2)^2``."""
    a, b = as_fraction(a), as_fraction(b)
    half_gap = (a - b) / 2
    return (as_fraction(a_sq) + as_fraction(b_sq)) / 2 - half_gap * half_gap


@dataclass(frozen=True)
class DyadicBracket:
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


_DYADIC_COLUMNS = ("step", "x", "square", "method", "position")


def _dyadic_bracket(n: Fraction, depth: int, trace: Optional[Trace] = None) -> DyadicBracket:
    if n <= 0:
        raise DomainError("radicand must be positive")
    if depth < 0:
        raise DomainError("depth must be non-negative")

    def log(x: Fraction, sq: Fraction, method: str) -> Cmp:
        pos = Cmp((sq > n) - (sq < n))
        if trace is not None:
            trace.add(step=len(trace), x=x, square=sq, method=method, position=pos)
        return pos

    if trace is not None:
        trace.add(step=0, x=None, square=n, method="radicand", position=None)
    # floor(sqrt(n)) == isqrt(floor(n)) for rational n >= 0
    r = isqrt(n.numerator // n.denominator)
    if r * r == n:
        root = Fraction(r)
        log(root, root * root, "direct")
        return DyadicBracket(root, root)
    lo, hi = Fraction(max(r - 1, 0)), Fraction(r + 1)
    lo_sq, hi_sq = lo * lo, hi * hi
    log(lo, lo_sq, "direct")
    log(hi, hi_sq, "direct")
    if not lo_sq < n < hi_sq:
        raise ArithmeticError(f"integer bracket [{lo}, {hi}] misses sqrt({n})")
    if hi - lo == 2:
        mid = lo + 1
        mid_sq = mid * mid
        if log(mid, mid_sq, "direct") is Cmp.ABOVE:
            hi, hi_sq = mid, mid_sq
        else:
            lo, lo_sq = mid, mid_sq
    for _ in range(depth):
        mid = (lo + hi) / 2
        mid_sq = midpoint_square(lo, hi, lo_sq, hi_sq)
        pos = log(mid, mid_sq, "midpoint")
        if pos is Cmp.EQUAL:
            return DyadicBracket(mid, mid)
        if pos is Cmp.BELOW:
            lo, lo_sq = mid, mid_sq
        else:
            hi, hi_sq = mid, mid_sq
    return DyadicBracket(lo, hi)


def dyadic_sqrt_trace(n: Rational, depth: int) -> Trace:
    """Bisection log: radicand, the integer bracket, then each dyadic midpoint."""
    trace = Trace("dyadic-sqrt", _DYADIC_COLUMNS)
    trace.result = _dyadic_bracket(as_fraction(n), depth, trace)
    return trace


def dyadic_sqrt_bound(n: Rational, depth: int, direction: Side) -> Fraction:
    """Bound on sqrt(n) with denominator dividing ``2**depth``.

    Exact roots are returned as they are, whichever side is asked for.
    """
    bracket = _dyadic_bracket(as_fraction(n), depth)
    return bracket.lo if direction is Side.LOWER else bracket.hi
