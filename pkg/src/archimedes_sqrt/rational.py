"""Exact rationals and the comparison-against-a-square-root primitive.

Everything is backed by :class:`fractions.Fraction` and Python's unbounded
``int``; nothing here ever touches floating point.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Cmp",
    "DomainError",
    "Fraction",
    "MixedNumber",
    "Rational",
    "as_fraction",
    "cmp_sqrt",
    "format_fraction",
    "format_mixed",
    "isqrt",
    "mediant",
    "parse_fraction",
    "reduce",
    "square",
    "terminating_decimal",
    "to_decimal",
]

Rational = Union[int, Fraction]


class DomainError(ValueError):
    """An argument lies outside the domain of an exact operation."""


class Cmp(enum.IntEnum):
    """Position of a rational relative to a square root."""

    BELOW = -1
    EQUAL = 0
    ABOVE = 1


def as_fraction(x: Rational | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def reduce(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("undefined fraction")
    return Fraction(num, den)


def square(f: Rational) -> Fraction:
    f = as_fraction(f)
    return f * f


def cmp_sqrt(f: Rational, c: Rational) -> Cmp:
    """Return the sign of ``f**2 - c`` by cross-multiplied integers.

    ``Cmp.BELOW`` means ``f < sqrt(c)``.
    """
    f, c = as_fraction(f), as_fraction(c)
    if f < 0 or c < 0:
        raise DomainError("cmp_sqrt needs non-negative arguments")
    lhs = f.numerator ** 2 * c.denominator
    rhs = c.numerator * f.denominator ** 2
    return Cmp((lhs > rhs) - (lhs < rhs))


def isqrt(n: int) -> int:
    """Floor of the square root of a natural number."""
    if n < 0:
        raise DomainError("isqrt of a negative number")
    return math.isqrt(n)


def mediant(f1: Rational, f2: Rational) -> Fraction:
    # Taken on the reduced representations; the mediant of unreduced forms differs.
    f1, f2 = as_fraction(f1), as_fraction(f2)
    return Fraction(f1.numerator + f2.numerator, f1.denominator + f2.denominator)


def to_decimal(f: Rational, digits: int = 6) -> str:
    """Decimal expansion of ``f`` truncated to ``digits`` places.

    Truncation (never rounding) guarantees that every printed digit is a
    digit of the exact value.
    """
    f = as_fraction(f)
    if f < 0:
        raise DomainError("to_decimal expects a non-negative value")
    if digits < 0:
        raise DomainError("digits must be non-negative")
    scaled = f.numerator * 10 ** digits // f.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    if digits == 0:
        return str(whole)
    return f"{whole}.{frac:0{digits}d}"


def terminating_decimal(f: Rational, digits: int = 6) -> str | None:
    """Exact decimal form of ``f`` if it has at most ``digits`` places."""
    f = as_fraction(f)
    for k in range(digits + 1):
        if (f * 10 ** k).denominator == 1:
            return to_decimal(f, k)
    return None


@dataclass(frozen=True)
class MixedNumber:
    """``whole + frac_num/frac_den`` with ``0 <= frac_num < frac_den``."""

    whole: int
    frac_num: int = 0
    frac_den: int = 1

    def __post_init__(self):
        if self.frac_den <= 0 or not 0 <= self.frac_num < self.frac_den:
            raise DomainError(
                f"bad mixed number {self.whole} {self.frac_num}/{self.frac_den}")

    @classmethod
    def from_fraction(cls, f: Rational) -> MixedNumber:
        f = as_fraction(f)
        whole = f.numerator // f.denominator
        rest = f - whole
        return cls(whole, rest.numerator, rest.denominator)

    def to_fraction(self) -> Fraction:
        return self.whole + Fraction(self.frac_num, self.frac_den)

    def __str__(self) -> str:
        return format_mixed(self.to_fraction())


def format_fraction(f: Rational) -> str:
    """``p/q`` form, or a bare integer when the denominator is 1."""
    return str(as_fraction(f))


def format_mixed(f: Rational) -> str:
    """Render as ``W p/q`` (``591 1/8``); negatives get a leading minus."""
    f = as_fraction(f)
    if f < 0:
        return "-" + format_mixed(-f)
    whole, rest = divmod(f.numerator, f.denominator)
    if rest == 0:
        return str(whole)
    if whole == 0:
        return f"{rest}/{f.denominator}"
    return f"{whole} {rest}/{f.denominator}"


_NUMBER = re.compile(
    r"""^\s*(?P<sign>[-+])?\s*
    (?:
        (?P<whole>\d+)\s+(?P<mnum>\d+)\s*/\s*(?P<mden>\d+)   # mixed: 591 1/8
      | (?P<num>\d+)\s*/\s*(?P<den>\d+)                      # fraction: 4729/8
      | (?P<int>\d+)                                         # integer
    )\s*$""",
    re.VERBOSE,
)


def parse_fraction(text: str) -> Fraction:
    """Parse an integer, ``p/q`` or a mixed number ``W p/q``."""
    m = _NUMBER.match(text)
    if m is None:
        raise ValueError(f"malformed number {text!r}")
    if m["whole"] is not None:
        den = int(m["mden"])
        if den == 0:
            raise ValueError(f"malformed number {text!r}: zero denominator")
        value = int(m["whole"]) + Fraction(int(m["mnum"]), den)
    elif m["num"] is not None:
        den = int(m["den"])
        if den == 0:
            raise ValueError(f"malformed number {text!r}: zero denominator")
        value = Fraction(int(m["num"]), den)
    else:
        value = Fraction(int(m["int"]))
    return -value if m["sign"] == "-" else value
