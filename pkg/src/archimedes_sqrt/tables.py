"""Text layouts for the four classical tables, regenerated from the algorithms."""
from __future__ import annotations

from fractions import Fraction

from .rational import format_mixed, terminating_decimal, to_decimal
from .sqrt_methods import (
    ResidualRecord,
    StopRule,
    brute_force_scan,
    dyadic_sqrt_trace,
    interpolate,
    squares_table,
)
from .trace import Trace

MINUS = "−"


def _signed(n: int) -> str:
    return f"{MINUS}{-n}" if n < 0 else str(n)


def _ratio(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def render_squares(trace: Trace, multiplier: int) -> str:
    lines = []
    for row in trace:
        n = row["n"]
        left = f"{n}² = {row['square']}"
        lines.append(f"{left:<16}{multiplier}×{n}² = {row['scaled']}")
        if row["increment"] is not None:
            left = f"+{row['increment']}"
            lines.append(f"{left:<16}+{row['scaled_increment']}")
    return "\n".join(lines) + "\n"


def render_residuals(records: list[ResidualRecord], c: int, digits: int = 6) -> str:
    lines = []
    for r in records:
        exact = terminating_decimal(r.fraction, digits)
        approx = f"= {exact}" if exact is not None else f"∼ {to_decimal(r.fraction, digits)}"
        lines.append(f"{r.a}² {MINUS} {c}×{r.b}² = {_signed(r.residual)}, "
                     f"{r.a}/{r.b} {approx}")
    return "\n".join(lines) + "\n"


def render_enclosures(trace: Trace, c: Fraction) -> str:
    root = f"√{format_mixed(c)}"
    lines = []
    for row in trace:
        if row["decision"] == "exact":
            lines.append(f"{root} = {_ratio(row['mediant'])}")
        else:
            lines.append(f"{_ratio(row['lo'])} < {root} < {_ratio(row['hi'])}")
    return "\n".join(lines) + "\n"


def render_bisection(trace: Trace, label: str = "") -> str:
    lines = []
    for row in trace:
        if row["method"] == "radicand":
            head = f"{label} = " if label else ""
            lines.append(f"{head}{format_mixed(row['square'])}")
            continue
        x = format_mixed(row["x"])
        if row["x"].denominator != 1:
            x = f"({x})"
        lines.append(f"{x}² = {format_mixed(row['square'])}")
    return "\n".join(lines) + "\n"


def table1() -> str:
    return render_squares(squares_table(120, 124, 3), 3)


def table2() -> str:
    return render_residuals(brute_force_scan(3, 780), 3)


def table3() -> str:
    return render_enclosures(interpolate(3, 1, 2, StopRule(iterations=16)), Fraction(3))


def table4() -> str:
    trace = dyadic_sqrt_trace(571 ** 2 + 153 ** 2, 3)
    return render_bisection(trace, "γ² = 571² + 153²")


WORKED_TABLES = {1: table1, 2: table2, 3: table3, 4: table4}


def emit_table(which: int) -> str:
    try:
        return WORKED_TABLES[which]()
    except KeyError:
        raise ValueError(f"no table {which}; choose 1-4") from None
