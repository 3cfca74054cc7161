"""Step logs for the algorithms and their text / CSV / JSON-lines renderings."""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from .rational import format_fraction, format_mixed


@dataclass
class Trace:
    """Ordered record of an algorithm's steps.

    ``columns`` fixes the field order used by every serializer; ``result``
    holds whatever the algorithm finally returned.
    """

    name: str
    columns: tuple[str, ...]
    rows: list[dict[str, Any]] = field(default_factory=list)
    result: Any = None

    def add(self, **row: Any) -> None:
        unknown = set(row) - set(self.columns)
        if unknown:
            raise KeyError(f"{self.name}: unknown trace fields {sorted(unknown)}")
        self.rows.append({col: row.get(col) for col in self.columns})

    def column(self, name: str) -> list[Any]:
        return [row[name] for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[dict[str, Any]]:
        return iter(self.rows)

    def to_text(self) -> str:
        return render_text(self)

    def to_csv(self) -> str:
        return render_csv(self)

    def to_jsonl(self) -> str:
        return render_jsonl(self)


def _machine_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, enum.Enum):
        return value.name.lower()
    return value


def _text_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, Fraction):
        return format_mixed(value)
    if isinstance(value, enum.Enum):
        return value.name.lower()
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_text(trace: Trace) -> str:
    cells = [list(trace.columns)]
    cells += [[_text_value(row[c]) for c in trace.columns] for row in trace.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(trace.columns))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip()
             for r in cells]
    return "\n".join(lines) + "\n"


def render_csv(trace: Trace) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(trace.columns)
    for row in trace.rows:
        writer.writerow(["" if row[c] is None else _machine_value(row[c])
                         for c in trace.columns])
    return buf.getvalue()


def render_jsonl(trace: Trace, extra: dict[str, Any] | None = None) -> str:
    lines = []
    for row in trace.rows:
        record = {"trace": trace.name}
        record.update({c: _machine_value(row[c]) for c in trace.columns})
        lines.append(json.dumps(record, ensure_ascii=False))
    if extra is not None:
        lines.append(json.dumps({k: _machine_value(v) for k, v in extra.items()},
                                ensure_ascii=False))
    return "\n".join(lines) + ("\n" if lines else "")
