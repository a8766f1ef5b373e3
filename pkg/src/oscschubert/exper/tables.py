"""Frequency tables of real-solution counts by osculation type."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ..combinat import SchubertProblemSpec

__all__ = ["FrequencyTable", "tabulate", "render", "table_from_csv", "table_from_json", "FORMATS"]

FORMATS = ("text", "csv", "json")


@dataclass
class FrequencyTable:
    """Counts of transversal instances, rows keyed by osculation type.

    ``rows`` maps an osculation-type tuple (in the problem's condition
    order) to a Counter from number of real solutions to instance count.
    """

    problem: str | None = None
    num_complex: int | None = None
    rows: dict = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def sorted_types(self) -> list[tuple]:
        return sorted(self.rows, reverse=True)

    def total(self, otype) -> int:
        return sum(self.rows[tuple(otype)].values())

    def observed(self, otype) -> set[int]:
        return {c for c, m in self.rows[tuple(otype)].items() if m}

    def columns(self) -> list[int]:
        """Every count of the right parity from 0 (or 1) to num_complex."""
        if self.num_complex is None:
            return []
        return list(range(self.num_complex % 2, self.num_complex + 1, 2))

    def conditions(self) -> list[str]:
        if self.problem is None:
            return []
        return [str(p) for p in SchubertProblemSpec.parse(self.problem).partitions]

    def __eq__(self, other):
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        strip = lambda rows: {t: {c: m for c, m in cnt.items() if m} for t, cnt in rows.items()}
        return (self.problem, self.num_complex, strip(self.rows)) == (other.problem, other.num_complex, strip(other.rows))


def _get(rec, key):
    return rec[key] if isinstance(rec, dict) else getattr(rec, key)


def tabulate(records: Iterable) -> FrequencyTable:
    """Tally transversal records (objects or dicts) sharing one problem."""
    table = FrequencyTable()
    for rec in records:
        if not _get(rec, "transversal"):
            continue
        problem = _get(rec, "problem")
        if table.problem is None:
            table.problem = problem
            table.num_complex = _get(rec, "num_complex")
        elif problem != table.problem:
            raise ValueError(f"records mix problems {table.problem!r} and {problem!r}")
        elif _get(rec, "num_complex") != table.num_complex:
            raise ValueError("records disagree on the number of complex solutions")
        otype = tuple(_get(rec, "osculation_type"))
        table.rows.setdefault(otype, Counter())[_get(rec, "num_real")] += 1
    return table


def _render_text(table: FrequencyTable) -> str:
    if table.is_empty:
        return "(empty table)\n"
    conds = [f"r_{c}" for c in table.conditions()]
    cols = table.columns()
    head = conds + [str(c) for c in cols] + ["Total"]
    body = []
    for t in table.sorted_types():
        cnt = table.rows[t]
        body.append([str(r) for r in t] + [str(cnt[c]) if cnt.get(c) else "" for c in cols] + [str(table.total(t))])
    widths = [max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(head)]
    ntype = len(conds)

    def line(cells):
        left = " ".join(c.rjust(w) for c, w in zip(cells[:ntype], widths))
        mid = " ".join(c.rjust(w) for c, w in zip(cells[ntype:-1], widths[ntype:-1]))
        return f"{left} | {mid} | {cells[-1].rjust(widths[-1])}"

    title = f"{table.problem} = {table.num_complex}"
    sub = " " * (sum(widths[:ntype]) + ntype - 1) + " | Number of real solutions"
    out = [title, sub, line(head), "-" * len(line(head))]
    out.extend(line(row) for row in body)
    return "\n".join(out) + "\n"


def _render_csv(table: FrequencyTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["problem", table.problem or "", "num_complex", "" if table.num_complex is None else table.num_complex])
    conds = [f"r_{c}" for c in table.conditions()]
    cols = table.columns()
    w.writerow(conds + [f"real_{c}" for c in cols] + ["total"])
    for t in table.sorted_types():
        cnt = table.rows[t]
        w.writerow(list(t) + [cnt.get(c, 0) for c in cols] + [table.total(t)])
    return buf.getvalue()


def _render_json(table: FrequencyTable) -> str:
    doc = {
        "problem": table.problem,
        "num_complex": table.num_complex,
        "conditions": table.conditions(),
        "rows": [
            {
                "osculation_type": list(t),
                "counts": {str(c): m for c, m in sorted(table.rows[t].items()) if m},
                "total": table.total(t),
            }
            for t in table.sorted_types()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def render(table: FrequencyTable, fmt: str = "text") -> str:
    """Text (aligned columns), csv or json rendering."""
    if fmt == "text":
        return _render_text(table)
    if fmt == "csv":
        return _render_csv(table)
    if fmt == "json":
        return _render_json(table)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def table_from_json(text: str) -> FrequencyTable:
    doc = json.loads(text)
    rows = {
        tuple(r["osculation_type"]): Counter({int(c): m for c, m in r["counts"].items()})
        for r in doc["rows"]
    }
    return FrequencyTable(doc["problem"], doc["num_complex"], rows)


def table_from_csv(text: str) -> FrequencyTable:
    lines = list(csv.reader(io.StringIO(text)))
    meta, header, data = lines[0], lines[1], lines[2:]
    problem = meta[1] or None
    num_complex = int(meta[3]) if meta[3] else None
    ntype = sum(1 for h in header if h.startswith("r_"))
    cols = [int(h[len("real_"):]) for h in header if h.startswith("real_")]
    rows = {}
    for row in data:
        t = tuple(int(x) for x in row[:ntype])
        counts = [int(x) for x in row[ntype:ntype + len(cols)]]
        rows[t] = Counter({c: m for c, m in zip(cols, counts) if m})
    return FrequencyTable(problem, num_complex, rows)
