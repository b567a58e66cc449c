"""Row records shared by the CLI reports.

Integers are serialized as exact decimal strings so no consumer ever sees
a float.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

STATUSES = ("match", "mismatch", "reinterpreted", "inconclusive")


@dataclass(frozen=True)
class Row:
    claim: str
    location: str
    expected: str
    computed: str
    status: str
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def as_json(self) -> str:
        return json.dumps(
            {
                "claim": self.claim,
                "location": self.location,
                "expected": self.expected,
                "computed": self.computed,
                "status": self.status,
                "note": self.note,
            },
            sort_keys=True,
        )


def stringify(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return str(value)


def format_table(rows: list[Row]) -> str:
    headers = ("claim", "location", "expected", "computed", "status", "note")
    cells = [headers] + [
        (r.claim, r.location, r.expected, r.computed, r.status, r.note) for r in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for row in cells:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def format_jsonl(rows: list[Row]) -> str:
    return "\n".join(r.as_json() for r in rows)


def format_tsv(rows: list[Row]) -> str:
    headers = "\t".join(("claim", "location", "expected", "computed", "status", "note"))
    lines = [headers]
    for r in rows:
        lines.append(
            "\t".join((r.claim, r.location, r.expected, r.computed, r.status, r.note))
        )
    return "\n".join(lines)
