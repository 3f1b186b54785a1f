"""Deterministic report rendering: text, JSON, and delimited tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .core import INF


def fmt(value) -> str:
    """Stable scalar formatting: exact for rationals, %.12g for floats."""
    if isinstance(value, Fraction):
        return str(value)
    if value == INF:
        return "inf"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.12g" % value
    return str(value)


@dataclass
class Table:
    name: str
    columns: Tuple[str, ...]
    rows: List[Tuple] = field(default_factory=list)


@dataclass
class Report:
    command: str
    config: Dict[str, object] = field(default_factory=dict)
    values: Dict[str, object] = field(default_factory=dict)
    tables: List[Table] = field(default_factory=list)
    findings: List[str] = field(default_factory=list)

    def add(self, key: str, value):
        self.values[key] = value

    def table(self, name: str, columns: Sequence[str]) -> Table:
        t = Table(name, tuple(columns))
        self.tables.append(t)
        return t

    def finding(self, message: str):
        self.findings.append(message)

    @property
    def violated(self) -> bool:
        return bool(self.findings)

    def render_text(self) -> str:
        out = ["# curvagraph %s" % self.command]
        for k in sorted(self.config):
            out.append("config %s = %s" % (k, fmt(self.config[k])))
        for k in sorted(self.values):
            out.append("%s = %s" % (k, fmt(self.values[k])))
        for t in self.tables:
            out.append("")
            out.append("[%s]" % t.name)
            out.append("\t".join(t.columns))
            for row in t.rows:
                out.append("\t".join(fmt(x) for x in row))
        if self.findings:
            out.append("")
            for f in self.findings:
                out.append("FINDING: %s" % f)
        out.append("")
        out.append("status: %s" % ("violation-found" if self.findings else "ok"))
        return "\n".join(out) + "\n"

    def render_json(self) -> str:
        def enc(x):
            if isinstance(x, Fraction):
                return {"num": x.numerator, "den": x.denominator}
            if x == INF:
                return "inf"
            return x
        payload = {
            "command": self.command,
            "config": {k: enc(v) for k, v in self.config.items()},
            "values": {k: enc(v) for k, v in self.values.items()},
            "tables": [{"name": t.name, "columns": list(t.columns),
                        "rows": [[enc(x) for x in row] for row in t.rows]}
                       for t in self.tables],
            "findings": list(self.findings),
            "status": "violation-found" if self.findings else "ok",
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def write_delimited(self, path: str):
        """All tables into one file, comma separated, one block per table."""
        import csv
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for t in self.tables:
                writer.writerow(["# table:%s" % t.name])
                writer.writerow(t.columns)
                for row in t.rows:
                    writer.writerow([fmt(x) for x in row])
