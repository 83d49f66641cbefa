"""Machine-readable verification reports.

A report is a header (tool, field data, run configuration) plus one
entry per check.  Rendering is deterministic: with the same
configuration and seed two runs produce byte-identical output.  Timing
is therefore excluded unless explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

TOOL_NAME = "figplane"
TOOL_VERSION = "0.1.0"


@dataclass
class CheckEntry:
    id: str
    claim: str
    status: str                       # "pass" | "fail"
    counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def entry(id: str, claim: str, ok: bool, counts: dict | None = None,
          witnesses: list | None = None, elapsed_ms: float | None = None) -> CheckEntry:
    return CheckEntry(id, claim, "pass" if ok else "fail",
                      counts or {}, witnesses or [], elapsed_ms)


@dataclass
class Report:
    header: dict
    entries: list[CheckEntry]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self, timings: bool = False) -> str:
        checks = []
        for e in self.entries:
            d = {"id": e.id, "claim": e.claim, "status": e.status,
                 "counts": e.counts, "witnesses": e.witnesses}
            if timings:
                d["elapsed_ms"] = round(e.elapsed_ms, 3) if e.elapsed_ms is not None else None
            checks.append(d)
        doc = {"header": self.header, "checks": checks,
               "status": "pass" if self.passed else "fail"}
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["check,status,detail"]
        for e in self.entries:
            detail = ";".join(f"{k}={v}" for k, v in e.counts.items())
            lines.append(f"{e.id},{e.status},{detail}")
        return "\n".join(lines) + "\n"

    def to_text(self, timings: bool = False) -> str:
        lines = [f"{TOOL_NAME} {TOOL_VERSION}  q={self.header.get('q')}"]
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            t = f"  [{e.elapsed_ms:.0f} ms]" if timings and e.elapsed_ms is not None else ""
            lines.append(f"{mark}  {e.id}: {e.claim}{t}")
            for key, val in e.counts.items():
                lines.append(f"      {key} = {val}")
            for w in e.witnesses:
                lines.append(f"      witness: {w}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str, timings: bool = False) -> str:
        if fmt == "json":
            return self.to_json(timings)
        if fmt == "csv":
            return self.to_csv()
        return self.to_text(timings)
