"""Versioned JSON run reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__

SCHEMA = "ppw.report/1"


@dataclass
class RunReport:
    command: str
    input: dict
    verdicts: list[dict] = field(default_factory=list)
    results: dict = field(default_factory=dict)
    seed: int = 0
    timing: dict = field(default_factory=dict)
    engine: str = __version__
    schema: str = SCHEMA

    @property
    def statuses(self) -> list[str]:
        return [v["status"] for v in self.verdicts]

    @property
    def failed(self) -> bool:
        return "FAIL" in self.statuses

    def exit_code(self) -> int:
        """0 when something passed and nothing failed, 2 otherwise."""
        if self.failed or not self.statuses or "PASS" not in self.statuses:
            return 2
        return 0

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {"schema": self.schema, "engine": self.engine, "command": self.command,
             "input": self.input, "seed": self.seed, "verdicts": self.verdicts,
             "results": self.results}
        if with_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2, sort_keys=True)

    def canonical(self) -> str:
        """The report without wall-clock timings; equal for equal (input, seed)."""
        return self.to_json(with_timing=False)

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(command=d["command"], input=d["input"], verdicts=d["verdicts"],
                   results=d.get("results", {}), seed=d["seed"], timing=d.get("timing", {}),
                   engine=d["engine"], schema=d["schema"])

    @classmethod
    def from_json(cls, s: str) -> "RunReport":
        return cls.from_dict(json.loads(s))

    def summary_lines(self) -> list[str]:
        lines = []
        for v in self.verdicts:
            word = v.get("word")
            tag = f"[{' '.join(map(str, word))}] " if word is not None else ""
            lines.append(f"{v['status']:4s}  {tag}{v['name']}: {v['reason']}")
        return lines
