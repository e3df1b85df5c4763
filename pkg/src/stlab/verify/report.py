"""Verification reports: per-instance verdicts, aggregate status, JSON and CSV."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field

SCHEMA = "stlab/1"

PASS, FAIL, UNKNOWN, OBSERVED = "pass", "fail", "unknown", "observed"
VERDICTS = (PASS, FAIL, UNKNOWN, OBSERVED)

EXIT_CODES = {"pass": 0, "observational": 0, "fail": 1, "unknown": 2}


@dataclass
class Instance:
    params: dict
    verdict: str
    detail: dict = field(default_factory=dict)
    graph6: str | None = None
    # independent re-evaluation of a failure; run when the report is rendered
    recheck: Callable[[], bool] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_json(self) -> dict:
        out = {"params": self.params, "verdict": self.verdict, **self.detail}
        if self.graph6 is not None:
            out["graph6"] = self.graph6
        return out


@dataclass
class Report:
    claim: str
    params: dict
    instances: list[Instance] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    # instances that passed but were not stored individually (large sampling runs)
    unlisted_passes: int = 0

    def add(self, inst: Instance) -> Instance:
        self.instances.append(inst)
        return inst

    def counts(self) -> dict:
        c = Counter(i.verdict for i in self.instances)
        c[PASS] += self.unlisted_passes
        return {v: c.get(v, 0) for v in VERDICTS}

    @property
    def status(self) -> str:
        c = self.counts()
        if c[FAIL]:
            return "fail"
        if c[UNKNOWN]:
            return "unknown"
        if c[PASS]:
            return "pass"
        if c[OBSERVED]:
            return "observational"
        return "unknown"

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def witnesses(self) -> list[dict]:
        out = []
        for idx, inst in enumerate(self.instances):
            if inst.verdict != FAIL:
                continue
            w = {"instance": idx, "params": inst.params}
            if inst.graph6 is not None:
                w["graph6"] = inst.graph6
            if "certificate" in inst.detail:
                w["certificate"] = inst.detail["certificate"]
            if inst.recheck is not None:
                w["violation_rechecked"] = bool(inst.recheck())
            out.append(w)
        return out

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "counts": self.counts(),
            "summary": self.summary,
            "notes": self.notes,
            "instances": [i.to_json() for i in self.instances],
            "witnesses": self.witnesses(),
        }
        if include_timing:
            out["timing"] = self.timing
        return out

    def dumps(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json(include_timing), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "index", "params", "verdict", "graph6"])
        for idx, inst in enumerate(self.instances):
            w.writerow([self.claim, idx, json.dumps(inst.params, sort_keys=True), inst.verdict, inst.graph6 or ""])
        if self.unlisted_passes:
            w.writerow([self.claim, "", json.dumps({"unlisted": self.unlisted_passes}), PASS, ""])
        return buf.getvalue()


def merge_status(reports: list[Report]) -> str:
    statuses = {r.status for r in reports}
    for s in ("fail", "unknown", "pass", "observational"):
        if s in statuses:
            return s
    return "unknown"
