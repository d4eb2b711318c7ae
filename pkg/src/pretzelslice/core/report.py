from __future__ import annotations

"""
Census run report.

Counts per verdict, per obstruction reason and per pair count, the number
of knots that broke one of the structural lemmas on 0-pair quintuples, and
wall-clock time per stage. The summary is printed after a census and can be
emitted as JSON (`--summary-json`).
"""

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pretzelslice.core.models import Verdict


@dataclass
class CensusReport:
    started_at: float = field(default_factory=time.perf_counter)
    finished_at: float | None = None
    duration_s: float | None = None

    odd_bound: int = 0
    de_max: Optional[int] = None

    records: int = 0
    by_verdict: Counter = field(default_factory=Counter)
    by_reason: Counter = field(default_factory=Counter)
    by_pairs: Counter = field(default_factory=Counter)
    single_twist_cases: Counter = field(default_factory=Counter)

    # Lemma name -> tuples on which it failed.
    lemma_exceptions: Dict[str, List[List[int]]] = field(
        default_factory=lambda: {"two_zeros": [], "lower_bounds": [], "tight_d": []}
    )

    time_by_stage: Dict[str, float] = field(
        default_factory=lambda: {"enumerate": 0.0, "evaluate": 0.0, "write": 0.0}
    )

    def add_verdict(self, verdict: Verdict) -> None:
        self.records += 1
        self.by_verdict[verdict.kind.value] += 1
        if verdict.reason is not None:
            self.by_reason[verdict.reason.value] += 1
        profile = verdict.trace.pair_profile
        if profile is not None:
            self.by_pairs[str(profile.t)] += 1
        if verdict.trace.single_twist_case is not None:
            self.single_twist_cases[str(verdict.trace.single_twist_case)] += 1

    def add_lemma_exception(self, lemma: str, params: List[int]) -> None:
        self.lemma_exceptions.setdefault(lemma, []).append(list(params))

    @property
    def lemma_exception_count(self) -> int:
        return sum(len(v) for v in self.lemma_exceptions.values())

    def add_time(self, stage: str, seconds: float) -> None:
        self.time_by_stage[stage] = self.time_by_stage.get(stage, 0.0) + seconds

    def finish(self) -> None:
        self.finished_at = time.perf_counter()
        self.duration_s = self.finished_at - self.started_at

    def to_dict(self) -> Dict[str, Any]:
        return {
            "odd_bound": self.odd_bound,
            "de_max": self.de_max,
            "records": self.records,
            "by_verdict": dict(sorted(self.by_verdict.items())),
            "by_reason": dict(sorted(self.by_reason.items())),
            "by_pairs": dict(sorted(self.by_pairs.items())),
            "single_twist_cases": dict(sorted(self.single_twist_cases.items())),
            "lemma_exceptions": {k: len(v) for k, v in sorted(self.lemma_exceptions.items())},
        }

    def to_json(self, *, indent: int | None = None) -> str:
        return json.dumps({"summary": self.to_dict()}, indent=indent, sort_keys=False)

    def summary_line(self) -> str:
        parts = [f"{self.records} records"]
        parts.extend(f"{k}={v}" for k, v in sorted(self.by_verdict.items()))
        if self.by_reason:
            parts.append("reasons: " + ", ".join(f"{k}={v}" for k, v in sorted(self.by_reason.items())))
        parts.append(f"lemma exceptions={self.lemma_exception_count}")
        if self.duration_s is not None:
            parts.append(f"{self.duration_s:.1f}s")
        return " | ".join(parts)


class StageTimer:
    def __init__(self, report: CensusReport, stage: str):
        self._report = report
        self._stage = stage
        self._t0: float | None = None

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._t0 is not None:
            self._report.add_time(self._stage, time.perf_counter() - self._t0)
        return False
