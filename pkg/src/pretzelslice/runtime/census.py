from __future__ import annotations

"""
Census over signature-zero odd five-stranded pretzel knots.

Every multiset {-a, -b, -c, d, e} with odd a ≤ b ≤ c ≤ odd_bound and odd
d ≤ e ≤ cap, with 1/d + 1/e < 1/a + 1/b + 1/c (σ = 0), is evaluated once.
The tuple handed to the engine is a simple-ribbon arrangement of the
multiset when one exists, otherwise (-a, -b, -c, d, e).

Records come out sorted by multiset key whatever the worker count:
`ProcessPoolExecutor.map` yields results in submission order.
"""

import argparse
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from pretzelslice.core.errors import InvalidBoundError
from pretzelslice.core.interfaces.engine import VerdictEngineProtocol
from pretzelslice.core.models import Verdict
from pretzelslice.core.report import CensusReport, StageTimer
from pretzelslice.embedding.lattice_embed import lemma_lower_bounds, lemma_tight_d, lemma_two_zeros
from pretzelslice.knots.pretzel_core import mutant_ribbon_witness, pair_profile
from pretzelslice.logging.helpers import get_logger
from pretzelslice.runtime.pipeline import VerdictEngine

Params = Tuple[int, ...]
DeMax = Union[int, str]


# One engine per identity-check setting; worker processes build their own on import.
_ENGINES = {True: VerdictEngine(), False: VerdictEngine(check_identities=False)}


def _evaluate_params(params: Params, *, check: bool) -> Verdict:
    return _ENGINES[check].evaluate(params)


def resolve_workers(threads: Optional[int]) -> int:
    """--threads if given, else PRETZELSLICE_THREADS, else 1."""
    if threads is not None:
        return threads
    return int(os.getenv("PRETZELSLICE_THREADS", "1") or "1")


def _odd_range(lo: int, hi: int) -> range:
    start = lo if lo % 2 == 1 else lo + 1
    return range(start, hi + 1, 2)


@dataclass(frozen=True)
class CensusConfig:
    """Bounds and filters for one census run.

    `de_max` caps d and e; "auto" uses (a + b + c) · odd_bound per triple.
    `pairs` keeps only multisets with that many cancelling pairs.
    """

    odd_bound: int
    de_max: DeMax = "same"
    pairs: Optional[int] = None
    no_single_twists: bool = False
    simple_ribbon_only: bool = False
    workers: int = 1
    progress: bool = False
    check_identities: bool = True

    def __post_init__(self) -> None:
        if self.odd_bound < 3:
            raise InvalidBoundError(f"odd bound must be at least 3, got {self.odd_bound}")
        if isinstance(self.de_max, int) and self.de_max < 1:
            raise InvalidBoundError(f"--de-max must be positive, got {self.de_max}")
        if isinstance(self.de_max, str) and self.de_max not in ("same", "auto"):
            raise InvalidBoundError(f"--de-max must be an integer or 'auto', got {self.de_max!r}")
        if self.pairs is not None and self.pairs not in (0, 1, 2):
            raise InvalidBoundError(f"--pairs must be 0, 1 or 2, got {self.pairs}")
        if self.workers < 1:
            raise InvalidBoundError(f"--threads must be at least 1, got {self.workers}")

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CensusConfig":
        return cls(
            odd_bound=ns.max,
            de_max=ns.de_max,
            pairs=ns.pairs,
            no_single_twists=ns.no_single_twists,
            simple_ribbon_only=ns.simple_ribbon_only,
            workers=resolve_workers(ns.threads),
            progress=not ns.quiet,
        )

    def cap_for(self, a: int, b: int, c: int) -> int:
        if self.de_max == "auto":
            return (a + b + c) * self.odd_bound
        if self.de_max == "same":
            return self.odd_bound
        return int(self.de_max)


def signature_zero(a: int, b: int, c: int, d: int, e: int) -> bool:
    """σ(P(-a, -b, -c, d, e)) = 0, i.e. the Euler sum is negative."""
    return Fraction(1, d) + Fraction(1, e) < Fraction(1, a) + Fraction(1, b) + Fraction(1, c)


def enumerate_quintuples(config: CensusConfig) -> Iterator[Params]:
    """Normalised (-a, -b, -c, d, e) in multiset-key order, before filters."""
    bound = config.odd_bound
    for a in _odd_range(1, bound):
        for b in _odd_range(a, bound):
            for c in _odd_range(b, bound):
                cap = config.cap_for(a, b, c)
                for d in _odd_range(1, cap):
                    for e in _odd_range(d, cap):
                        if signature_zero(a, b, c, d, e):
                            yield (-a, -b, -c, d, e)


class Census:
    """Enumerate, filter, evaluate.

    A custom `engine` is evaluated in-process; the process pool only runs
    the module-level default engine.
    """

    def __init__(
        self,
        config: CensusConfig,
        *,
        engine: VerdictEngineProtocol | None = None,
        logger: logging.Logger | None = None,
    ) -> None:
        self._cfg = config
        self._engine = engine
        self._log = logger or get_logger("census")

    def candidates(self) -> List[Params]:
        cfg = self._cfg
        out: List[Tuple[Params, Params]] = []
        for quint in enumerate_quintuples(cfg):
            profile = pair_profile(quint)
            if cfg.pairs is not None and profile.t != cfg.pairs:
                continue
            if cfg.no_single_twists and profile.has_single_twists:
                continue
            witness = mutant_ribbon_witness(quint) if profile.t >= 2 else None
            if cfg.simple_ribbon_only and witness is None:
                continue
            params = witness.start if witness is not None else quint
            out.append((tuple(sorted(quint)), params))
        out.sort()
        return [params for _, params in out]

    def run(self, report: CensusReport | None = None) -> Iterator[Verdict]:
        report = report or CensusReport()
        report.odd_bound = self._cfg.odd_bound
        report.de_max = None if self._cfg.de_max == "auto" else self._cfg.cap_for(1, 1, 1)
        with StageTimer(report, "enumerate"):
            cands = self.candidates()
        self._log.info("census: %d multisets to evaluate (odd bound %d)", len(cands), self._cfg.odd_bound)

        bar = _progress_bar(len(cands), enabled=self._cfg.progress)
        try:
            for verdict in self._evaluate_all(cands, report):
                report.add_verdict(verdict)
                for lemma in lemma_failures(verdict):
                    report.add_lemma_exception(lemma, list(verdict.trace.params))
                    self._log.warning("⚠  lemma %s fails on %s", lemma, verdict.trace.params)
                if bar is not None:
                    bar.update(1)
                yield verdict
        finally:
            if bar is not None:
                bar.close()
            report.finish()

    def _evaluate_all(self, cands: List[Params], report: CensusReport) -> Iterator[Verdict]:
        if self._engine is not None:
            for params in cands:
                with StageTimer(report, "evaluate"):
                    verdict = self._engine.evaluate(params)
                yield verdict
            return
        if self._cfg.workers == 1 or len(cands) < 2:
            for params in cands:
                with StageTimer(report, "evaluate"):
                    verdict = _evaluate_params(params, check=self._cfg.check_identities)
                yield verdict
            return
        chunk = max(1, len(cands) // (self._cfg.workers * 8))
        with ProcessPoolExecutor(max_workers=self._cfg.workers) as pool:
            yield from pool.map(partial(_evaluate_params, check=self._cfg.check_identities), cands, chunksize=chunk)


def lemma_failures(verdict: Verdict) -> List[str]:
    """Names of the 0-pair structural lemmas the verdict's trace contradicts."""
    trace = verdict.trace
    q = trace.normalized
    if q is None:
        return []
    failed: List[str] = []
    if not all(lemma_two_zeros(q, sol) for sol in trace.embedding_solutions):
        failed.append("two_zeros")
    if not lemma_lower_bounds(q, trace.embedding_solutions):
        failed.append("lower_bounds")
    if not lemma_tight_d(q, trace.embedding_solutions):
        failed.append("tight_d")
    return failed


def _progress_bar(total: int, *, enabled: bool):
    if not enabled:
        return None
    try:
        from tqdm import tqdm
    except ImportError:
        return None
    return tqdm(total=total, desc="census", unit="knot", leave=False, disable=None)
