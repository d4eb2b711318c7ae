from __future__ import annotations

"""
Self-test: the identities every build must satisfy.

Three groups of checks run:

    * closed forms against their matrix oracles over a seeded random corpus
      of odd pretzel knots (signature, determinant), plus the |ℋ| count;
    * worked values for a handful of named knots;
    * one census sweep with the identity checks done here instead of inside
      the engine, so a failure is counted rather than raised.

`--oracle` adds the generic embedding search as an independent check on
the reduced solver, single-twist quintuples included, for a+b+c up to 21
by default. Each check yields a CheckResult; `render_table` prints
them. The CLI exits 0 only if every check passed.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from pretzelslice.constants import DEFAULT_ODD_BOUND, DEFAULT_ORACLE_MAX_DIM, DEFAULT_ORACLE_MAX_SUM
from pretzelslice.core.errors import ConsistencyError, EulerZeroError, InvalidBoundError
from pretzelslice.core.models import CosetReport, ObstructionTrace, Verdict, VerdictKind
from pretzelslice.cosets.quotient import enumerate_H, hex_size
from pretzelslice.embedding.generic_search import generic_embedding_search
from pretzelslice.embedding.lattice_embed import build_embedding_matrix, normalize, solve_embedding
from pretzelslice.invariants.knot_invariants import (
    determinant,
    determinant_oracle,
    signature_formula,
    signature_oracle,
)
from pretzelslice.logging.helpers import get_logger
from pretzelslice.plumbing.forms import signature_and_rank
from pretzelslice.plumbing.graphs import (
    build_gamma0,
    expand_to_gamma_plus,
    incidence_matrix,
    kirby_signature_delta,
)
from pretzelslice.runtime.census import Census, CensusConfig, enumerate_quintuples, lemma_failures
from pretzelslice.runtime.pipeline import VerdictEngine

Params = Tuple[int, ...]

_SEED = 1729
_MAX_EXAMPLES = 5
_HEX_SWEEP_BOUND = 15

_SWEEP_CHECKS: Tuple[Tuple[str, str], ...] = (
    ("sqrt_det", "R² = det(K) for every solution"),
    ("gram", "AᵀA = Q₊ for every solution"),
    ("definite", "Q₊ positive definite, rank a+b+c"),
    ("kirby", "σ(Q₊) - σ(Q₀) = a+b+c"),
    ("two_zeros", "lemma: two zeros force a pair"),
    ("lower_bounds", "lemma: lower bounds on d, e"),
    ("tight_d", "lemma: tight d forces large e"),
    ("zero_pair", "0-pair knots are not slice"),
    ("one_pair", "1-pair knots without ±1 are not slice"),
    ("mutant_ribbon", "mutant ribbon knots pass every obstruction"),
    ("collapse", "one-generator collapse bounds"),
)


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failed: int = 0
    examples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, what: object) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < _MAX_EXAMPLES:
                self.examples.append(str(what))


def random_odd_tuples(
    samples: int, *, seed: int = _SEED, strands: Sequence[int] = (3, 5, 7), bound: int = 99
) -> List[Params]:
    """Seeded pseudo-random odd tuples with |p_i| ≤ bound."""
    rng = random.Random(seed)
    out: List[Params] = []
    for _ in range(samples):
        k = rng.choice(tuple(strands))
        out.append(tuple(rng.randrange(1, bound + 1, 2) * rng.choice((1, -1)) for _ in range(k)))
    return out


class SelfTest:
    """Run every check and collect the results.

    Args:
        census_bound: odd bound for the census sweep.
        samples: size of the random corpus for the formula checks.
        oracle: also compare the generic embedding search.
        oracle_max: largest a+b+c (and d, e) the oracle comparison visits.
        workers: worker processes for the census sweep.
    """

    def __init__(
        self,
        *,
        census_bound: int = DEFAULT_ODD_BOUND,
        samples: int = 1000,
        oracle: bool = False,
        oracle_max: int = DEFAULT_ORACLE_MAX_SUM,
        workers: int = 1,
        logger: logging.Logger | None = None,
    ) -> None:
        if samples < 0:
            raise InvalidBoundError(f"--samples must be non-negative, got {samples}")
        if oracle and not 3 <= oracle_max <= DEFAULT_ORACLE_MAX_DIM:
            raise InvalidBoundError(f"--oracle-max must lie in 3..{DEFAULT_ORACLE_MAX_DIM}, got {oracle_max}")
        self._config = CensusConfig(odd_bound=census_bound, workers=workers, check_identities=False)
        self._samples = samples
        self._oracle = oracle
        self._oracle_max = oracle_max
        self._log = logger or get_logger("selftest")

    # ------------------------------------------------------------------ #
    def run(self) -> List[CheckResult]:
        results: List[CheckResult] = []
        results.extend(self._formula_checks())
        results.append(self._hex_count_check())
        results.append(self._worked_values())
        results.extend(self._census_sweep())
        if self._oracle:
            results.append(self._oracle_check())
        for res in results:
            if res.passed:
                self._log.info("✔  %s (%d checked)", res.name, res.checked)
            else:
                self._log.warning("⚠  %s: %d of %d failed", res.name, res.failed, res.checked)
        return results

    # ------------------------------------------------------------------ #
    def _formula_checks(self) -> List[CheckResult]:
        sig = CheckResult("signature formula = Q₀ oracle")
        det = CheckResult("determinant formula = Q₀ oracle")
        for params in random_odd_tuples(self._samples):
            try:
                sigma = signature_formula(params).sigma
            except EulerZeroError:
                sig.record(False, f"{params}: ê = 0")
            else:
                oracle = signature_oracle(params, verify=False)
                sig.record(sigma == oracle, f"{params}: formula {sigma}, oracle {oracle}")
            closed, oracle = determinant(params), determinant_oracle(params)
            det.record(closed == oracle, f"{params}: formula {closed}, oracle {oracle}")
        return [sig, det]

    def _hex_count_check(self) -> CheckResult:
        res = CheckResult(f"|ℋ| closed form, a ≤ b ≤ c ≤ {_HEX_SWEEP_BOUND}")
        odd = range(1, _HEX_SWEEP_BOUND + 1, 2)
        for a in odd:
            for b in range(a, _HEX_SWEEP_BOUND + 1, 2):
                for c in range(b, _HEX_SWEEP_BOUND + 1, 2):
                    n, expected = len(enumerate_H(a, b, c)), hex_size(a, b, c)
                    res.record(n == expected, f"{(a, b, c)}: {n} points, formula {expected}")
        return res

    def _worked_values(self) -> CheckResult:
        res = CheckResult("worked values")
        engine = VerdictEngine(check_identities=False, logger=self._log)

        v = engine.evaluate((-3, -7, -19, 3, 47))
        reps = v.trace.coset_reports
        res.record(
            bool(reps) and all(r.R == 99 and r.H == 241 and not r.cond_II for r in reps),
            "P(-3,-7,-19,3,47): R = 99, |ℋ| = 241, condition II fails",
        )
        res.record(v.trace.determinant == 9801, f"P(-3,-7,-19,3,47): det {v.trace.determinant}, expected 9801")
        res.record(v.is_not_slice, f"P(-3,-7,-19,3,47): verdict {v.kind.value}")
        res.record(kirby_signature_delta((-3, -7, -19, 3, 47)) == 29, "P(-3,-7,-19,3,47): Kirby delta ≠ 29")

        v = engine.evaluate((-3, -7, -19, 19, 55))
        reps = v.trace.coset_reports
        res.record(
            bool(reps) and all(r.R == 437 and not r.cond_I for r in reps),
            "P(-3,-7,-19,19,55): R = 437, condition I fails",
        )
        res.record(v.trace.determinant == 190969, f"P(-3,-7,-19,19,55): det {v.trace.determinant}")

        v = engine.evaluate((-3, -5, -7, 3, 5))
        reps = v.trace.coset_reports
        res.record(
            bool(reps) and all(r.R == 15 for r in reps) and v.trace.any_full_coverage,
            "P(-3,-5,-7,3,5): R = 15 with full coverage",
        )
        res.record(v.trace.determinant == 225, f"P(-3,-5,-7,3,5): det {v.trace.determinant}")
        res.record(kirby_signature_delta((-3, -5, -7, 3, 5)) == 15, "P(-3,-5,-7,3,5): Kirby delta ≠ 15")

        v = engine.evaluate((-3, -7, -19, 7, 31))
        res.record(
            any(r.case == 2 and r.case_identity_holds for r in v.trace.coset_reports),
            "P(-3,-7,-19,7,31): R = b|ax - cz| for a case-2 solution",
        )
        return res

    # ------------------------------------------------------------------ #
    def _census_sweep(self) -> List[CheckResult]:
        checks: Dict[str, CheckResult] = {key: CheckResult(label) for key, label in _SWEEP_CHECKS}
        completed = CheckResult(f"census sweep, odd bound {self._config.odd_bound}")
        census = Census(self._config, logger=self._log)
        try:
            for verdict in census.run():
                self._check_verdict(verdict, checks)
            completed.record(True, "")
        except ConsistencyError as exc:
            completed.record(False, exc)
        return [completed, *checks.values()]

    def _check_verdict(self, verdict: Verdict, checks: Dict[str, CheckResult]) -> None:
        trace = verdict.trace
        q = trace.normalized
        if q is None:
            return
        label = q.as_tuple()

        for rep in trace.coset_reports:
            where = f"{label} {rep.solution.as_tuple()}"
            checks["sqrt_det"].record(rep.R * rep.R == trace.determinant, f"{where}: R = {rep.R}, det = {trace.determinant}")
            try:
                build_embedding_matrix(q, rep.solution)
                ok = True
            except ConsistencyError:
                ok = False
            checks["gram"].record(ok, where)
            checks["collapse"].record(_collapse_ok(rep), f"{where}: |ℋ̄| = {rep.H_bar}, one generator {rep.H_bar_single}, case {rep.case}")

        q_plus = incidence_matrix(expand_to_gamma_plus(build_gamma0(label), allow_unit_arms=True))
        sig, rank = signature_and_rank(q_plus, verify=False)
        checks["definite"].record(sig == rank == q_plus.dimension == q.rank, f"{label}: σ = {sig}, rank {rank}")
        delta = kirby_signature_delta(label, verify=False)
        checks["kirby"].record(delta == q.rank, f"{label}: delta {delta}, a+b+c = {q.rank}")

        failed = lemma_failures(verdict)
        for lemma in ("two_zeros", "lower_bounds", "tight_d"):
            checks[lemma].record(lemma not in failed, label)

        profile = trace.pair_profile
        if profile is not None and profile.t == 0:
            checks["zero_pair"].record(verdict.is_not_slice, f"{trace.params}: {verdict.kind.value}")
        if profile is not None and profile.t == 1 and not profile.has_single_twists:
            checks["one_pair"].record(verdict.is_not_slice, f"{trace.params}: {verdict.kind.value}")
        if trace.mutant_ribbon:
            checks["mutant_ribbon"].record(_passes_obstructions(verdict, trace), f"{trace.params}: {verdict.kind.value}")

    # ------------------------------------------------------------------ #
    def _oracle_check(self) -> CheckResult:
        cap = self._oracle_max
        res = CheckResult(f"generic search agrees with the solver, a+b+c ≤ {cap}")
        for params in enumerate_quintuples(CensusConfig(odd_bound=cap)):
            a, b, c = (-p for p in params[:3])
            if a + b + c > cap:
                continue
            q_plus = incidence_matrix(expand_to_gamma_plus(build_gamma0(params), allow_unit_arms=True))
            found = generic_embedding_search(q_plus, max_dim=DEFAULT_ORACLE_MAX_DIM) is not None
            solved = bool(solve_embedding(normalize(params)))
            res.record(found == solved, f"{params}: generic {found}, solver {solved}")
        return res


def _collapse_ok(rep: CosetReport) -> bool:
    if rep.H_bar > rep.H_bar_single:
        return False
    if rep.case is None:
        return True
    return rep.case_bound is not None and rep.H_bar_single <= rep.case_bound and bool(rep.case_identity_holds)


def _passes_obstructions(verdict: Verdict, trace: ObstructionTrace) -> bool:
    return (
        verdict.kind is VerdictKind.SLICE
        and trace.signature is not None
        and trace.signature.sigma == 0
        and bool(trace.embedding_solutions)
        and trace.any_full_coverage
    )


def all_passed(results: Sequence[CheckResult]) -> bool:
    return all(r.passed for r in results)


def render_table(results: Sequence[CheckResult], *, examples: Optional[int] = None) -> str:
    """Fixed-width pass/fail table; failing rows list up to `examples` offenders."""
    width = max([len("check")] + [len(r.name) for r in results])
    lines = [f"{'check':<{width}}  {'checked':>8}  {'failed':>7}  result"]
    lines.append("-" * len(lines[0]))
    for r in results:
        lines.append(f"{r.name:<{width}}  {r.checked:>8}  {r.failed:>7}  {'pass' if r.passed else 'FAIL'}")
        for ex in r.examples[: examples if examples is not None else _MAX_EXAMPLES]:
            lines.append(f"    {ex}")
    verdict = "all checks passed" if all_passed(results) else "SOME CHECKS FAILED"
    lines.append(verdict)
    return "\n".join(lines) + "\n"
