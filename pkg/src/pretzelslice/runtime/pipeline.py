from __future__ import annotations

"""
Verdict pipeline: one pretzel tuple in, one Verdict with its trace out.

Stages, in order:
    1. classification and cancelling-pair profile (links stop here);
    2. simple-ribbon and mutant-ribbon search;
    3. signature;
    4. for five strands: normalisation, embedding solutions (each checked
       against Q_{P₊} and the √det identity), coset coverage per solution.

Every applicable stage runs even when a ribbon witness is already known,
so the trace is complete. An obstruction firing on a mutant-ribbon multiset
is impossible for a correct stack and raises ConsistencyError.
"""

import logging
from dataclasses import replace
from typing import List, Optional, Sequence, Tuple

from pretzelslice.constants import MAX_SEARCH_STRANDS
from pretzelslice.core.errors import ConsistencyError
from pretzelslice.core.models import (
    CosetReport,
    EmbeddingSolution,
    KnotClass,
    NormalizedQuintuple,
    ObstructionReason,
    ObstructionTrace,
    PretzelTuple,
    RibbonReduction,
    Verdict,
    VerdictKind,
)
from pretzelslice.cosets.quotient import coset_conditions, enumerate_H, quotient_from_solution, r_equals_sqrt_det
from pretzelslice.embedding.lattice_embed import (
    build_embedding_matrix,
    normalize,
    single_twist_case,
    solve_embedding,
)
from pretzelslice.invariants.knot_invariants import determinant, signature_formula
from pretzelslice.knots.pretzel_core import (
    TupleLike,
    as_pretzel,
    classify,
    mutant_ribbon_witness,
    pair_profile,
    simple_ribbon_reduction,
    unit_pair_reduced,
)
from pretzelslice.logging.helpers import get_logger


class VerdictEngine:
    """Runs the obstruction stack on single tuples.

    With `check_identities` (the default) every embedding solution is also
    written out as a matrix A and checked against AᵀA = Q_{P₊} and
    R² = det(K); a failure raises ConsistencyError.
    """

    def __init__(self, *, check_identities: bool = True, logger: logging.Logger | None = None) -> None:
        self._check = check_identities
        self._log = logger or get_logger("pipeline")

    # ------------------------------------------------------------------ #
    def evaluate(self, params: TupleLike) -> Verdict:
        pt = as_pretzel(params)
        kc = classify(pt)
        profile = pair_profile(pt)
        base = ObstructionTrace(params=pt.params, knot_class=kc, pair_profile=profile)
        if kc is KnotClass.LINK:
            return Verdict(kind=VerdictKind.NOT_A_KNOT, trace=base)

        witness, mutant = self._ribbon(pt)
        if kc is KnotClass.EVEN_KNOT:
            trace = replace(base, simple_ribbon=witness is not None, mutant_ribbon=mutant)
            if witness is not None:
                return Verdict(kind=VerdictKind.SLICE, trace=trace, witness=witness, mutant_ribbon=True)
            return Verdict(kind=VerdictKind.INCONCLUSIVE, trace=trace, mutant_ribbon=mutant)

        signature = signature_formula(pt)
        trace = replace(
            base,
            signature=signature,
            determinant=determinant(pt),
            simple_ribbon=witness is not None,
            mutant_ribbon=mutant,
        )
        reason: Optional[ObstructionReason] = None
        if signature.sigma != 0:
            reason = ObstructionReason.SIGNATURE
        elif pt.k == 5:
            trace, reason = self._five_strand_stages(pt, trace)

        if reason is not None:
            if mutant:
                raise ConsistencyError(f"{pt} is mutant ribbon but the {reason.value} obstruction fired")
            self._log.debug("%s: not slice (%s)", pt, reason.value)
            return Verdict(kind=VerdictKind.NOT_SLICE, trace=trace, reason=reason)
        if witness is not None:
            return Verdict(kind=VerdictKind.SLICE, trace=trace, witness=witness, mutant_ribbon=True)
        reduced = unit_pair_reduced(pt) if profile.contains_unit_pair else None
        return Verdict(kind=VerdictKind.INCONCLUSIVE, trace=trace, mutant_ribbon=mutant, unit_pair_reduced=reduced)

    # ------------------------------------------------------------------ #
    def _ribbon(self, pt: PretzelTuple) -> Tuple[Optional[RibbonReduction], bool]:
        if pt.k > MAX_SEARCH_STRANDS:
            self._log.debug("%s: ribbon search skipped above %d strands", pt, MAX_SEARCH_STRANDS)
            return None, False
        witness = simple_ribbon_reduction(pt)
        if witness is not None:
            return witness, True
        return None, mutant_ribbon_witness(pt) is not None

    def _five_strand_stages(
        self, pt: PretzelTuple, trace: ObstructionTrace
    ) -> Tuple[ObstructionTrace, Optional[ObstructionReason]]:
        q = normalize(pt)
        solutions = solve_embedding(q)
        if self._check:
            self._check_solutions(q, solutions)
        reports: List[CosetReport] = []
        if solutions:
            region = enumerate_H(*q.negatives)
            reports = [coset_conditions(q, sol, region) for sol in solutions]
        trace = replace(
            trace,
            normalized=q,
            embedding_solutions=tuple(solutions),
            coset_reports=tuple(reports),
            single_twist_case=single_twist_case(q),
        )
        if not solutions:
            return trace, ObstructionReason.LATTICE_EMBEDDING
        if not trace.any_full_coverage:
            return trace, ObstructionReason.COSET_COVERAGE
        return trace, None

    def _check_solutions(self, q: NormalizedQuintuple, solutions: Sequence[EmbeddingSolution]) -> None:
        for sol in solutions:
            build_embedding_matrix(q, sol)
            if not r_equals_sqrt_det(q, quotient_from_solution(q, sol)):
                raise ConsistencyError(f"R² ≠ det(K) for {q.as_tuple()} with {sol.as_tuple()}")


_DEFAULT_ENGINE = VerdictEngine()


def evaluate(params: TupleLike) -> Verdict:
    """Evaluate one tuple with the default engine."""
    return _DEFAULT_ENGINE.evaluate(params)
