#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the verdict pipeline, the census driver and the run report.
"""
from __future__ import annotations

import os
import unittest
from itertools import permutations
from pathlib import Path
from typing import List, Sequence

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in os.sys.path:
    os.sys.path.insert(0, str(SRC))

from pretzelslice.core.errors import InvalidBoundError  # noqa: E402
from pretzelslice.core.interfaces import VerdictEngineProtocol  # noqa: E402
from pretzelslice.core.models import ObstructionReason, Verdict, VerdictKind  # noqa: E402
from pretzelslice.core.report import CensusReport  # noqa: E402
from pretzelslice.knots.pretzel_core import mirror  # noqa: E402
from pretzelslice.runtime.census import (  # noqa: E402
    Census,
    CensusConfig,
    enumerate_quintuples,
    lemma_failures,
    signature_zero,
)
from pretzelslice.runtime.pipeline import VerdictEngine, evaluate  # noqa: E402


# --------------------------------------------------------------------------- #
#  Base class                                                                 #
# --------------------------------------------------------------------------- #
class PipelineBaseTest(unittest.TestCase):
    def assertVerdict(self, params, kind: VerdictKind, reason: ObstructionReason | None = None) -> Verdict:
        v = evaluate(params)
        self.assertIs(v.kind, kind, f"{params}: {v.kind}")
        self.assertIs(v.reason, reason, f"{params}: {v.reason}")
        return v


class RecordingEngine:
    """Engine double that remembers what it was asked to evaluate."""

    def __init__(self) -> None:
        self.seen: List[Sequence[int]] = []
        self._inner = VerdictEngine()

    def evaluate(self, params: Sequence[int]) -> Verdict:
        self.seen.append(tuple(params))
        return self._inner.evaluate(params)


# --------------------------------------------------------------------------- #
#  1. Verdicts                                                                #
# --------------------------------------------------------------------------- #
class VerdictTests(PipelineBaseTest):
    def test_link(self) -> None:
        v = self.assertVerdict((2, 4, 6), VerdictKind.NOT_A_KNOT)
        self.assertIsNone(v.trace.signature)

    def test_signature_obstruction(self) -> None:
        v = self.assertVerdict((5, 5, 5, -3, -3), VerdictKind.NOT_SLICE, ObstructionReason.SIGNATURE)
        self.assertEqual(v.trace.signature.sigma, 2)
        self.assertTrue(v.trace.signature.infinite_order)
        self.assertIsNone(v.trace.normalized)

    def test_lattice_embedding_obstruction(self) -> None:
        v = self.assertVerdict((-3, -5, -7, 9, 27), VerdictKind.NOT_SLICE, ObstructionReason.LATTICE_EMBEDDING)
        self.assertEqual(v.trace.embedding_solutions, ())

    def test_coset_obstruction(self) -> None:
        v = self.assertVerdict((-3, -7, -19, 3, 47), VerdictKind.NOT_SLICE, ObstructionReason.COSET_COVERAGE)
        self.assertEqual(v.trace.determinant, 9801)
        self.assertEqual([r.R for r in v.trace.coset_reports], [99])
        self.assertFalse(v.trace.any_full_coverage)

    def test_simple_ribbon_is_slice(self) -> None:
        v = self.assertVerdict((3, -3, 5, -5, 7), VerdictKind.SLICE)
        self.assertIsNotNone(v.witness)
        self.assertTrue(v.mutant_ribbon)
        self.assertTrue(v.trace.simple_ribbon)
        self.assertTrue(v.trace.any_full_coverage)

    def test_mutant_order_is_inconclusive_but_flagged(self) -> None:
        v = self.assertVerdict((3, 5, -3, -5, 7), VerdictKind.INCONCLUSIVE)
        self.assertTrue(v.mutant_ribbon)
        self.assertFalse(v.trace.simple_ribbon)
        self.assertTrue(v.trace.normalized.mirrored)

    def test_seven_strands_only_signature(self) -> None:
        v = self.assertVerdict((3, -3, 5, -5, 7, -7, 9), VerdictKind.SLICE)
        self.assertIsNone(v.trace.normalized)

    def test_even_knots(self) -> None:
        self.assertVerdict((2, -3), VerdictKind.SLICE)
        self.assertVerdict((2, 3, 5), VerdictKind.INCONCLUSIVE)

    def test_engine_without_identity_checks(self) -> None:
        engine = VerdictEngine(check_identities=False)
        self.assertIsInstance(engine, VerdictEngineProtocol)
        self.assertEqual(engine.evaluate((-3, -7, -19, 3, 47)).kind, VerdictKind.NOT_SLICE)

    def test_lemmas_hold_on_worked_knot(self) -> None:
        self.assertEqual(lemma_failures(evaluate((-3, -7, -19, 3, 47))), [])

    def test_unit_pair_inconclusive_carries_reduction(self) -> None:
        v = self.assertVerdict((1, -1, 3, 5, -7, 9, -11), VerdictKind.INCONCLUSIVE)
        self.assertEqual(v.trace.signature.sigma, 0)
        self.assertFalse(v.mutant_ribbon)
        self.assertEqual(v.unit_pair_reduced, (3, 5, -7, 9, -11))

    def test_inconclusive_without_unit_pair_has_no_reduction(self) -> None:
        v = self.assertVerdict((3, 5, -3, -5, 7), VerdictKind.INCONCLUSIVE)
        self.assertIsNone(v.unit_pair_reduced)


# --------------------------------------------------------------------------- #
#  2. Mutation & mirror invariance                                            #
# --------------------------------------------------------------------------- #
class InvarianceTests(PipelineBaseTest):
    def _outcomes(self, multiset) -> set:
        return {(v.kind, v.reason) for v in map(evaluate, set(permutations(multiset)))}

    def test_not_slice_agrees_across_orderings(self) -> None:
        expected = {
            (-3, -7, -19, 3, 47): ObstructionReason.COSET_COVERAGE,
            (-3, -5, -7, 9, 27): ObstructionReason.LATTICE_EMBEDDING,
        }
        for multiset, reason in expected.items():
            with self.subTest(multiset=multiset):
                self.assertEqual(self._outcomes(multiset), {(VerdictKind.NOT_SLICE, reason)})

    def test_single_twist_multiset_agrees_across_orderings(self) -> None:
        self.assertEqual(len(self._outcomes((-1, -1, -3, 1, 5))), 1)

    def test_mirror_keeps_not_slice_split(self) -> None:
        for params in (
            (-3, -7, -19, 3, 47),
            (-3, -5, -7, 9, 27),
            (-1, -1, -3, 1, 5),
            (3, -3, 5, -5, 7),
            (3, 5, -3, -5, 7),
            (5, 5, 5, -3, -3),
        ):
            with self.subTest(params=params):
                v, w = evaluate(params), evaluate(mirror(params))
                self.assertEqual(v.is_not_slice, w.is_not_slice)
                self.assertIs(v.reason, w.reason)


# --------------------------------------------------------------------------- #
#  3. Census configuration & enumeration                                      #
# --------------------------------------------------------------------------- #
class CensusConfigTests(PipelineBaseTest):
    def test_validation(self) -> None:
        for kwargs in (
            {"odd_bound": 1},
            {"odd_bound": 5, "pairs": 3},
            {"odd_bound": 5, "workers": 0},
            {"odd_bound": 5, "de_max": "often"},
            {"odd_bound": 5, "de_max": 0},
        ):
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(InvalidBoundError):
                    CensusConfig(**kwargs)

    def test_caps(self) -> None:
        self.assertEqual(CensusConfig(odd_bound=7).cap_for(1, 3, 5), 7)
        self.assertEqual(CensusConfig(odd_bound=7, de_max="auto").cap_for(1, 3, 5), 63)
        self.assertEqual(CensusConfig(odd_bound=7, de_max=11).cap_for(1, 3, 5), 11)

    def test_signature_zero(self) -> None:
        self.assertTrue(signature_zero(3, 5, 7, 9, 27))
        self.assertTrue(signature_zero(1, 1, 1, 1, 1))
        self.assertFalse(signature_zero(3, 3, 3, 1, 1))

    def test_enumeration_at_bound_three(self) -> None:
        quints = list(enumerate_quintuples(CensusConfig(odd_bound=3)))
        self.assertEqual(len(quints), 9)
        self.assertIn((-1, -1, -1, 1, 1), quints)
        self.assertNotIn((-3, -3, -3, 1, 1), quints)
        for q in quints:
            a, b, c, d, e = -q[0], -q[1], -q[2], q[3], q[4]
            self.assertTrue(a <= b <= c and d <= e)
            self.assertTrue(signature_zero(a, b, c, d, e))


# --------------------------------------------------------------------------- #
#  4. Census runs                                                             #
# --------------------------------------------------------------------------- #
class CensusRunTests(PipelineBaseTest):
    def test_records_sorted_by_multiset(self) -> None:
        verdicts = list(Census(CensusConfig(odd_bound=3)).run())
        keys = [tuple(sorted(v.trace.params)) for v in verdicts]
        self.assertEqual(len(keys), 9)
        self.assertEqual(keys, sorted(keys))

    def test_report_counts(self) -> None:
        report = CensusReport()
        list(Census(CensusConfig(odd_bound=3)).run(report))
        self.assertEqual(report.records, 9)
        self.assertEqual(sum(report.by_verdict.values()), 9)
        self.assertEqual(report.lemma_exception_count, 0)
        self.assertIsNotNone(report.duration_s)
        self.assertIn('"summary"', report.to_json())
        self.assertIn("9 records", report.summary_line())

    def test_zero_pair_filter_all_not_slice(self) -> None:
        verdicts = list(Census(CensusConfig(odd_bound=5, pairs=0)).run())
        self.assertTrue(verdicts)
        for v in verdicts:
            with self.subTest(params=v.trace.params):
                self.assertEqual(v.trace.pair_profile.t, 0)
                self.assertIs(v.kind, VerdictKind.NOT_SLICE)

    def test_one_pair_without_single_twists_all_not_slice(self) -> None:
        verdicts = list(Census(CensusConfig(odd_bound=7, pairs=1, no_single_twists=True)).run())
        self.assertTrue(verdicts)
        for v in verdicts:
            with self.subTest(params=v.trace.params):
                self.assertEqual(v.trace.pair_profile.t, 1)
                self.assertFalse(v.trace.single_twists)
                self.assertIs(v.kind, VerdictKind.NOT_SLICE)

    def test_simple_ribbon_only_all_slice(self) -> None:
        verdicts = list(Census(CensusConfig(odd_bound=5, simple_ribbon_only=True)).run())
        self.assertTrue(verdicts)
        for v in verdicts:
            with self.subTest(params=v.trace.params):
                self.assertIs(v.kind, VerdictKind.SLICE)

    def test_no_single_twists_filter(self) -> None:
        verdicts = list(Census(CensusConfig(odd_bound=5, no_single_twists=True)).run())
        self.assertTrue(all(1 not in map(abs, v.trace.params) for v in verdicts))

    def test_custom_engine_sees_candidates(self) -> None:
        engine = RecordingEngine()
        census = Census(CensusConfig(odd_bound=3), engine=engine)
        list(census.run())
        self.assertEqual(engine.seen, census.candidates())


if __name__ == "__main__":
    unittest.main()
