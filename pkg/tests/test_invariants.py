#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for signature and determinant: closed forms against the Q₀ oracles.
"""
from __future__ import annotations

import os
import unittest
from fractions import Fraction
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in os.sys.path:
    os.sys.path.insert(0, str(SRC))

from pretzelslice.core.errors import NotOddKnotError  # noqa: E402
from pretzelslice.invariants.knot_invariants import (  # noqa: E402
    determinant,
    determinant_oracle,
    euler_sum,
    signature_formula,
    signature_oracle,
)
from pretzelslice.knots.pretzel_core import mirror  # noqa: E402
from pretzelslice.runtime.selftest import random_odd_tuples  # noqa: E402


class InvariantsBaseTest(unittest.TestCase):
    def assertSigma(self, params, sigma: int) -> None:
        self.assertEqual(signature_formula(params).sigma, sigma, f"formula σ{params}")
        self.assertEqual(signature_oracle(params), sigma, f"oracle σ{params}")

    def assertDet(self, params, det: int) -> None:
        self.assertEqual(determinant(params), det, f"formula det{params}")
        self.assertEqual(determinant_oracle(params), det, f"oracle det{params}")


# --------------------------------------------------------------------------- #
#  1. Signature                                                               #
# --------------------------------------------------------------------------- #
class SignatureTests(InvariantsBaseTest):
    def test_euler_sum(self) -> None:
        self.assertEqual(euler_sum((3, 5, 7)), Fraction(71, 105))
        self.assertEqual(euler_sum((5, 5, 5, -3, -3)), Fraction(-1, 15))

    def test_worked_values(self) -> None:
        self.assertSigma((-3, -5, -7, 9, 27), 0)
        self.assertSigma((5, 5, 5, -3, -3), 2)
        self.assertSigma((-1, -1, -1), -2)
        self.assertSigma((3, 5, 7), 2)

    def test_report_fields(self) -> None:
        rep = signature_formula((5, 5, 5, -3, -3))
        self.assertEqual(rep.s, 1)
        self.assertTrue(rep.infinite_order)
        self.assertFalse(signature_formula((-3, -5, -7, 9, 27)).infinite_order)

    def test_mirror_flips_sign(self) -> None:
        for params in ((3, 5, 7), (5, 5, 5, -3, -3), (-1, 3, -5, 7, 9)):
            with self.subTest(params=params):
                self.assertEqual(signature_oracle(mirror(params)), -signature_oracle(params))

    def test_even_knot_rejected(self) -> None:
        with self.assertRaises(NotOddKnotError):
            signature_formula((2, 3, 5))

    def test_formula_matches_oracle_on_sample(self) -> None:
        for params in random_odd_tuples(60, seed=7):
            with self.subTest(params=params):
                self.assertEqual(signature_formula(params).sigma, signature_oracle(params))


# --------------------------------------------------------------------------- #
#  2. Determinant                                                             #
# --------------------------------------------------------------------------- #
class DeterminantTests(InvariantsBaseTest):
    def test_worked_values(self) -> None:
        self.assertDet((1, 1, 1), 3)
        self.assertDet((3, 5, 7), 71)
        self.assertDet((-3, -7, -19, 3, 47), 9801)
        self.assertDet((-3, -7, -19, 19, 55), 190969)
        self.assertDet((-3, -5, -7, 3, 5), 225)

    def test_single_strand(self) -> None:
        self.assertEqual(determinant((7,)), 1)

    def test_formula_matches_oracle_on_sample(self) -> None:
        for params in random_odd_tuples(60, seed=11):
            with self.subTest(params=params):
                self.assertEqual(determinant(params), determinant_oracle(params))


if __name__ == "__main__":
    unittest.main()
