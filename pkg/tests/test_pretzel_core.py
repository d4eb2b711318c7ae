#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for pretzel tuple combinatorics: classification, isotopy moves,
cancelling pairs, ribbon detection and tuple parsing.
"""
from __future__ import annotations

import os
import unittest
from itertools import permutations
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in os.sys.path:
    os.sys.path.insert(0, str(SRC))

from pretzelslice.core.errors import InvalidTupleError, NotAKnotError  # noqa: E402
from pretzelslice.core.models import KnotClass, PretzelTuple  # noqa: E402
from pretzelslice.knots.pretzel_core import (  # noqa: E402
    canonical_form,
    classify,
    is_simple_ribbon,
    isotopy_equivalent,
    isotopy_orbit,
    mirror,
    mutant_ribbon,
    mutant_ribbon_witness,
    mutation_key,
    pair_profile,
    simple_ribbon_reduction,
    unit_pair_reduced,
)
from pretzelslice.parsing.tuples import parse_tuple  # noqa: E402


# --------------------------------------------------------------------------- #
#  Base class                                                                 #
# --------------------------------------------------------------------------- #
class PretzelBaseTest(unittest.TestCase):
    """Utility mix-in providing common assertions."""

    def assertParams(self, pt, expected, *, msg: str | None = None) -> None:
        self.assertEqual(tuple(pt), tuple(expected), msg or f"{pt} != {expected}")

    def assertRibbonFinal(self, value, final) -> None:
        witness = simple_ribbon_reduction(value)
        self.assertIsNotNone(witness, f"{value} should be simple ribbon")
        self.assertEqual(witness.final, tuple(final))


# --------------------------------------------------------------------------- #
#  1. Tuples & classification                                                 #
# --------------------------------------------------------------------------- #
class ClassificationTests(PretzelBaseTest):
    def test_zero_parameter_rejected(self) -> None:
        with self.assertRaises(InvalidTupleError):
            PretzelTuple((3, 0, 5))

    def test_empty_tuple_rejected(self) -> None:
        with self.assertRaises(InvalidTupleError):
            PretzelTuple(())

    def test_classify(self) -> None:
        self.assertIs(classify((3, 5, 7)), KnotClass.ODD_KNOT)
        self.assertIs(classify((2, 3, 5)), KnotClass.EVEN_KNOT)
        self.assertIs(classify((2, 4, 6)), KnotClass.LINK)
        self.assertIs(classify((3, 5)), KnotClass.LINK)

    def test_mirror_and_mutation_key(self) -> None:
        self.assertParams(mirror((3, -5, 7)), (-3, 5, -7))
        self.assertEqual(mutation_key((7, -5, 3)), (-5, 3, 7))

    def test_str(self) -> None:
        self.assertEqual(str(PretzelTuple.of(3, -5, 7)), "P(3, -5, 7)")

    def test_mirror_preserves_class_and_pairs(self) -> None:
        for params in ((3, 5, 7), (2, 3, 5), (2, 4, 6), (-3, -7, -19, 3, 47), (1, -1, 3, -3, 5), (-1, -1, -3, 1, 5)):
            with self.subTest(params=params):
                self.assertIs(classify(mirror(params)), classify(params))
                self.assertEqual(pair_profile(mirror(params)).t, pair_profile(params).t)
                self.assertParams(mirror(mirror(params)), params)

    def test_mutation_key_ignores_order(self) -> None:
        keys = {mutation_key(p) for p in permutations((-3, -7, -19, 3, 47))}
        self.assertEqual(keys, {(-19, -7, -3, 3, 47)})


# --------------------------------------------------------------------------- #
#  2. Isotopy moves                                                           #
# --------------------------------------------------------------------------- #
class IsotopyTests(PretzelBaseTest):
    def test_canonical_form_is_least_dihedral_image(self) -> None:
        self.assertEqual(canonical_form((5, 3, 7)), (3, 5, 7))

    def test_rotation_and_reflection(self) -> None:
        self.assertTrue(isotopy_equivalent((3, 5, 7), (5, 7, 3)))
        self.assertTrue(isotopy_equivalent((3, 5, 7), (7, 5, 3)))

    def test_no_flypes_without_single_twists(self) -> None:
        self.assertFalse(isotopy_equivalent((3, 5, 7, 9, 11), (3, 7, 5, 9, 11)))
        self.assertEqual(len(isotopy_orbit((3, 5, 7, 9, 11))), 10)

    def test_flype_moves_single_twist(self) -> None:
        self.assertTrue(isotopy_equivalent((1, 3, 5), (3, 1, 5)))

    def test_flypes_gather_single_twists(self) -> None:
        self.assertTrue(isotopy_equivalent((1, 3, -5, 1, -7), (1, 1, 3, -5, -7)))

    def test_equivalence_relation(self) -> None:
        chain = ((1, 3, -5, 1, -7), (1, 1, 3, -5, -7), (-7, -5, 3, 1, 1))
        others = ((3, -5, 1, -7, 1), (1, 3, 1, -5, -7))
        for t1 in chain + others:
            with self.subTest(t1=t1):
                self.assertTrue(isotopy_equivalent(t1, t1))
                for t2 in chain + others:
                    self.assertEqual(isotopy_equivalent(t1, t2), isotopy_equivalent(t2, t1))
        # Transitivity: every member of an orbit has the same orbit.
        self.assertTrue(isotopy_equivalent(chain[0], chain[2]))
        self.assertFalse(isotopy_equivalent((3, 5, 7, 9, 11), (3, 7, 5, 9, 11)))
        self.assertFalse(isotopy_equivalent((3, 7, 5, 9, 11), (3, 5, 7, 9, 11)))
        for t in isotopy_orbit((1, 3, -5, 1, -7)):
            self.assertEqual(isotopy_orbit(t), isotopy_orbit((1, 3, -5, 1, -7)))

    def test_different_multisets_never_equivalent(self) -> None:
        self.assertFalse(isotopy_equivalent((3, 5, 7), (3, 5, 9)))

    def test_links_rejected(self) -> None:
        with self.assertRaises(NotAKnotError):
            isotopy_equivalent((2, 4, 6), (2, 4, 6))


# --------------------------------------------------------------------------- #
#  3. Cancelling pairs                                                        #
# --------------------------------------------------------------------------- #
class PairProfileTests(PretzelBaseTest):
    def test_two_pairs(self) -> None:
        prof = pair_profile((3, 5, 7, -3, -5))
        self.assertEqual(prof.t, 2)
        self.assertEqual(prof.removable_pairs, ((-3, 3), (-5, 5)))
        self.assertFalse(prof.has_single_twists)

    def test_zero_and_one_pair(self) -> None:
        self.assertEqual(pair_profile((-3, -5, -7, 9, 27)).t, 0)
        self.assertEqual(pair_profile((-3, -7, -19, 3, 47)).t, 1)

    def test_unit_pair(self) -> None:
        prof = pair_profile((1, -1, 3, 5, 7))
        self.assertEqual(prof.t, 1)
        self.assertTrue(prof.has_single_twists)
        self.assertTrue(prof.contains_unit_pair)
        self.assertEqual(unit_pair_reduced((1, 3, -1, 5, 7)), (3, 5, 7))
        self.assertIsNone(unit_pair_reduced((1, 3, 5)))


# --------------------------------------------------------------------------- #
#  4. Ribbon detection                                                        #
# --------------------------------------------------------------------------- #
class RibbonTests(PretzelBaseTest):
    def test_simple_ribbon_odd(self) -> None:
        self.assertRibbonFinal((3, -3, 5, -5, 7), (7,))
        witness = simple_ribbon_reduction((3, -3, 5, -5, 7))
        self.assertEqual(len(witness.moves), 2)
        self.assertEqual(witness.moves[0].removed, (3, -3))

    def test_cyclic_adjacency(self) -> None:
        self.assertTrue(is_simple_ribbon((-3, 5, -5, 7, 3)))

    def test_not_adjacent_is_not_simple_but_mutant(self) -> None:
        self.assertFalse(is_simple_ribbon((3, 5, -3, -5, 7)))
        self.assertTrue(mutant_ribbon((3, 5, -3, -5, 7)))
        witness = mutant_ribbon_witness((3, 5, -3, -5, 7))
        self.assertTrue(is_simple_ribbon(witness.start))
        self.assertEqual(sorted(witness.start), [-5, -3, 3, 5, 7])

    def test_too_few_pairs(self) -> None:
        self.assertFalse(is_simple_ribbon((3, 5, 7)))
        self.assertFalse(mutant_ribbon((-3, -5, -7, 9, 27)))

    def test_two_pairs_with_unit_pair_are_ribbon(self) -> None:
        for multiset in ((1, -1, 3, -3, 5), (1, -1, 5, -5, -7), (1, -1, 1, -1, 3)):
            for perm in set(permutations(multiset)):
                with self.subTest(perm=perm):
                    self.assertTrue(is_simple_ribbon(perm))
                    self.assertTrue(mutant_ribbon(perm))

    def test_flype_exposes_pair(self) -> None:
        # No pair is adjacent until 1 flypes past 3.
        self.assertTrue(is_simple_ribbon((1, 3, 5, -1, -3)))

    def test_even_targets(self) -> None:
        self.assertRibbonFinal((2, -3), (2, -3))
        self.assertRibbonFinal((4, -5, 3, -3), (4, -5))
        self.assertFalse(is_simple_ribbon((2, 3, 5)))


# --------------------------------------------------------------------------- #
#  5. Tuple literals                                                          #
# --------------------------------------------------------------------------- #
class ParseTupleTests(PretzelBaseTest):
    def test_accepted_spellings(self) -> None:
        for literal in ("3,-5,7", "P(3, -5, 7)", "(3,-5,7)", "[3, -5, 7]", "3 -5 7"):
            with self.subTest(literal=literal):
                self.assertParams(parse_tuple(literal), (3, -5, 7))
        self.assertParams(parse_tuple(["3,", "-5,", "7"]), (3, -5, 7))

    def test_rejected(self) -> None:
        for literal in ("", "3,x,5", "3,0,5", "P()"):
            with self.subTest(literal=literal):
                with self.assertRaises(InvalidTupleError):
                    parse_tuple(literal)


if __name__ == "__main__":
    unittest.main()
