#####################################################################
# test_pretzel.py
#
# (c) Copyright 2026, knotspan developers. All rights reserved.
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This software is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#####################################################################

import unittest

import knotspan.bracket
import knotspan.common
import knotspan.dealternator
import knotspan.diagram
import knotspan.pretzel
import knotspan.states

from knots import pretzel


class TestPretzelSpec(unittest.TestCase):
    def testValid(self):
        spec = knotspan.pretzel.PretzelSpec((4, -3, 3))

        self.assertEqual(spec.n, 10)
        self.assertEqual(str(spec), "P(4,-3,3)")
        self.assertEqual(spec.mirrored().twists, (-4, 3, -3))

    def testListAccepted(self):
        self.assertEqual(knotspan.pretzel.PretzelSpec([1, 2]).twists, (1, 2))

    def testTooFewBands(self):
        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.PretzelSpec((3,))

    def testZeroTwist(self):
        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.PretzelSpec((3, 0, 3))

    def testNonInteger(self):
        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.PretzelSpec((3, 1.5))

        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.PretzelSpec((3, True))


class TestParseTwists(unittest.TestCase):
    def testPlain(self):
        self.assertEqual(knotspan.pretzel.parse_twists("4,-3,3").twists, (4, -3, 3))

    def testWrapped(self):
        self.assertEqual(knotspan.pretzel.parse_twists("P(4, -3, 3)").twists, (4, -3, 3))

    def testInvalid(self):
        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.parse_twists("4,x")

        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.parse_twists("")

    def testSingleBand(self):
        with self.assertRaises(knotspan.common.SpecError):
            knotspan.pretzel.parse_twists("5")


class TestPretzel(unittest.TestCase):
    def testHopfLike(self):
        self.assertEqual(str(pretzel(1, 1)), "X[4,3,1,2] X[3,4,2,1]")

    def testSequenceAccepted(self):
        self.assertEqual(knotspan.pretzel.pretzel([1, 1]), pretzel(1, 1))

    def testCrossingCount(self):
        self.assertEqual(pretzel(4, -3, 3).n, 10)

    def testConnectedAndPlanar(self):
        for twists in [(1, 1), (2, -1, 2), (4, -3, 3), (3, 3, 3), (-2, -2, 1, 1)]:
            d = pretzel(*twists)

            self.assertTrue(knotspan.diagram.is_connected(d), twists)
            self.assertEqual(len(knotspan.diagram.faces(d)), d.n + 2, twists)

    def testSameSignIsAlternating(self):
        self.assertTrue(knotspan.dealternator.is_alternating(pretzel(3, 3, 3)))
        self.assertTrue(knotspan.dealternator.is_alternating(pretzel(-2, -1, -3)))

    def testMixedSignDealternators(self):
        info = knotspan.dealternator.dealternator_info(pretzel(4, -3, 3))

        self.assertEqual(sorted(info.dealternators), [4, 5, 6])

    def testAlmostAlternating(self):
        d = pretzel(-1, 2, 2)

        self.assertEqual(knotspan.dealternator.dealternator_info(d).dealternators, frozenset({0}))
        self.assertEqual(sum(knotspan.states.extreme_counts(d)), 5)

    def testMirroredSpec(self):
        spec = knotspan.pretzel.PretzelSpec((2, -1, 2))

        self.assertEqual(knotspan.bracket.kauffman_bracket(knotspan.pretzel.pretzel(spec.mirrored())),
                         knotspan.bracket.kauffman_bracket(knotspan.pretzel.pretzel(spec)).inverted())


class TestAlternatingPretzels(unittest.TestCase):
    def testUpToFour(self):
        specs = [spec.twists for spec in knotspan.pretzel.alternating_pretzels(4)]

        self.assertEqual(specs, [(1, 1), (2, 1), (1, 1, 1), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])

    def testMinBands(self):
        specs = [spec.twists for spec in knotspan.pretzel.alternating_pretzels(4, min_bands=3)]

        self.assertEqual(specs, [(1, 1, 1), (2, 1, 1), (1, 1, 1, 1)])
