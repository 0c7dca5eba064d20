#####################################################################
# test_diagram_operations.py
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

import knotspan.diagram

from knots import CURL, HOPF, SWITCHED_TREFOIL, TREFOIL, diagram

A = knotspan.diagram.Smoothing.A
B = knotspan.diagram.Smoothing.B


class TestMirror(unittest.TestCase):
    def testTrefoil(self):
        mirrored = knotspan.diagram.mirror(diagram(TREFOIL))

        self.assertEqual(str(mirrored), "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]")

    def testFourTimesIsIdentity(self):
        d = diagram(TREFOIL)
        result = d
        for _ in range(4):
            result = knotspan.diagram.mirror(result)

        self.assertEqual(result, d)

    def testKeepsFreeLoops(self):
        self.assertEqual(knotspan.diagram.mirror(diagram("X[1,1,2,2] loops=2")).free_loops, 2)


class TestSwitchCrossings(unittest.TestCase):
    def testSingle(self):
        switched = knotspan.diagram.switch_crossings(diagram(TREFOIL), {0})

        self.assertEqual(switched, diagram(SWITCHED_TREFOIL))

    def testAllEqualsMirror(self):
        d = diagram(HOPF)

        self.assertEqual(knotspan.diagram.switch_crossings(d, range(d.n)), knotspan.diagram.mirror(d))

    def testEmptySelection(self):
        d = diagram(TREFOIL)

        self.assertEqual(knotspan.diagram.switch_crossings(d, []), d)

    def testInvalidIndex(self):
        with self.assertRaises(IndexError):
            knotspan.diagram.switch_crossings(diagram(TREFOIL), {3})

        with self.assertRaises(IndexError):
            knotspan.diagram.switch_crossings(diagram(TREFOIL), {-1})


class TestSmoothCrossing(unittest.TestCase):
    def testCurlA(self):
        smoothed = knotspan.diagram.smooth_crossing(diagram(CURL), 0, A)

        self.assertEqual(smoothed.n, 0)
        self.assertEqual(smoothed.free_loops, 2)

    def testCurlB(self):
        smoothed = knotspan.diagram.smooth_crossing(diagram(CURL), 0, B)

        self.assertEqual(smoothed.n, 0)
        self.assertEqual(smoothed.free_loops, 1)

    def testRelabelsToSmallest(self):
        smoothed = knotspan.diagram.smooth_crossing(diagram(TREFOIL), 0, A)

        self.assertEqual(str(smoothed), "X[3,6,1,1] X[2,2,6,3]")

    def testAcceptsValue(self):
        d = diagram(TREFOIL)

        self.assertEqual(knotspan.diagram.smooth_crossing(d, 1, "B"), knotspan.diagram.smooth_crossing(d, 1, B))

    def testInvalidIndex(self):
        with self.assertRaises(IndexError):
            knotspan.diagram.smooth_crossing(diagram(CURL), 1, A)

    def testInvalidKind(self):
        with self.assertRaises(ValueError):
            knotspan.diagram.smooth_crossing(diagram(CURL), 0, "C")


class TestSmoothCrossings(unittest.TestCase):
    def testTrefoilAllA(self):
        d = diagram(TREFOIL)
        smoothed = knotspan.diagram.smooth_crossings(d, {index: A for index in range(d.n)})

        self.assertEqual(smoothed, knotspan.diagram.Diagram((), 3))

    def testTrefoilAllB(self):
        d = diagram(TREFOIL)
        smoothed = knotspan.diagram.smooth_crossings(d, {index: B for index in range(d.n)})

        self.assertEqual(smoothed.free_loops, 2)

    def testKeepsOrder(self):
        d = diagram(TREFOIL)
        smoothed = knotspan.diagram.smooth_crossings(d, {1: A})

        self.assertEqual(smoothed.n, 2)
        self.assertEqual(smoothed.crossings[0][0], 1)

    def testEmpty(self):
        d = diagram(TREFOIL)

        self.assertEqual(knotspan.diagram.smooth_crossings(d, {}), d)
