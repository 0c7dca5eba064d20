#####################################################################
# test_diagram_faces.py
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

import knotspan.common
import knotspan.diagram

from knots import CURL, FIGURE_EIGHT, HOPF, TREFOIL, TWO_CURLS, UNKNOT_LOOP, diagram, pretzel


class TestIsConnected(unittest.TestCase):
    def testTrefoil(self):
        self.assertTrue(knotspan.diagram.is_connected(diagram(TREFOIL)))

    def testTwoCurls(self):
        self.assertFalse(knotspan.diagram.is_connected(diagram(TWO_CURLS)))

    def testLoops(self):
        self.assertTrue(knotspan.diagram.is_connected(diagram(UNKNOT_LOOP)))
        self.assertFalse(knotspan.diagram.is_connected(diagram("loops=2")))

    def testCrossingsWithLoop(self):
        self.assertFalse(knotspan.diagram.is_connected(diagram("X[1,1,2,2] loops=1")))


class TestFaces(unittest.TestCase):
    def testTrefoil(self):
        self.assertEqual(len(knotspan.diagram.faces(diagram(TREFOIL))), 5)

    def testCurl(self):
        faces = knotspan.diagram.faces(diagram(CURL))

        self.assertEqual(len(faces), 3)
        self.assertEqual(faces.face(0, 2), faces.face(0, 4))
        self.assertNotEqual(faces.face(0, 1), faces.face(0, 3))

    def testHopf(self):
        self.assertEqual(len(knotspan.diagram.faces(diagram(HOPF))), 4)

    def testFigureEight(self):
        self.assertEqual(len(knotspan.diagram.faces(diagram(FIGURE_EIGHT))), 6)

    def testPretzel(self):
        self.assertEqual(len(knotspan.diagram.faces(pretzel(4, -3, 3))), 12)

    def testEveryCornerOnce(self):
        d = diagram(FIGURE_EIGHT)
        faces = knotspan.diagram.faces(d)

        corners = [corner for face in faces.faces for corner in face]

        self.assertEqual(len(corners), 4 * d.n)
        self.assertEqual(set(corners), {(crossing, corner) for crossing in range(d.n) for corner in range(1, 5)})
        for index, face in enumerate(faces.faces):
            for corner in face:
                self.assertEqual(faces.face_of_corner[corner], index)

    def testDisconnected(self):
        with self.assertRaises(knotspan.common.DisconnectedDiagram):
            knotspan.diagram.faces(diagram(TWO_CURLS))

    def testNoCrossings(self):
        with self.assertRaises(knotspan.common.DisconnectedDiagram):
            knotspan.diagram.faces(diagram(UNKNOT_LOOP))

    def testNonPlanar(self):
        # a single crossing with its opposite ends joined has no planar embedding
        with self.assertRaises(knotspan.common.PlanarityError):
            knotspan.diagram.faces(diagram("X[1,2,1,2]"))


class TestCheckerboard(unittest.TestCase):
    def assertProperColoring(self, d):
        faces = knotspan.diagram.faces(d)
        coloring = knotspan.diagram.checkerboard(d, faces)

        for crossing in range(d.n):
            colors = [coloring.color(faces.face(crossing, corner)) for corner in range(1, 5)]
            self.assertEqual(colors[0], colors[2])
            self.assertEqual(colors[1], colors[3])
            self.assertNotEqual(colors[0], colors[1])

        self.assertEqual(coloring.color(faces.face(0, 1)), knotspan.diagram.Color.WHITE)

    def testTrefoil(self):
        self.assertProperColoring(diagram(TREFOIL))

    def testCurl(self):
        self.assertProperColoring(diagram(CURL))

    def testPretzel(self):
        self.assertProperColoring(pretzel(4, -3, 3))

    def testTracesFacesWhenOmitted(self):
        d = diagram(TREFOIL)

        self.assertEqual(knotspan.diagram.checkerboard(d),
                         knotspan.diagram.checkerboard(d, knotspan.diagram.faces(d)))

    def testSwapped(self):
        coloring = knotspan.diagram.checkerboard(diagram(HOPF))
        swapped = coloring.swapped()

        self.assertEqual(len(swapped.color_of_face), len(coloring.color_of_face))
        for original, other in zip(coloring.color_of_face, swapped.color_of_face):
            self.assertEqual(original.other, other)

    def testTrefoilColorCounts(self):
        coloring = knotspan.diagram.checkerboard(diagram(TREFOIL))

        self.assertEqual(sorted(coloring.color_of_face.count(color) for color in knotspan.diagram.Color), [2, 3])

    def testDisconnected(self):
        with self.assertRaises(knotspan.common.DisconnectedDiagram):
            knotspan.diagram.checkerboard(diagram(TWO_CURLS))


class TestIsReduced(unittest.TestCase):
    def testTrefoil(self):
        self.assertTrue(knotspan.diagram.is_reduced(diagram(TREFOIL)))

    def testCurl(self):
        self.assertFalse(knotspan.diagram.is_reduced(diagram(CURL)))
        self.assertEqual(knotspan.diagram.nugatory_crossings(diagram(CURL)), [0])

    def testPretzel(self):
        self.assertTrue(knotspan.diagram.is_reduced(pretzel(4, -3, 3)))

    def testTrefoilWithCurl(self):
        # trefoil arc 1 replaced by a curl on arcs 1, 7 and 8
        d = diagram("X[7,4,2,5] X[3,6,4,1] X[5,2,6,3] X[1,8,8,7]")

        self.assertEqual(knotspan.diagram.nugatory_crossings(d), [3])

    def testDisconnected(self):
        with self.assertRaises(knotspan.common.DisconnectedDiagram):
            knotspan.diagram.is_reduced(diagram(TWO_CURLS))
