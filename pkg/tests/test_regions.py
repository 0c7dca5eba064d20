#####################################################################
# test_regions.py
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
import knotspan.dealternator
import knotspan.diagram
import knotspan.regions
import knotspan.states

from knots import CURL, FIGURE_EIGHT, HOPF, SWITCHED_TREFOIL, TREFOIL, TWO_CURLS, diagram, pretzel


def decompose(d):
    info = knotspan.dealternator.dealternator_info(d)
    faces = knotspan.diagram.faces(d)
    coloring = knotspan.diagram.checkerboard(d, faces)

    return info, faces, coloring, knotspan.regions.region_decomposition(d, info, faces, coloring)


class TestRegionDecomposition(unittest.TestCase):
    def testTrefoil(self):
        _, _, _, rd = decompose(diagram(TREFOIL))

        self.assertEqual((rd.r, rd.s), (5, 0))
        self.assertTrue(all(not component.bridges for component in rd.components))
        self.assertTrue(knotspan.regions.is_dealternator_connected_via_regions(rd))

    def testAlternatingRegionsAreFaces(self):
        d = diagram(FIGURE_EIGHT)
        _, faces, _, rd = decompose(d)

        self.assertEqual(rd.r, len(faces))
        self.assertEqual(rd.white_boundary_total + rd.black_boundary_total, d.n + 2)

    def testSwitchedTrefoil(self):
        _, _, _, rd = decompose(diagram(SWITCHED_TREFOIL))

        self.assertEqual((rd.r, rd.s), (3, 0))
        self.assertEqual(sum(len(component.bridges) for component in rd.components), 2)

    def testPretzel(self):
        _, faces, _, rd = decompose(pretzel(4, -3, 3))

        self.assertEqual(len(faces), 12)
        self.assertEqual((rd.r, rd.s), (8, 2))
        self.assertEqual(sorted(component.s_i for component in rd.components), [0] * 7 + [2])
        self.assertFalse(knotspan.regions.is_dealternator_connected_via_regions(rd))

    def testBridgesJoinSameColor(self):
        d = pretzel(4, -3, 3)
        info, _, coloring, rd = decompose(d)

        bridges = [bridge for component in rd.components for bridge in component.bridges]
        self.assertEqual(len(bridges), 2 * info.k)
        for bridge in bridges:
            self.assertEqual(coloring.color(bridge.endpoints[0]), coloring.color(bridge.endpoints[1]))
            self.assertIs(bridge.color, coloring.color(bridge.endpoints[0]))

    def testHolesMatchClosingBridges(self):
        _, _, _, rd = decompose(pretzel(4, -3, 3))

        for component in rd.components:
            self.assertEqual(component.s_i, sum(bridge.closes_cycle for bridge in component.bridges))
            self.assertEqual(component.boundary_circles, component.s_i + 1)

    def testComponentsOf(self):
        _, _, _, rd = decompose(diagram(TREFOIL))

        white = rd.components_of(knotspan.diagram.Color.WHITE)
        black = rd.components_of(knotspan.diagram.Color.BLACK)

        self.assertEqual(len(white) + len(black), rd.r)
        self.assertTrue(all(component.color is knotspan.diagram.Color.WHITE for component in white))


class TestCircleNumberViaRegions(unittest.TestCase):
    def assertMatchesDirect(self, d):
        _, _, _, rd = decompose(d)
        s_a, s_b = knotspan.states.extreme_counts(d)

        self.assertEqual(knotspan.regions.circle_number_via_regions(rd), (s_a, s_b, s_a + s_b))

    def testTrefoil(self):
        self.assertMatchesDirect(diagram(TREFOIL))

    def testCurl(self):
        self.assertMatchesDirect(diagram(CURL))

    def testHopf(self):
        self.assertMatchesDirect(diagram(HOPF))

    def testSwitchedTrefoil(self):
        self.assertMatchesDirect(diagram(SWITCHED_TREFOIL))

    def testPretzel(self):
        self.assertMatchesDirect(pretzel(4, -3, 3))

    def testAlmostAlternatingPretzel(self):
        self.assertMatchesDirect(pretzel(-1, 2, 2))

    def testSACorner(self):
        d = diagram(CURL)
        info, faces, coloring, _ = decompose(d)

        self.assertIs(knotspan.regions.s_a_color(d, info, faces, coloring), coloring.color(faces.face(0, 1)))


class TestSurfaceData(unittest.TestCase):
    def testAlternating(self):
        surface = knotspan.regions.surface_data(3, 0)

        self.assertEqual((surface.gamma_vertices, surface.gamma_edges), (3, 6))
        self.assertEqual(surface.euler_characteristic, 2)
        self.assertEqual((surface.genus, surface.boundary_components), (0, 0))

    def testThreeDealternators(self):
        surface = knotspan.regions.surface_data(10, 3)

        self.assertEqual(surface.euler_characteristic, -7)
        self.assertEqual(surface.genus, 3)

    def testInvalid(self):
        with self.assertRaises(ValueError):
            knotspan.regions.surface_data(0, 0)

        with self.assertRaises(ValueError):
            knotspan.regions.surface_data(3, 4)


class TestTuraevGenus(unittest.TestCase):
    def testAlternating(self):
        self.assertEqual(knotspan.regions.turaev_genus(diagram(TREFOIL)), 0)
        self.assertEqual(knotspan.regions.turaev_genus(diagram(FIGURE_EIGHT)), 0)

    def testSwitchedTrefoil(self):
        self.assertEqual(knotspan.regions.turaev_genus(diagram(SWITCHED_TREFOIL)), 1)

    def testPretzel(self):
        self.assertEqual(knotspan.regions.turaev_genus(pretzel(4, -3, 3)), 1)

    def testGivenCounts(self):
        self.assertEqual(knotspan.regions.turaev_genus(diagram(TREFOIL), counts=(1, 2)), 1)

    def testDisconnected(self):
        with self.assertRaises(knotspan.common.DisconnectedDiagram):
            knotspan.regions.turaev_genus(diagram(TWO_CURLS))


class TestTheoremChecks(unittest.TestCase):
    def testRkPretzel(self):
        d = pretzel(4, -3, 3)
        info, _, _, rd = decompose(d)

        check = knotspan.regions.theorem_rk_check(d, info, rd)

        self.assertEqual(check.circle_number, 10)
        self.assertEqual(check.rk_value, 10)
        self.assertEqual((check.chi_lhs, check.chi_rhs), (-7, -7))
        self.assertTrue(check.holds)

    def testRkTrefoil(self):
        d = diagram(TREFOIL)
        info, _, _, rd = decompose(d)

        self.assertTrue(knotspan.regions.theorem_rk_check(d, info, rd).holds)

    def testRkReportsMismatch(self):
        d = diagram(TREFOIL)
        info, _, _, rd = decompose(d)

        check = knotspan.regions.theorem_rk_check(d, info, rd, counts=(3, 3))

        self.assertFalse(check.rs_holds)
        self.assertFalse(check.region_vs_direct)
        self.assertFalse(check.holds)

    def testAcSwitchedTrefoil(self):
        d = diagram(SWITCHED_TREFOIL)
        info, _, _, rd = decompose(d)

        check = knotspan.regions.theorem_ac_check(d, info, rd, span=8)

        self.assertTrue(check.applicable)
        self.assertEqual(check.expected_circle_number, 3)
        self.assertEqual(check.genus, 1)
        self.assertEqual(check.span_bound, 8)
        self.assertTrue(check.holds)

    def testAcSpanTooLarge(self):
        d = diagram(SWITCHED_TREFOIL)
        info, _, _, rd = decompose(d)

        self.assertFalse(knotspan.regions.theorem_ac_check(d, info, rd, span=12).holds)

    def testAcNotApplicable(self):
        d = pretzel(4, -3, 3)
        info, _, _, rd = decompose(d)

        check = knotspan.regions.theorem_ac_check(d, info, rd, span=28)

        self.assertFalse(check.applicable)
        self.assertTrue(check.holds)
