#####################################################################
# analyzer.py
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
"""Full analysis of a diagram."""

import dataclasses
import logging

from ..bracket.report import bounds_report, bracket_report
from ..bracket.statesum import kauffman_bracket, skein_check
from ..common.config import DEFAULT_SKEIN_MAX_CROSSINGS, DEFAULT_SMOOTHING_CAP, DEFAULT_STATE_CAP, DEFAULT_WORKERS
from ..dealternator.info import dealternator_info
from ..dealternator.smoothings import is_dealternator_connected, is_dealternator_reduced
from ..diagram.faces import checkerboard, faces, is_connected, is_reduced
from ..diagram.pd import to_pd
from ..regions.decomposition import is_dealternator_connected_via_regions, region_decomposition
from ..regions.theorems import surface_data, theorem_ac_check, theorem_rk_check, turaev_genus
from ..states.circles import extreme_counts
from .report import CHECK_FAIL, CHECK_NOT_APPLICABLE, CHECK_PASS, AnalysisReport


def _verdict(value):
    if value is None:
        return CHECK_NOT_APPLICABLE

    return CHECK_PASS if value else CHECK_FAIL


class DiagramAnalyzer:
    """
    Computes every invariant of a diagram and checks the identities between them.

    **Example**::

        >>> import knotspan.analysis, knotspan.diagram
        >>> analyzer = knotspan.analysis.DiagramAnalyzer()
        >>> report = analyzer.analyze(knotspan.diagram.parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"))
        >>> report.circle_number, report.bracket["span"], report.ok
        (5, 12, True)

    :param state_cap: maximum number of crossings for state sums
    :type state_cap: integer
    :param smoothing_cap: maximum number of dealternators for smoothing enumeration
    :type smoothing_cap: integer
    :param workers: number of worker processes for the state sum
    :type workers: integer
    :param compute_bracket: evaluate the Kauffman bracket
    :type compute_bracket: boolean
    :param skein_max_crossings: largest diagram checked for the skein relation at every crossing
    :type skein_max_crossings: integer
    """

    def __init__(self, state_cap=DEFAULT_STATE_CAP, smoothing_cap=DEFAULT_SMOOTHING_CAP, workers=DEFAULT_WORKERS,
                 compute_bracket=True, skein_max_crossings=DEFAULT_SKEIN_MAX_CROSSINGS):
        """Initialize the analyzer with its limits."""
        self.logger = logging.getLogger(self.__module__ + "." + self.__class__.__name__)

        self.state_cap = state_cap
        self.smoothing_cap = smoothing_cap
        self.workers = workers
        self.compute_bracket = compute_bracket
        self.skein_max_crossings = skein_max_crossings

    def _bracket_sections(self, diagram, counts):
        bracket = kauffman_bracket(diagram, self.state_cap, self.workers)
        report = bracket_report(diagram, bracket, counts=counts)

        section = report.to_json()
        section["text"] = str(bracket)

        return bracket, report, section

    def _skein_all(self, diagram, bracket):
        if bracket is None or diagram.n == 0:
            return None

        if diagram.n > self.skein_max_crossings:
            self.logger.warning("skipping skein check of %d crossings, limit is %d", diagram.n,
                                self.skein_max_crossings)
            return None

        return all(skein_check(diagram, crossing, self.state_cap, bracket) for crossing in range(diagram.n))

    def analyze(self, diagram):
        """
        Analyze a diagram.

        Crossingless and disconnected diagrams get circle counts and the
        bracket only.

        :param diagram: diagram
        :type diagram: :class:`knotspan.diagram.Diagram`
        :returns: report
        :rtype: :class:`knotspan.analysis.AnalysisReport`
        """
        counts = extreme_counts(diagram)
        connected = is_connected(diagram)
        self.logger.debug("analyzing %d crossings, connected %s, extreme counts %s", diagram.n, connected, counts)

        bracket = degree_data = bracket_section = None
        if self.compute_bracket:
            bracket, degree_data, bracket_section = self._bracket_sections(diagram, counts)

        base = AnalysisReport(pd=to_pd(diagram), n=diagram.n, free_loops=diagram.free_loops, is_connected=connected,
                              sA=counts[0], sB=counts[1], circle_number=sum(counts), bracket=bracket_section)

        skein_all = self._skein_all(diagram, bracket)

        if diagram.n == 0 or not connected:
            checks = {name: CHECK_NOT_APPLICABLE for name in ("theorem_rs", "theorem_rk", "chi_identity",
                                                              "region_vs_direct", "dc_methods_agree", "theorem_ac",
                                                              "bounds", "bracket_support")}
            checks["skein_all"] = _verdict(skein_all)
            if degree_data is not None and diagram.n > 0:
                checks["bracket_support"] = _verdict(degree_data.support_ok)

            return dataclasses.replace(base, checks=checks)

        face_decomposition = faces(diagram)
        coloring = checkerboard(diagram, face_decomposition)
        info = dealternator_info(diagram)
        decomposition = region_decomposition(diagram, info, face_decomposition, coloring)

        dealternator_connected = is_dealternator_connected(diagram, info, self.smoothing_cap)
        dealternator_reduced = is_dealternator_reduced(diagram, info, self.smoothing_cap)

        region_check = theorem_rk_check(diagram, info, decomposition, counts)
        ac_check = theorem_ac_check(diagram, info, decomposition,
                                    bracket.span if bracket is not None else None, counts)

        bounds = None
        if degree_data is not None:
            bounds = bounds_report(diagram, info, decomposition, degree_data, dealternator_connected,
                                   dealternator_reduced, counts)

        checks = {
            "theorem_rs": _verdict(region_check.rs_holds),
            "theorem_rk": _verdict(region_check.rk_holds),
            "chi_identity": _verdict(region_check.chi_holds),
            "region_vs_direct": _verdict(region_check.region_vs_direct),
            "dc_methods_agree": _verdict(dealternator_connected == is_dealternator_connected_via_regions(
                decomposition)),
            "theorem_ac": _verdict(ac_check.holds if ac_check.applicable else None),
            "skein_all": _verdict(skein_all),
            "bounds": _verdict(bounds.holds if bounds is not None else None),
            "bracket_support": _verdict(degree_data.support_ok if degree_data is not None else None),
        }

        per_region = [{"color": component.color.value, "faces": len(component.faces),
                       "bridges": len(component.bridges), "s_i": component.s_i}
                      for component in decomposition.components]

        report = dataclasses.replace(
            base, k=info.k, dealternators=sorted(info.dealternators), tie=info.tie,
            is_reduced=is_reduced(diagram, face_decomposition), is_alternating=info.k == 0,
            is_dealternator_connected=dealternator_connected, is_dealternator_reduced=dealternator_reduced,
            r=decomposition.r, s=decomposition.s, per_region=per_region,
            turaev_genus=turaev_genus(diagram, counts),
            surface=dataclasses.asdict(surface_data(diagram.n, info.k)),
            bounds=bounds.to_json() if bounds is not None else None, checks=checks)

        if not report.ok:
            self.logger.warning("checks %s failed for %s", report.failed_checks, report.pd)

        return report
