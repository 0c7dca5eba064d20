#####################################################################
# properties.py
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
"""Properties checked by the verification suite."""

import typing

from dataclasses import dataclass

from ..analysis.report import CHECK_FAIL, CHECK_PASS, AnalysisReport
from ..bracket.laurent import LaurentPolynomial
from ..bracket.report import lemma_recursion_check
from ..bracket.statesum import kauffman_bracket
from ..common.config import EXHAUSTIVE_STATE_MAX_CROSSINGS
from ..common.exceptions import DisconnectedDiagram
from ..dealternator.info import dealternator_info
from ..diagram.diagram import Diagram, Smoothing
from ..diagram.faces import faces
from ..diagram.operations import mirror, smooth_crossing, switch_crossings
from ..states.circles import circle_count, extreme_counts, trace_circles
from ..states.state import state_iterator


@dataclass(frozen=True)
class Subject:
    """A diagram under verification together with its analysis."""

    name: str
    diagram: Diagram
    report: AnalysisReport
    state_cap: int

    @property
    def topology(self):
        """True when the topology fields of the report are available."""
        return self.report.k is not None

    def __str__(self):
        """Get name and PD text."""
        return f"{self.name}: {self.report.pd}"


@dataclass(frozen=True)
class Property:
    """
    A named property evaluated per subject.

    ``check`` returns True or False, or None when the property does not apply.
    """

    name: str
    description: str
    check: typing.Callable[[Subject], typing.Optional[bool]]
    requires_instance: bool = False


def _report_check(name):
    def check(subject):
        verdict = subject.report.checks.get(name)
        if verdict == CHECK_PASS:
            return True

        if verdict == CHECK_FAIL:
            return False

        return None

    return check


def _alternating_identity(subject):
    report = subject.report
    if not subject.topology or not report.is_alternating:
        return None

    return report.circle_number == report.n + 2


def _reduced_alternating_span(subject):
    report = subject.report
    if not subject.topology or not report.is_alternating or not report.is_reduced or report.bracket is None:
        return None

    return report.bracket["span"] == 4 * report.n


def _face_count(subject):
    if not subject.topology:
        return None

    decomposition = faces(subject.diagram)
    corners = sum(len(face) for face in decomposition.faces)

    return len(decomposition) == subject.diagram.n + 2 and corners == 4 * subject.diagram.n


def _dealternator_switch(subject):
    if not subject.topology:
        return None

    switched = switch_crossings(subject.diagram, subject.report.dealternators)
    info = dealternator_info(switched)

    return info.k == 0 and dealternator_info(info.alternating_diagram).k == 0


def _oracle_equivalence(subject):
    diagram = subject.diagram
    if diagram.n > EXHAUSTIVE_STATE_MAX_CROSSINGS:
        return None

    for state in state_iterator(diagram.n, subject.state_cap):
        count = circle_count(diagram, state)
        if count != trace_circles(diagram, state):
            return False

        for crossing in range(diagram.n):
            if abs(circle_count(diagram, state.flipped(crossing)) - count) != 1:
                return False

    return True


def _mirror_symmetry(subject):
    mirrored = mirror(subject.diagram)
    s_a, s_b = extreme_counts(mirrored)
    if (s_a, s_b) != (subject.report.sB, subject.report.sA):
        return False

    if subject.report.bracket is None:
        return True

    bracket = LaurentPolynomial.from_json(subject.report.bracket)
    return kauffman_bracket(mirrored, subject.state_cap) == bracket.inverted()


def _adequate_coefficients(subject):
    report = subject.report
    if report.bracket is None or report.n == 0:
        return None

    bracket = report.bracket
    if not bracket["A_adequate"] and not bracket["B_adequate"]:
        return None

    if bracket["A_adequate"] and bracket["a_M"] != (-1) ** (report.sA - 1):
        return False

    return not bracket["B_adequate"] or bracket["a_m"] == (-1) ** (report.sB - 1)


def _almost_alternating_case(subject):
    report = subject.report
    if not subject.topology or not report.is_dealternator_connected or report.k < 1:
        return None

    return report.circle_number == report.n + 2 - 2 * report.k and report.turaev_genus == report.k and \
        (report.bracket is None or report.bracket["span"] <= 4 * (report.n - report.k))


def _adams_bound(subject):
    report = subject.report
    if not subject.topology or report.bracket is None or not report.is_dealternator_connected or \
            not report.is_dealternator_reduced or report.k < 1:
        return None

    bracket = report.bracket
    return bracket["a_M"] == 0 and bracket["a_m"] == 0 and bracket["span"] <= 4 * (report.n - report.k - 2)


def _dealternator_b_smoothing(subject):
    report = subject.report
    if not subject.topology or not report.is_dealternator_connected or report.k < 1:
        return None

    for crossing in report.dealternators:
        smoothed = smooth_crossing(subject.diagram, crossing, Smoothing.B)
        if smoothed.n != report.n - 1:
            return False

        if smoothed.n == 0:
            if report.k != 1:
                return False
            continue

        try:
            if dealternator_info(smoothed).k != report.k - 1:
                return False
        except DisconnectedDiagram:
            return False

    return True


def _lemma_recursion(subject):
    report = subject.report
    if not subject.topology or report.bracket is None or not report.is_dealternator_connected or report.k < 1:
        return None

    return all(lemma_recursion_check(subject.diagram, crossing, subject.state_cap).holds
               for crossing in report.dealternators)


PROPERTIES = (
    Property("alternating_identity", "circle number n + 2 for connected alternating diagrams",
             _alternating_identity),
    Property("reduced_alternating_span", "span 4n for reduced connected alternating diagrams",
             _reduced_alternating_span),
    Property("face_count", "n + 2 faces covering 4n corners", _face_count),
    Property("dealternator_switch", "switching the dealternators leaves no dealternator", _dealternator_switch),
    Property("theorem_rs", "circle number r + s", _report_check("theorem_rs")),
    Property("theorem_rk", "circle number 2k + 2r - n - 2", _report_check("theorem_rk")),
    Property("chi_identity", "surface Euler characteristic 2 - 3k", _report_check("chi_identity")),
    Property("region_vs_direct", "region boundaries are the extreme state circles",
             _report_check("region_vs_direct")),
    Property("dc_methods_agree", "smoothing and region tests of dealternator connectivity agree",
             _report_check("dc_methods_agree")),
    Property("oracle_equivalence", "union-find and curve walk circle counts agree on all states",
             _oracle_equivalence),
    Property("skein", "bracket skein relation at every crossing", _report_check("skein_all")),
    Property("bracket_support", "bracket exponents within [m, M] and congruent to M mod 4",
             _report_check("bracket_support")),
    Property("mirror_symmetry", "mirror swaps extreme counts and inverts the bracket", _mirror_symmetry),
    Property("adequate_coefficients", "adequate extreme coefficients are signed units", _adequate_coefficients),
    Property("span_bounds", "no applicable span bound is violated", _report_check("bounds")),
    Property("almost_alternating_case", "dealternator connected: circle number n + 2 - 2k, genus k, span 4(n - k)",
             _almost_alternating_case, requires_instance=True),
    Property("adams_bound", "dealternator connected and reduced: a_M = a_m = 0, span 4(n - k - 2)",
             _adams_bound, requires_instance=True),
    Property("dealternator_b_smoothing", "B smoothing a dealternator of a dealternator connected diagram leaves "
             "n - 1 crossings and k - 1 dealternators", _dealternator_b_smoothing),
    Property("lemma_recursion", "extreme coefficients split over both smoothings of a dealternator",
             _lemma_recursion, requires_instance=True),
)
