#####################################################################
# report.py
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
"""Degree bounds, extreme coefficients and span bounds of the Kauffman bracket."""

import typing

from dataclasses import dataclass

from ..common.config import DEFAULT_STATE_CAP, DEFAULT_WORKERS
from ..diagram.diagram import Smoothing
from ..diagram.operations import smooth_crossing
from ..states.circles import extreme_counts, state_partition
from ..states.state import State
from .laurent import LaurentPolynomial
from .statesum import kauffman_bracket


def degree_bounds(n, s_a, s_b):
    """
    Get the highest and lowest possible bracket degree.

    :param n: number of crossings
    :type n: integer
    :param s_a: circles of the all-A state
    :type s_a: integer
    :param s_b: circles of the all-B state
    :type s_b: integer
    :returns: (M, m) with ``M = n + 2 s_a - 2`` and ``m = -n - 2 s_b + 2``
    :rtype: tuple of integers
    """
    return n + 2 * s_a - 2, -n - 2 * s_b + 2


def adequacy(diagram):
    """
    Check A- and B-adequacy.

    A diagram is A-adequate when no circle of the all-A state passes both
    smoothing arcs of the same crossing, dually for B.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: (A adequate, B adequate)
    :rtype: tuple of booleans
    """
    all_a = state_partition(diagram, State.all_a(diagram.n))
    all_b = state_partition(diagram, State.all_b(diagram.n))

    a_adequate = all(all_a[ends[0]] != all_a[ends[2]] for ends in diagram.crossings)
    b_adequate = all(all_b[ends[0]] != all_b[ends[1]] for ends in diagram.crossings)

    return a_adequate, b_adequate


@dataclass(frozen=True)
class BracketReport:
    """Bracket of a diagram and its degree data."""

    bracket: LaurentPolynomial
    M: int  # noqa: N815
    m: int
    a_M: int  # noqa: N815
    a_m: int
    A_adequate: bool  # noqa: N815
    B_adequate: bool  # noqa: N815

    @property
    def span(self):
        """Span of the bracket."""
        return self.bracket.span

    @property
    def jones_span(self):
        """Span of the Jones polynomial, a quarter of the bracket span."""
        return self.span // 4

    @property
    def support_ok(self):
        """Every exponent lies in ``[m, M]`` and is congruent to ``M`` mod 4."""
        return all(self.m <= exponent <= self.M and (exponent - self.M) % 4 == 0
                   for exponent, _ in self.bracket.terms)

    def to_json(self):
        """Get the report as JSON compatible dictionary."""
        return {"terms": self.bracket.to_json()["terms"], "span": self.span, "jones_span": self.jones_span,
                "M": self.M, "m": self.m, "a_M": self.a_M, "a_m": self.a_m,
                "A_adequate": self.A_adequate, "B_adequate": self.B_adequate}


def bracket_report(diagram, bracket=None, cap=DEFAULT_STATE_CAP, workers=DEFAULT_WORKERS, counts=None):
    """
    Evaluate the bracket and read its extreme coefficients.

    **Example**::

        >>> import knotspan.diagram, knotspan.bracket
        >>> report = knotspan.bracket.bracket_report(knotspan.diagram.parse_pd("X[1,1,2,2]"))
        >>> report.bracket.terms, report.A_adequate, report.B_adequate
        ([(3, -1)], True, False)

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param bracket: precomputed bracket
    :type bracket: :class:`knotspan.bracket.LaurentPolynomial`
    :param cap: maximum number of crossings
    :type cap: integer
    :param workers: number of worker processes
    :type workers: integer
    :param counts: extreme circle counts, computed when omitted
    :type counts: tuple of integers
    :returns: bracket data
    :rtype: :class:`knotspan.bracket.BracketReport`
    """
    if bracket is None:
        bracket = kauffman_bracket(diagram, cap, workers)

    s_a, s_b = counts if counts is not None else extreme_counts(diagram)
    upper, lower = degree_bounds(diagram.n, s_a, s_b)
    a_adequate, b_adequate = adequacy(diagram)

    return BracketReport(bracket=bracket, M=upper, m=lower, a_M=bracket.coefficient(upper),
                         a_m=bracket.coefficient(lower), A_adequate=a_adequate, B_adequate=b_adequate)


@dataclass(frozen=True)
class LemmaCheck:
    """Bracket degree data of a diagram and both smoothings at one crossing."""

    crossing: int
    counts: typing.Tuple[int, int]
    counts_a: typing.Tuple[int, int]
    counts_b: typing.Tuple[int, int]
    report: BracketReport
    report_a: BracketReport
    report_b: BracketReport

    @property
    def counts_shift_ok(self):
        """``|s_A D_1| = |s_A D|``, ``|s_A D_2| = |s_A D| + 1``, ``|s_B D_1| = |s_B D| + 1``, ``|s_B D_2| = |s_B D|``."""
        (s_a, s_b), (s_a1, s_b1), (s_a2, s_b2) = self.counts, self.counts_a, self.counts_b
        return s_a1 == s_a and s_a2 == s_a + 1 and s_b1 == s_b + 1 and s_b2 == s_b

    @property
    def degrees_shift_ok(self):
        """``M_1 = M - 1``, ``M_2 = M + 1``, ``m_1 = m - 1``, ``m_2 = m + 1``."""
        return self.report_a.M == self.report.M - 1 and self.report_b.M == self.report.M + 1 and \
            self.report_a.m == self.report.m - 1 and self.report_b.m == self.report.m + 1

    @property
    def coefficients_ok(self):
        """``a_M = a_M1 + a_M2`` and ``a_m = a_m1 + a_m2``."""
        return self.report.a_M == self.report_a.a_M + self.report_b.a_M and \
            self.report.a_m == self.report_a.a_m + self.report_b.a_m

    @property
    def holds(self):
        """All relations hold."""
        return self.counts_shift_ok and self.degrees_shift_ok and self.coefficients_ok


def lemma_recursion_check(diagram, crossing, cap=DEFAULT_STATE_CAP):
    """
    Compare the extreme coefficients of a diagram with those of its two smoothings at a crossing.

    Intended for a dealternator of a dealternator connected diagram, where
    ``D_1`` (A smoothing) and ``D_2`` (B smoothing) shift the degree bounds by
    one in opposite directions.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param crossing: crossing index
    :type crossing: integer
    :param cap: maximum number of crossings
    :type cap: integer
    :returns: all compared quantities
    :rtype: :class:`knotspan.bracket.LemmaCheck`
    """
    smoothed_a = smooth_crossing(diagram, crossing, Smoothing.A)
    smoothed_b = smooth_crossing(diagram, crossing, Smoothing.B)

    counts, counts_a, counts_b = extreme_counts(diagram), extreme_counts(smoothed_a), extreme_counts(smoothed_b)

    return LemmaCheck(crossing=crossing, counts=counts, counts_a=counts_a, counts_b=counts_b,
                      report=bracket_report(diagram, cap=cap, counts=counts),
                      report_a=bracket_report(smoothed_a, cap=cap, counts=counts_a),
                      report_b=bracket_report(smoothed_b, cap=cap, counts=counts_b))


@dataclass(frozen=True)
class Bound:
    """An upper bound for the bracket span."""

    name: str
    value: int
    applicable: bool
    satisfied: typing.Optional[bool]

    def to_json(self):
        """Get the bound as JSON compatible dictionary."""
        return {"value": self.value, "applicable": self.applicable, "satisfied": self.satisfied}


@dataclass(frozen=True)
class BoundsReport:
    """Span bounds evaluated against the actual span."""

    span: int
    generic: Bound
    zhu: Bound
    adams: Bound
    region_estimate: int

    @property
    def region_estimate_exceeded(self):
        """True when the span is larger than ``2n + 2r - 4``."""
        return self.span > self.region_estimate

    @property
    def holds(self):
        """No applicable bound is violated."""
        return all(bound.satisfied is not False for bound in (self.generic, self.zhu, self.adams))

    def to_json(self):
        """Get the report as JSON compatible dictionary."""
        return {"span": self.span, "generic": self.generic.to_json(), "zhu": self.zhu.to_json(),
                "adams": self.adams.to_json(), "region_estimate": self.region_estimate,
                "region_estimate_exceeded": self.region_estimate_exceeded}


def bounds_report(diagram, info, decomposition, report, dealternator_connected, dealternator_reduced, counts=None):
    """
    Evaluate the span bounds.

    The generic bound ``2n + 2(|s_A D| + |s_B D|) - 4`` always applies,
    ``4(n - k)`` needs a dealternator connected diagram and ``4(n - k - 2)``
    additionally a dealternator reduced one with ``k >= 1``, where both
    extreme coefficients have to vanish as well.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param decomposition: region decomposition
    :type decomposition: :class:`knotspan.regions.RegionDecomposition`
    :param report: bracket data
    :type report: :class:`knotspan.bracket.BracketReport`
    :param dealternator_connected: diagram is dealternator connected
    :type dealternator_connected: boolean
    :param dealternator_reduced: diagram is dealternator reduced
    :type dealternator_reduced: boolean
    :param counts: extreme circle counts, computed when omitted
    :type counts: tuple of integers
    :returns: bounds
    :rtype: :class:`knotspan.bracket.BoundsReport`
    """
    n, k, span = diagram.n, info.k, report.span
    s_a, s_b = counts if counts is not None else extreme_counts(diagram)

    generic_value = 2 * n + 2 * (s_a + s_b) - 4
    generic = Bound("generic", generic_value, True, span <= generic_value)

    zhu_value = 4 * (n - k)
    zhu = Bound("zhu", zhu_value, dealternator_connected, span <= zhu_value if dealternator_connected else None)

    adams_value = 4 * (n - k - 2)
    adams_applicable = dealternator_connected and dealternator_reduced and k >= 1
    adams = Bound("adams", adams_value, adams_applicable,
                  span <= adams_value and report.a_M == 0 and report.a_m == 0 if adams_applicable else None)

    return BoundsReport(span=span, generic=generic, zhu=zhu, adams=adams,
                        region_estimate=2 * n + 2 * decomposition.r - 4)
