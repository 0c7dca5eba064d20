#####################################################################
# statesum.py
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
"""Kauffman bracket state sum."""

import collections
import concurrent.futures
import logging

import sympy

from ..common.config import DEFAULT_STATE_CAP, DEFAULT_WORKERS
from ..common.helpers import check_cap
from ..diagram.diagram import Smoothing
from ..diagram.operations import smooth_crossing
from ..states.circles import circle_count
from ..states.state import state_range
from .laurent import A, LaurentPolynomial

logger = logging.getLogger(__name__)

# value of a circle
DELTA = -A ** 2 - A ** -2


def tally_states(diagram, start, stop):
    """
    Count the states in ``[start, stop)`` by exponent and circle count.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param start: first state index
    :type start: integer
    :param stop: index after the last state
    :type stop: integer
    :returns: number of states per (#A - #B, circles)
    :rtype: :class:`collections.Counter`
    """
    tally = collections.Counter()
    for state in state_range(diagram.n, start, stop):
        tally[(state.count_a - state.count_b, circle_count(diagram, state))] += 1

    return tally


def polynomial_from_tally(tally):
    """
    Sum ``A**e * delta**(circles - 1)`` over a state tally.

    :param tally: number of states per (exponent, circles)
    :type tally: mapping
    :returns: bracket
    :rtype: :class:`knotspan.bracket.LaurentPolynomial`
    """
    return LaurentPolynomial.from_expr(sympy.Add(*[count * A ** exponent * DELTA ** (circles - 1)
                                                   for (exponent, circles), count in sorted(tally.items())]))


def _partitions(total, parts):
    size, remainder = divmod(total, parts)
    start = 0
    for index in range(parts):
        stop = start + size + (1 if index < remainder else 0)
        if stop > start:
            yield start, stop
        start = stop


def kauffman_bracket(diagram, cap=DEFAULT_STATE_CAP, workers=DEFAULT_WORKERS):
    """
    Evaluate the Kauffman bracket by summing over all states.

    Each state contributes ``A**(#A - #B) * (-A**2 - A**-2)**(circles - 1)``,
    free loops count as circles. With ``workers > 1`` the state range is split
    into disjoint partitions evaluated in a process pool.

    **Example**::

        >>> import knotspan.diagram, knotspan.bracket
        >>> trefoil = knotspan.diagram.parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        >>> knotspan.bracket.kauffman_bracket(trefoil).terms
        [(-5, -1), (3, -1), (7, 1)]

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param cap: maximum number of crossings
    :type cap: integer
    :param workers: number of worker processes
    :type workers: integer
    :returns: bracket
    :rtype: :class:`knotspan.bracket.LaurentPolynomial`
    """
    check_cap("state sum", diagram.n, cap)

    total = 1 << diagram.n
    if workers <= 1 or total < 2 * workers:
        return polynomial_from_tally(tally_states(diagram, 0, total))

    chunks = list(_partitions(total, workers * 4))
    logger.debug("state sum over %d states in %d partitions on %d workers", total, len(chunks), workers)

    tally = collections.Counter()
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(tally_states, diagram, start, stop) for start, stop in chunks]
        for future in futures:
            tally.update(future.result())

    return polynomial_from_tally(tally)


def skein_check(diagram, crossing, cap=DEFAULT_STATE_CAP, bracket=None):
    """
    Check ``<D> = A <D_A> + A**-1 <D_B>`` at one crossing.

    :param diagram: diagram with at least one crossing
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param crossing: crossing index
    :type crossing: integer
    :param cap: maximum number of crossings
    :type cap: integer
    :param bracket: bracket of the diagram, computed when omitted
    :type bracket: :class:`knotspan.bracket.LaurentPolynomial`
    :returns: True if the relation holds
    :rtype: boolean
    """
    if bracket is None:
        bracket = kauffman_bracket(diagram, cap)

    smoothed_a = kauffman_bracket(smooth_crossing(diagram, crossing, Smoothing.A), cap)
    smoothed_b = kauffman_bracket(smooth_crossing(diagram, crossing, Smoothing.B), cap)

    return bracket == smoothed_a.shifted(1) + smoothed_b.shifted(-1)
