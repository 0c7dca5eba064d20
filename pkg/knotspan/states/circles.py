#####################################################################
# circles.py
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
"""Circle counts of smoothed diagrams."""

from networkx.utils import UnionFind

from ..common.exceptions import LengthMismatch
from .state import State


def _check_length(diagram, state):
    if len(state) != diagram.n:
        raise LengthMismatch(f"state has {len(state)} choices, diagram has {diagram.n} crossings")


def state_partition(diagram, state):
    """
    Join the arc labels that lie on the same circle of a state.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param state: smoothing per crossing
    :type state: :class:`knotspan.states.State`
    :returns: disjoint sets over the arc labels
    :rtype: :class:`networkx.utils.UnionFind`
    """
    _check_length(diagram, state)

    circles = UnionFind(diagram.labels)
    for index, ends in enumerate(diagram.crossings):
        for first, second in state.choice(index).pairs:
            circles.union(ends[first], ends[second])

    return circles


def circle_count(diagram, state):
    """
    Count the circles after smoothing every crossing as the state says.

    **Example**::

        >>> import knotspan.diagram, knotspan.states
        >>> curl = knotspan.diagram.parse_pd("X[1,1,2,2]")
        >>> knotspan.states.circle_count(curl, knotspan.states.State.all_a(1))
        2

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param state: smoothing per crossing
    :type state: :class:`knotspan.states.State`
    :returns: number of circles, free loops included
    :rtype: integer
    """
    circles = state_partition(diagram, state)

    return len({circles[label] for label in diagram.labels}) + diagram.free_loops


def extreme_counts(diagram):
    """
    Count the circles of the all-A and all-B states.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: (|s_A D|, |s_B D|)
    :rtype: tuple of integers
    """
    return circle_count(diagram, State.all_a(diagram.n)), circle_count(diagram, State.all_b(diagram.n))


def trace_circles(diagram, state):
    """
    Count circles by walking along them.

    Independent of :func:`circle_count`: starting from an unvisited arc end,
    follow the arc to its other end, cross over to the partner end of the
    smoothing there, and repeat until the start is reached again.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param state: smoothing per crossing
    :type state: :class:`knotspan.states.State`
    :returns: number of circles, free loops included
    :rtype: integer
    """
    _check_length(diagram, state)

    partner = {}
    for index in range(diagram.n):
        for first, second in state.choice(index).pairs:
            partner[(index, first)] = (index, second)
            partner[(index, second)] = (index, first)

    visited = set()
    circles = 0
    for start in sorted(partner):
        if start in visited:
            continue

        circles += 1
        current = start
        while current not in visited:
            visited.add(current)
            arrival = diagram.other_slot(current)
            visited.add(arrival)
            current = partner[arrival]

    return circles + diagram.free_loops
