#####################################################################
# operations.py
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
"""Mirror, crossing switches and smoothings."""

from networkx.utils import UnionFind

from .diagram import Diagram, Smoothing


def _rotate(ends):
    return ends[1:] + ends[:1]


def mirror(diagram):
    """
    Exchange over and under strands at every crossing.

    Every tuple is rotated by one position, so the rotation system is kept.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: mirrored diagram
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    return Diagram(tuple(_rotate(ends) for ends in diagram.crossings), diagram.free_loops)


def switch_crossings(diagram, crossings):
    """
    Exchange over and under strands at the given crossings.

    **Example**::

        >>> import knotspan.diagram
        >>> d = knotspan.diagram.parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        >>> knotspan.diagram.to_pd(knotspan.diagram.switch_crossings(d, {0}))
        'X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]'

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param crossings: crossing indices to switch
    :type crossings: iterable of integers
    :returns: switched diagram
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    selected = set(crossings)
    for index in selected:
        diagram.check_index(index)

    return Diagram(tuple(_rotate(ends) if index in selected else ends
                         for index, ends in enumerate(diagram.crossings)),
                   diagram.free_loops)


def smooth_crossing(diagram, crossing, kind):
    """
    Replace a crossing by its A or B smoothing.

    A joins the ends at positions (1, 2) and (3, 4), B joins (1, 4) and (2, 3).
    Arcs joined through the crossing are merged under their smallest label, a
    merge that closes up without reaching another crossing becomes a free loop.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param crossing: crossing index
    :type crossing: integer
    :param kind: smoothing to apply
    :type kind: :class:`knotspan.diagram.Smoothing`
    :returns: diagram with one crossing less
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    diagram.check_index(crossing)
    kind = Smoothing(kind)

    ends = diagram.crossings[crossing]
    joined = UnionFind(ends)
    for first, second in kind.pairs:
        joined.union(ends[first], ends[second])

    remaining = diagram.crossings[:crossing] + diagram.crossings[crossing + 1:]
    outside = {label for other in remaining for label in other}

    free_loops = diagram.free_loops
    relabel = {}
    for arc_class in joined.to_sets():
        if outside.isdisjoint(arc_class):
            free_loops += 1
            continue

        target = min(arc_class)
        relabel.update({label: target for label in arc_class})

    return Diagram(tuple(tuple(relabel.get(label, label) for label in other) for other in remaining), free_loops)


def smooth_crossings(diagram, choices):
    """
    Smooth several crossings at once.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param choices: smoothing per crossing index
    :type choices: mapping of integer to :class:`knotspan.diagram.Smoothing`
    :returns: smoothed diagram, remaining crossings keep their relative order
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    for index in choices:
        diagram.check_index(index)

    # descending, so the pending indices stay valid
    for index in sorted(choices, reverse=True):
        diagram = smooth_crossing(diagram, index, choices[index])

    return diagram
