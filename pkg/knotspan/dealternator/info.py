#####################################################################
# info.py
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
"""Minimal dealternator sets."""

import logging
import typing

from dataclasses import dataclass

import networkx as nx

from ..common.exceptions import ConstraintContradiction, DisconnectedDiagram
from ..diagram.diagram import Diagram
from ..diagram.faces import crossing_graph, is_connected
from ..diagram.operations import switch_crossings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DealternatorInfo:
    """
    Minimal set of crossings whose switch makes a diagram alternating.

    :param k: number of dealternators
    :param dealternators: crossing indices to switch
    :param alternating_diagram: the diagram with all dealternators switched
    :param tie: both candidate sets have ``n / 2`` crossings
    """

    k: int
    dealternators: typing.FrozenSet[int]
    alternating_diagram: Diagram
    tie: bool = False

    @property
    def is_alternating(self):
        """True if the diagram has no dealternator."""
        return self.k == 0

    def is_dealternator(self, crossing):
        """Check whether a crossing is a dealternator."""
        return crossing in self.dealternators


def switch_assignment(diagram):
    """
    Solve the switch variables of a connected diagram.

    Along every arc the two ends have to be one over and one under after
    switching, giving ``s_x XOR s_y = (1 + p + q) mod 2`` for an arc between
    0-based positions ``p`` of crossing ``x`` and ``q`` of crossing ``y``. The
    solution with crossing 0 unswitched is returned, the other one is its
    complement.

    :param diagram: connected diagram with at least one crossing
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: switch bit per crossing
    :rtype: list of integers
    """
    if diagram.n == 0 or not is_connected(diagram):
        raise DisconnectedDiagram(f"dealternators need a connected diagram with crossings, got {diagram}")

    graph = crossing_graph(diagram)

    switched = {0: 0}
    for parent, child in nx.bfs_edges(graph, 0):
        data = next(iter(graph.get_edge_data(parent, child).values()))
        switched[child] = switched[parent] ^ ((1 + sum(data["positions"])) % 2)

    for first_crossing, second_crossing, label, data in graph.edges(keys=True, data=True):
        parity = (1 + sum(data["positions"])) % 2
        if switched[first_crossing] ^ switched[second_crossing] != parity:
            raise ConstraintContradiction(f"arc {label} cannot alternate in {diagram}")

    return [switched[crossing] for crossing in range(diagram.n)]


def dealternator_info(diagram):
    """
    Find a minimal dealternator set.

    **Example**::

        >>> import knotspan.diagram, knotspan.dealternator
        >>> d = knotspan.diagram.parse_pd("X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]")
        >>> info = knotspan.dealternator.dealternator_info(d)
        >>> info.k, sorted(info.dealternators)
        (1, [0])

    :param diagram: connected diagram with at least one crossing
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: dealternator data
    :rtype: :class:`knotspan.dealternator.DealternatorInfo`
    """
    assignment = switch_assignment(diagram)
    weight = sum(assignment)

    tie = 2 * weight == diagram.n
    if 2 * weight > diagram.n:
        assignment = [1 - bit for bit in assignment]

    dealternators = frozenset(index for index, bit in enumerate(assignment) if bit)
    logger.debug("dealternators %s of %d crossings (tie %s)", sorted(dealternators), diagram.n, tie)

    return DealternatorInfo(len(dealternators), dealternators, switch_crossings(diagram, dealternators), tie)


def is_alternating(diagram):
    """
    Check whether a connected diagram is alternating.

    :param diagram: connected diagram with at least one crossing
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: True if no crossing has to be switched
    :rtype: boolean
    """
    return dealternator_info(diagram).k == 0
