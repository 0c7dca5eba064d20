#####################################################################
# faces.py
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
"""Faces, connectivity and checkerboard coloring of diagram projections."""

import logging
import typing

from dataclasses import dataclass

import networkx as nx

from ..common.exceptions import ColoringContradiction, DisconnectedDiagram, PlanarityError
from .diagram import Color

logger = logging.getLogger(__name__)

Corner = typing.Tuple[int, int]


@dataclass(frozen=True)
class FaceDecomposition:
    """
    Faces of a connected diagram projection on the sphere.

    A corner is a (crossing, corner position) pair, corner ``i`` (1..4) sits
    between tuple positions ``i`` and ``i + 1`` (mod 4).
    """

    faces: typing.Tuple[typing.Tuple[Corner, ...], ...]
    face_of_corner: typing.Mapping[Corner, int]

    def face(self, crossing, corner):
        """
        Get the face index at a corner.

        :param crossing: crossing index
        :type crossing: integer
        :param corner: corner position 1..4
        :type corner: integer
        :returns: face index
        :rtype: integer
        """
        return self.face_of_corner[(crossing, corner)]

    def __len__(self):
        """Get the number of faces."""
        return len(self.faces)


@dataclass(frozen=True)
class CheckerboardColoring:
    """Proper two-coloring of the faces."""

    color_of_face: typing.Tuple[Color, ...]

    def color(self, face):
        """
        Get the color of a face.

        :param face: face index
        :type face: integer
        :returns: color of the face
        :rtype: :class:`knotspan.diagram.Color`
        """
        return self.color_of_face[face]

    def swapped(self):
        """Get the coloring with both colors exchanged."""
        return CheckerboardColoring(tuple(color.other for color in self.color_of_face))


def crossing_graph(diagram):
    """
    Build the 4-valent graph of a diagram, one edge per arc.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: multigraph on crossing indices, edges keyed by arc label
    :rtype: :class:`networkx.MultiGraph`
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(diagram.n))
    for label, ((first, first_position), (second, second_position)) in diagram.occurrences.items():
        graph.add_edge(first, second, key=label, positions=(first_position, second_position))

    return graph


def is_connected(diagram):
    """
    Check whether a diagram is a single connected projection.

    Free loops count as separate components: ``loops=1`` is connected,
    ``loops=2`` is not, and so is any diagram with crossings and free loops.

    :param diagram: diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: True if connected
    :rtype: boolean
    """
    if diagram.n == 0:
        return diagram.free_loops == 1

    if diagram.free_loops:
        return False

    return nx.is_connected(crossing_graph(diagram))


def _require_connected(diagram):
    if diagram.n == 0:
        raise DisconnectedDiagram("diagram has no crossings, no projection faces exist")

    if not is_connected(diagram):
        raise DisconnectedDiagram(f"diagram {diagram} is not connected")


def faces(diagram):
    """
    Trace the faces of a connected diagram from its rotation system.

    **Example**::

        >>> import knotspan.diagram
        >>> len(knotspan.diagram.faces(knotspan.diagram.parse_pd("X[1,1,2,2]")))
        3

    :param diagram: connected diagram with at least one crossing
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: face decomposition
    :rtype: :class:`knotspan.diagram.FaceDecomposition`
    """
    _require_connected(diagram)

    face_of_corner = {}
    traced = []

    for crossing in range(diagram.n):
        for corner in range(1, 5):
            if (crossing, corner) in face_of_corner:
                continue

            face = []
            current = (crossing, corner)
            while current not in face_of_corner:
                face_of_corner[current] = len(traced)
                face.append(current)

                # leave along the arc at the position following the corner
                other_crossing, other_position = diagram.other_slot((current[0], current[1] % 4))
                current = (other_crossing, other_position + 1)

            traced.append(tuple(face))

    if len(traced) != diagram.n + 2:
        raise PlanarityError(f"traced {len(traced)} faces for {diagram.n} crossings, expected {diagram.n + 2}")

    logger.debug("traced %d faces for %d crossings", len(traced), diagram.n)

    return FaceDecomposition(tuple(traced), face_of_corner)


def checkerboard(diagram, face_decomposition=None):
    """
    Color the faces so that faces sharing an edge differ.

    The face at corner 1 of crossing 0 is white.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param face_decomposition: faces of the diagram, traced when omitted
    :type face_decomposition: :class:`knotspan.diagram.FaceDecomposition`
    :returns: coloring
    :rtype: :class:`knotspan.diagram.CheckerboardColoring`
    """
    _require_connected(diagram)
    if face_decomposition is None:
        face_decomposition = faces(diagram)

    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(len(face_decomposition)))
    for crossing in range(diagram.n):
        for corner in range(1, 5):
            adjacency.add_edge(face_decomposition.face(crossing, corner),
                               face_decomposition.face(crossing, corner % 4 + 1))

    try:
        parts = nx.bipartite.color(adjacency)
    except nx.NetworkXError as exc:
        raise ColoringContradiction(f"face adjacency of {diagram} is not bipartite") from exc

    anchor = parts[face_decomposition.face(0, 1)]

    return CheckerboardColoring(tuple(Color.WHITE if parts[face] == anchor else Color.BLACK
                                      for face in range(len(face_decomposition))))


def nugatory_crossings(diagram, face_decomposition=None):
    """
    Get the crossings with the same face at two opposite corners.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param face_decomposition: faces of the diagram, traced when omitted
    :type face_decomposition: :class:`knotspan.diagram.FaceDecomposition`
    :returns: sorted crossing indices
    :rtype: list of integers
    """
    if face_decomposition is None:
        face_decomposition = faces(diagram)

    face = face_decomposition.face
    return [crossing for crossing in range(diagram.n)
            if face(crossing, 1) == face(crossing, 3) or face(crossing, 2) == face(crossing, 4)]


def is_reduced(diagram, face_decomposition=None):
    """
    Check whether a connected diagram has no nugatory crossing.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param face_decomposition: faces of the diagram, traced when omitted
    :type face_decomposition: :class:`knotspan.diagram.FaceDecomposition`
    :returns: True if reduced
    :rtype: boolean
    """
    return not nugatory_crossings(diagram, face_decomposition)
