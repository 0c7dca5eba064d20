#####################################################################
# decomposition.py
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
"""Regions of the surface cut along the dealternator bridges."""

import logging
import typing

from dataclasses import dataclass

from networkx.utils import UnionFind

from ..diagram.diagram import Color

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bridge:
    """
    Band joining two faces of the same color through a dealternator.

    ``closes_cycle`` is set when both faces already belonged to the same
    region when the bridge was added, the bridge then adds one hole.
    """

    dealternator: int
    color: Color
    endpoints: typing.Tuple[int, int]
    closes_cycle: bool = False


@dataclass(frozen=True)
class RegionComponent:
    """Faces of one color joined by bridges, a disc with ``s_i`` holes."""

    color: Color
    faces: typing.FrozenSet[int]
    bridges: typing.Tuple[Bridge, ...]
    s_i: int
    boundary_circles: int


@dataclass(frozen=True)
class RegionDecomposition:
    """All region components of a diagram."""

    components: typing.Tuple[RegionComponent, ...]
    s_a_color: Color

    @property
    def r(self):
        """Number of regions."""
        return len(self.components)

    @property
    def s(self):
        """Total number of holes."""
        return sum(component.s_i for component in self.components)

    def components_of(self, color):
        """
        Get the regions of one color.

        :param color: region color
        :type color: :class:`knotspan.diagram.Color`
        :returns: matching components
        :rtype: list of :class:`knotspan.regions.RegionComponent`
        """
        return [component for component in self.components if component.color is color]

    def boundary_total(self, color):
        """Get the number of boundary circles of all regions of one color."""
        return sum(component.boundary_circles for component in self.components_of(color))

    @property
    def white_boundary_total(self):
        """Boundary circles of the white regions."""
        return self.boundary_total(Color.WHITE)

    @property
    def black_boundary_total(self):
        """Boundary circles of the black regions."""
        return self.boundary_total(Color.BLACK)


def s_a_color(diagram, info, face_decomposition, coloring):
    """
    Get the color whose region boundaries are the all-A state circles.

    At a crossing that is not a dealternator the A smoothing cuts off the
    faces at corners 1 and 3, so their color is the s_A color.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param face_decomposition: faces of the diagram
    :type face_decomposition: :class:`knotspan.diagram.FaceDecomposition`
    :param coloring: checkerboard coloring of the faces
    :type coloring: :class:`knotspan.diagram.CheckerboardColoring`
    :returns: s_A color
    :rtype: :class:`knotspan.diagram.Color`
    """
    for crossing in range(diagram.n):
        if not info.is_dealternator(crossing):
            return coloring.color(face_decomposition.face(crossing, 1))

    return coloring.color(face_decomposition.face(0, 2))


def region_decomposition(diagram, info, face_decomposition, coloring):
    """
    Join same colored faces through the bridges of every dealternator.

    At a dealternator the faces at corners 2 and 4 are joined by one bridge
    and the faces at corners 1 and 3 by the other. A region with ``F`` faces
    and ``b`` bridges has ``s_i = b - F + 1`` holes and ``s_i + 1`` boundary
    circles.

    **Example**::

        >>> import knotspan.diagram, knotspan.dealternator, knotspan.regions
        >>> d = knotspan.diagram.parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        >>> f = knotspan.diagram.faces(d)
        >>> rd = knotspan.regions.region_decomposition(d, knotspan.dealternator.dealternator_info(d), f,
        ...                                           knotspan.diagram.checkerboard(d, f))
        >>> rd.r, rd.s
        (5, 0)

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param face_decomposition: faces of the diagram
    :type face_decomposition: :class:`knotspan.diagram.FaceDecomposition`
    :param coloring: checkerboard coloring of the faces
    :type coloring: :class:`knotspan.diagram.CheckerboardColoring`
    :returns: region decomposition
    :rtype: :class:`knotspan.regions.RegionDecomposition`
    """
    face = face_decomposition.face
    regions = UnionFind(range(len(face_decomposition)))

    bridges = []
    for dealternator in sorted(info.dealternators):
        for first_corner, second_corner in ((2, 4), (1, 3)):
            endpoints = (face(dealternator, first_corner), face(dealternator, second_corner))
            closes_cycle = regions[endpoints[0]] == regions[endpoints[1]]
            regions.union(*endpoints)
            bridges.append(Bridge(dealternator, coloring.color(endpoints[0]), endpoints, closes_cycle))

    components = []
    for faces in sorted((sorted(region) for region in regions.to_sets()), key=lambda region: region[0]):
        members = frozenset(faces)
        region_bridges = tuple(bridge for bridge in bridges if bridge.endpoints[0] in members)
        s_i = len(region_bridges) - len(members) + 1
        components.append(RegionComponent(coloring.color(faces[0]), members, region_bridges, s_i, s_i + 1))

    decomposition = RegionDecomposition(tuple(components), s_a_color(diagram, info, face_decomposition, coloring))
    logger.debug("%d regions with %d holes from %d bridges", decomposition.r, decomposition.s, len(bridges))

    return decomposition


def circle_number_via_regions(decomposition):
    """
    Count the extreme state circles as region boundaries.

    :param decomposition: region decomposition
    :type decomposition: :class:`knotspan.regions.RegionDecomposition`
    :returns: (|s_A D|, |s_B D|, circle number)
    :rtype: tuple of integers
    """
    s_a = decomposition.boundary_total(decomposition.s_a_color)
    s_b = decomposition.boundary_total(decomposition.s_a_color.other)

    return s_a, s_b, s_a + s_b


def is_dealternator_connected_via_regions(decomposition):
    """
    Check dealternator connectivity by the regions: every region is a disc.

    :param decomposition: region decomposition
    :type decomposition: :class:`knotspan.regions.RegionDecomposition`
    :returns: True if no region has a hole
    :rtype: boolean
    """
    return decomposition.s == 0
