#####################################################################
# smoothings.py
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
"""Diagrams obtained by smoothing all dealternators."""

import itertools
import logging

from ..common.config import DEFAULT_SMOOTHING_CAP
from ..common.helpers import check_cap
from ..diagram.diagram import Smoothing
from ..diagram.faces import is_connected, is_reduced
from ..diagram.operations import smooth_crossings

logger = logging.getLogger(__name__)


def smooth_dealternators(diagram, info, choices):
    """
    Smooth every dealternator with the given choice.

    :param diagram: diagram the dealternators belong to
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data of the diagram
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param choices: smoothing per dealternator, in ascending crossing order
    :type choices: sequence of :class:`knotspan.diagram.Smoothing`
    :returns: diagram with ``n - k`` crossings
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    dealternators = sorted(info.dealternators)
    if len(choices) != len(dealternators):
        raise ValueError(f"got {len(choices)} smoothings for {len(dealternators)} dealternators")

    return smooth_crossings(diagram, dict(zip(dealternators, (Smoothing(choice) for choice in choices))))


def _choice_vectors(info, cap):
    check_cap("dealternator smoothings", info.k, cap)
    return itertools.product((Smoothing.A, Smoothing.B), repeat=info.k)


def dealternator_smoothings(diagram, info, cap=DEFAULT_SMOOTHING_CAP):
    """
    Smooth the dealternators in every possible way.

    **Example**::

        >>> import knotspan.diagram, knotspan.dealternator
        >>> d = knotspan.diagram.parse_pd("X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]")
        >>> info = knotspan.dealternator.dealternator_info(d)
        >>> [smoothed.n for smoothed in knotspan.dealternator.dealternator_smoothings(d, info)]
        [2, 2]

    :param diagram: diagram the dealternators belong to
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data of the diagram
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param cap: maximum number of dealternators
    :type cap: integer
    :returns: the ``2**k`` smoothed diagrams, all-A first
    :rtype: list of :class:`knotspan.diagram.Diagram`
    """
    return [smooth_dealternators(diagram, info, choices) for choices in _choice_vectors(info, cap)]


def is_dealternator_connected(diagram, info, cap=DEFAULT_SMOOTHING_CAP):
    """
    Check whether every dealternator smoothing is connected.

    A crossingless circle split off while crossings remain makes the smoothing
    disconnected.

    :param diagram: diagram the dealternators belong to
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data of the diagram
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param cap: maximum number of dealternators
    :type cap: integer
    :returns: True if dealternator connected
    :rtype: boolean
    """
    for choices in _choice_vectors(info, cap):
        if not is_connected(smooth_dealternators(diagram, info, choices)):
            logger.debug("smoothing %s of %s is disconnected", "".join(choice.value for choice in choices), diagram)
            return False

    return True


def is_dealternator_reduced(diagram, info, cap=DEFAULT_SMOOTHING_CAP):
    """
    Check whether every dealternator smoothing is connected and reduced.

    :param diagram: diagram the dealternators belong to
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data of the diagram
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param cap: maximum number of dealternators
    :type cap: integer
    :returns: True if dealternator reduced
    :rtype: boolean
    """
    for choices in _choice_vectors(info, cap):
        smoothed = smooth_dealternators(diagram, info, choices)
        vector = "".join(choice.value for choice in choices)

        if not is_connected(smoothed):
            logger.debug("smoothing %s of %s is disconnected, reducedness undefined", vector, diagram)
            return False

        if not is_reduced(smoothed):
            logger.debug("smoothing %s of %s has a nugatory crossing", vector, diagram)
            return False

    return True
