#####################################################################
# pd.py
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
"""PD text reader and writer."""

import logging
import re

from ..common.exceptions import LabelError, PDSyntaxError
from .diagram import Diagram

logger = logging.getLogger(__name__)

_CROSSING_PATTERN = re.compile(r"^X\[([^\]]*)\]$")
_LOOPS_PATTERN = re.compile(r"^loops=([0-9]+)$")
_LABEL_PATTERN = re.compile(r"^[0-9]+$")


def parse_pd(text):
    """
    Parse PD text into a diagram.

    Tokens are separated by whitespace, ``#`` starts a line comment. A token
    is either ``X[a,b,c,d]`` with positive decimal labels or ``loops=<int>``.

    **Example**::

        >>> import knotspan.diagram
        >>> knotspan.diagram.parse_pd("X[1,1,2,2]")
        Diagram(crossings=((1, 1, 2, 2),), free_loops=0)

    :param text: PD source
    :type text: string
    :returns: validated diagram
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    crossings = []
    free_loops = None

    for line_number, line in enumerate(text.splitlines(), 1):
        for token in line.split("#", 1)[0].split():
            crossing_match = _CROSSING_PATTERN.match(token)
            if crossing_match:
                crossings.append(_parse_crossing(crossing_match.group(1), token, line_number))
                continue

            loops_match = _LOOPS_PATTERN.match(token)
            if loops_match:
                if free_loops is not None:
                    raise PDSyntaxError(f"line {line_number}: repeated loops token {token!r}")

                free_loops = int(loops_match.group(1))
                continue

            raise PDSyntaxError(f"line {line_number}: malformed token {token!r}")

    if not crossings and not free_loops:
        raise PDSyntaxError("diagram has neither crossings nor loops")

    diagram = Diagram(tuple(crossings), free_loops or 0)
    logger.debug("parsed diagram with %d crossings and %d free loops", diagram.n, diagram.free_loops)

    return diagram


def _parse_crossing(body, token, line_number):
    parts = [part.strip() for part in body.split(",")]
    if len(parts) != 4 or not all(_LABEL_PATTERN.match(part) for part in parts):
        raise PDSyntaxError(f"line {line_number}: malformed crossing {token!r}")

    labels = tuple(int(part) for part in parts)
    if 0 in labels:
        raise LabelError(f"line {line_number}: arc labels must be positive in {token!r}")

    return labels


def to_pd(diagram):
    """
    Format a diagram as PD text.

    :param diagram: diagram to format
    :type diagram: :class:`knotspan.diagram.Diagram`
    :returns: PD text accepted by :func:`parse_pd`
    :rtype: string
    """
    return str(diagram)


def load_pd(path):
    """
    Read and parse a PD file.

    :param path: file path
    :type path: string or path-like
    :returns: validated diagram
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    with open(path, "r", encoding="utf-8") as pd_file:
        return parse_pd(pd_file.read())
