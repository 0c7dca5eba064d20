#####################################################################
# exceptions.py
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
"""Exceptions raised by knotspan."""


class KnotspanError(Exception):
    """Base class for all knotspan errors."""


class PDSyntaxError(KnotspanError, ValueError):
    """PD text contains a token that does not follow the grammar."""


class LabelError(KnotspanError, ValueError):
    """An arc label is not a positive integer or does not occur exactly twice."""


class DisconnectedDiagram(KnotspanError, ValueError):
    """Operation requires a connected diagram."""


class PlanarityError(KnotspanError, ValueError):
    """Traced faces violate the Euler formula, the PD data is not a planar diagram."""


class ColoringContradiction(KnotspanError, ValueError):
    """Face adjacency is not bipartite."""


class ConstraintContradiction(KnotspanError, ValueError):
    """Arc constraints for the switching variables have no solution."""


class LengthMismatch(KnotspanError, ValueError):
    """State length differs from the crossing count of the diagram."""


class SpecError(KnotspanError, ValueError):
    """Invalid pretzel specification."""


class ZeroPolynomialError(KnotspanError, ValueError):
    """Degree information requested from the zero polynomial."""


class CapExceeded(KnotspanError, ValueError):
    """Exponential enumeration above the configured cap."""

    def __init__(self, what, requested, cap):
        """
        Initialize the exception.

        :param what: name of the enumeration (e.g. "state sum")
        :type what: string
        :param requested: size that was requested (crossings or dealternators)
        :type requested: integer
        :param cap: configured maximum
        :type cap: integer
        """
        super().__init__(f"{what} over {requested} crossings exceeds cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap
