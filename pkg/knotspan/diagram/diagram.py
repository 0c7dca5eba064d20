#####################################################################
# diagram.py
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
"""Link diagram data model."""

import collections
import enum
import functools
import typing

from dataclasses import dataclass

from ..common.exceptions import LabelError

CrossingTuple = typing.Tuple[int, int, int, int]
Slot = typing.Tuple[int, int]


class Smoothing(enum.Enum):
    """Smoothing of a single crossing."""

    A = "A"
    B = "B"

    @property
    def bit(self):
        """Bit used for this smoothing in a packed state."""
        return 0 if self is Smoothing.A else 1

    @property
    def pairs(self):
        """0-based tuple positions joined by this smoothing."""
        if self is Smoothing.A:
            return (0, 1), (2, 3)

        return (0, 3), (1, 2)


class Color(enum.Enum):
    """Checkerboard color of a face or region."""

    WHITE = "white"
    BLACK = "black"

    @property
    def other(self):
        """The opposite color."""
        return Color.BLACK if self is Color.WHITE else Color.WHITE


@dataclass(frozen=True)
class Diagram:
    """
    PD coded link diagram.

    Every crossing is a tuple of four arc labels in counterclockwise order,
    positions 1 and 3 (0-based 0 and 2) carry the under-strand. Crossingless
    circle components are counted in ``free_loops``.

    **Example**::

        >>> import knotspan.diagram
        >>> d = knotspan.diagram.Diagram(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)))
        >>> d.n
        3
        >>> d.occurrences[4]
        ((0, 1), (1, 2))

    :param crossings: crossing tuples
    :type crossings: sequence of 4-sequences of integers
    :param free_loops: number of crossingless circles
    :type free_loops: integer
    """

    crossings: typing.Tuple[CrossingTuple, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        """Normalize and validate the crossing data."""
        crossings = tuple(tuple(ends) for ends in self.crossings)
        object.__setattr__(self, "crossings", crossings)

        if isinstance(self.free_loops, bool) or not isinstance(self.free_loops, int) or self.free_loops < 0:
            raise ValueError(f"free_loops must be a nonnegative integer, got {self.free_loops!r}")

        if not crossings and not self.free_loops:
            raise ValueError("diagram has neither crossings nor loops")

        counter = collections.Counter()
        for index, ends in enumerate(crossings):
            if len(ends) != 4:
                raise LabelError(f"crossing {index} has {len(ends)} arc labels, expected 4")

            for label in ends:
                if isinstance(label, bool) or not isinstance(label, int) or label < 1:
                    raise LabelError(f"crossing {index} has invalid arc label {label!r}")

            counter.update(ends)

        for label, count in sorted(counter.items()):
            if count != 2:
                raise LabelError(f"arc label {label} occurs {count} times, expected 2")

    @property
    def n(self):
        """Number of crossings."""
        return len(self.crossings)

    @property
    def labels(self):
        """Sorted arc labels."""
        return tuple(sorted(self.occurrences))

    @functools.cached_property
    def occurrences(self):
        """Map from arc label to its two (crossing, 0-based position) slots."""
        result = {}
        for index, ends in enumerate(self.crossings):
            for position, label in enumerate(ends):
                result.setdefault(label, []).append((index, position))

        return {label: tuple(slots) for label, slots in result.items()}

    def other_slot(self, slot):
        """
        Get the slot at the other end of the arc leaving a slot.

        :param slot: (crossing, 0-based position)
        :type slot: tuple
        :returns: opposite end of the arc
        :rtype: tuple
        """
        crossing, position = slot
        first, second = self.occurrences[self.crossings[crossing][position]]

        return second if first == (crossing, position) else first

    def check_index(self, index):
        """
        Validate a crossing index.

        :param index: crossing index
        :type index: integer
        """
        if isinstance(index, bool) or not isinstance(index, int) or not 0 <= index < self.n:
            raise IndexError(f"crossing index {index!r} out of range for {self.n} crossings")

    def __str__(self):
        """Get the PD text of the diagram."""
        tokens = ["X[" + ",".join(str(label) for label in ends) + "]" for ends in self.crossings]
        if self.free_loops:
            tokens.append(f"loops={self.free_loops}")

        return " ".join(tokens)
