#####################################################################
# state.py
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
"""Smoothing states."""

import typing

from dataclasses import dataclass

from ..common.config import DEFAULT_STATE_CAP
from ..common.helpers import check_cap
from ..diagram.diagram import Smoothing


@dataclass(frozen=True)
class State:
    """
    A smoothing choice per crossing.

    Packed as bits, bit ``i`` is the choice at crossing ``i`` (0 = A, 1 = B).

    **Example**::

        >>> import knotspan.states
        >>> state = knotspan.states.State.from_choices("ABA")
        >>> state.bits, state.count_b
        (2, 1)
    """

    n: int
    bits: int = 0

    def __post_init__(self):
        """Validate the packed bits."""
        if self.n < 0:
            raise ValueError(f"state length must be nonnegative, got {self.n}")

        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"state bits {self.bits} out of range for {self.n} crossings")

    @classmethod
    def all_a(cls, n):
        """Get the all-A state."""
        return cls(n, 0)

    @classmethod
    def all_b(cls, n):
        """Get the all-B state."""
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_choices(cls, choices):
        """
        Build a state from a choice per crossing.

        :param choices: smoothings or their letters
        :type choices: iterable of :class:`knotspan.diagram.Smoothing` or strings
        :returns: packed state
        :rtype: :class:`knotspan.states.State`
        """
        choices = [Smoothing(choice) for choice in choices]
        return cls(len(choices), sum(choice.bit << index for index, choice in enumerate(choices)))

    def choice(self, index):
        """
        Get the smoothing at a crossing.

        :param index: crossing index
        :type index: integer
        :returns: smoothing
        :rtype: :class:`knotspan.diagram.Smoothing`
        """
        if not 0 <= index < self.n:
            raise IndexError(f"crossing index {index} out of range for {self.n} crossings")

        return Smoothing.B if (self.bits >> index) & 1 else Smoothing.A

    def flipped(self, index):
        """Get the state with the choice at one crossing exchanged."""
        if not 0 <= index < self.n:
            raise IndexError(f"crossing index {index} out of range for {self.n} crossings")

        return State(self.n, self.bits ^ (1 << index))

    @property
    def choices(self):
        """Smoothing per crossing."""
        return tuple(self.choice(index) for index in range(self.n))

    @property
    def count_b(self):
        """Number of B smoothings."""
        return bin(self.bits).count("1")

    @property
    def count_a(self):
        """Number of A smoothings."""
        return self.n - self.count_b

    def __len__(self):
        """Get the number of crossings."""
        return self.n

    def __str__(self):
        """Get the choices as letters."""
        return "".join(choice.value for choice in self.choices)


def state_range(n, start, stop):
    """
    Iterate the states with indices in ``[start, stop)``.

    :param n: number of crossings
    :type n: integer
    :param start: first state index
    :type start: integer
    :param stop: index after the last state
    :type stop: integer
    :returns: states in binary counting order
    :rtype: iterator of :class:`knotspan.states.State`
    """
    start = max(start, 0)
    stop = min(stop, 1 << n)
    for bits in range(start, stop):
        yield State(n, bits)


def state_iterator(n, cap=DEFAULT_STATE_CAP):
    """
    Iterate all ``2**n`` states in binary counting order.

    :param n: number of crossings
    :type n: integer
    :param cap: maximum number of crossings
    :type cap: integer
    :returns: states
    :rtype: iterator of :class:`knotspan.states.State`
    """
    check_cap("state enumeration", n, cap)
    return state_range(n, 0, 1 << n)
