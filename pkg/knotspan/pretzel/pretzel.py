#####################################################################
# pretzel.py
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
"""Pretzel diagram generator."""

import itertools
import typing

from dataclasses import dataclass

from ..common.exceptions import SpecError
from ..diagram.diagram import Diagram


@dataclass(frozen=True)
class PretzelSpec:
    """
    Signed twist counts of the bands of a pretzel diagram.

    A positive count puts the ``\\`` strand over at every crossing of its band.
    """

    twists: typing.Tuple[int, ...]

    def __post_init__(self):
        """Validate the twist counts."""
        twists = tuple(self.twists)
        object.__setattr__(self, "twists", twists)

        if len(twists) < 2:
            raise SpecError(f"pretzel needs at least 2 bands, got {len(twists)}")

        for twist in twists:
            if isinstance(twist, bool) or not isinstance(twist, int) or twist == 0:
                raise SpecError(f"twist counts must be nonzero integers, got {twist!r}")

    @property
    def n(self):
        """Number of crossings."""
        return sum(abs(twist) for twist in self.twists)

    def mirrored(self):
        """Get the spec with every sign negated."""
        return PretzelSpec(tuple(-twist for twist in self.twists))

    def __str__(self):
        """Get the spec as ``P(a1,a2,...)``."""
        return "P(" + ",".join(str(twist) for twist in self.twists) + ")"


def parse_twists(text):
    """
    Parse a comma separated twist list like ``"4,-3,3"``.

    Surrounding ``P(`` and ``)`` are accepted.

    :param text: twist list
    :type text: string
    :returns: pretzel spec
    :rtype: :class:`knotspan.pretzel.PretzelSpec`
    """
    body = text.strip()
    if body.upper().startswith("P(") and body.endswith(")"):
        body = body[2:-1]

    try:
        twists = tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise SpecError(f"invalid twist list {text!r}") from exc

    return PretzelSpec(twists)


def _crossing(upper_left, upper_right, lower_left, lower_right, positive):
    if positive:
        return lower_left, lower_right, upper_right, upper_left

    return upper_left, lower_left, lower_right, upper_right


def pretzel(spec):
    """
    Build the PD code of a pretzel diagram.

    Bands are placed left to right, crossings are indexed band by band from
    top to bottom. Arc labels are numbered top arcs first, then band
    interiors, then bottom arcs.

    **Example**::

        >>> import knotspan.pretzel
        >>> str(knotspan.pretzel.pretzel(knotspan.pretzel.PretzelSpec((1, 1))))
        'X[4,3,1,2] X[3,4,2,1]'

    :param spec: twist counts, a sequence is accepted as well
    :type spec: :class:`knotspan.pretzel.PretzelSpec`
    :returns: diagram with ``sum(|a_i|)`` crossings
    :rtype: :class:`knotspan.diagram.Diagram`
    """
    if not isinstance(spec, PretzelSpec):
        spec = PretzelSpec(tuple(spec))

    bands = len(spec.twists)
    labels = itertools.count(1)

    top = [next(labels) for _ in range(bands)]
    interiors = [[(next(labels), next(labels)) for _ in range(abs(twist) - 1)] for twist in spec.twists]
    bottom = [next(labels) for _ in range(bands)]

    crossings = []
    for band, twist in enumerate(spec.twists):
        levels = [(top[band - 1], top[band])] + interiors[band] + [(bottom[band - 1], bottom[band])]
        for (upper_left, upper_right), (lower_left, lower_right) in zip(levels, levels[1:]):
            crossings.append(_crossing(upper_left, upper_right, lower_left, lower_right, twist > 0))

    return Diagram(tuple(crossings))


def alternating_pretzels(max_crossings, min_bands=2):
    """
    Generate all pretzel specs with positive non-increasing twists.

    :param max_crossings: largest number of crossings
    :type max_crossings: integer
    :param min_bands: smallest number of bands
    :type min_bands: integer
    :returns: specs ordered by crossing count
    :rtype: iterator of :class:`knotspan.pretzel.PretzelSpec`
    """
    for n in range(min_bands, max_crossings + 1):
        for parts in _partitions(n, n):
            if len(parts) >= min_bands:
                yield PretzelSpec(parts)


def _partitions(n, largest):
    if n == 0:
        yield ()
        return

    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest
