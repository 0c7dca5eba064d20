#####################################################################
# theorems.py
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
"""Circle number identities of the region decomposition and the surface counts."""

import typing

from dataclasses import dataclass

from ..common.exceptions import DisconnectedDiagram
from ..diagram.faces import is_connected
from ..states.circles import extreme_counts
from .decomposition import circle_number_via_regions


@dataclass(frozen=True)
class SurfaceData:
    """Counts of the graph on the surface and the surface itself."""

    gamma_vertices: int
    gamma_edges: int
    euler_characteristic: int
    genus: int
    boundary_components: int


def surface_data(n, k):
    """
    Get the surface counts of a ``k``-almost alternating diagram with ``n`` crossings.

    **Example**::

        >>> import knotspan.regions
        >>> knotspan.regions.surface_data(10, 3)
        SurfaceData(gamma_vertices=19, gamma_edges=32, euler_characteristic=-7, genus=3, boundary_components=3)

    :param n: number of crossings
    :type n: integer
    :param k: number of dealternators
    :type k: integer
    :returns: surface counts
    :rtype: :class:`knotspan.regions.SurfaceData`
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"surface needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")

    return SurfaceData(n + 3 * k, 2 * n + 4 * k, 2 - 3 * k, k, k)


def turaev_genus(diagram, counts=None):
    """
    Get the Turaev genus, ``2g = 2 + n - (|s_A D| + |s_B D|)``.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param counts: extreme circle counts, computed when omitted
    :type counts: tuple of integers
    :returns: genus
    :rtype: integer
    """
    if not is_connected(diagram):
        raise DisconnectedDiagram(f"Turaev genus needs a connected diagram, got {diagram}")

    s_a, s_b = counts if counts is not None else extreme_counts(diagram)
    doubled = 2 + diagram.n - (s_a + s_b)
    if doubled % 2:
        raise ValueError(f"odd doubled genus {doubled} for {diagram}")

    return doubled // 2


@dataclass(frozen=True)
class RegionCheck:
    """Region identities compared against directly counted circles."""

    n: int
    k: int
    r: int
    s: int
    s_a: int
    s_b: int
    region_s_a: int
    region_s_b: int
    rk_value: int
    chi_lhs: int
    chi_rhs: int

    @property
    def circle_number(self):
        """Directly counted circle number."""
        return self.s_a + self.s_b

    @property
    def region_vs_direct(self):
        """Region boundaries reproduce the extreme state circles."""
        return (self.region_s_a, self.region_s_b) == (self.s_a, self.s_b)

    @property
    def rs_holds(self):
        """Circle number equals ``r + s``."""
        return self.circle_number == self.r + self.s

    @property
    def rk_holds(self):
        """Circle number equals ``2k + 2r - n - 2``."""
        return self.circle_number == self.rk_value

    @property
    def chi_holds(self):
        """Euler characteristic of the surface equals ``2 - 3k``."""
        return self.chi_lhs == self.chi_rhs

    @property
    def holds(self):
        """All identities hold."""
        return self.region_vs_direct and self.rs_holds and self.rk_holds and self.chi_holds


def theorem_rk_check(diagram, info, decomposition, counts=None):
    """
    Compare the circle number with ``r + s`` and ``2k + 2r - n - 2``.

    Also evaluates ``(n + 3k) - (2n + 4k + 2s) + circle number`` against the
    Euler characteristic ``2 - 3k``. Failures are reported, never raised.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param decomposition: region decomposition
    :type decomposition: :class:`knotspan.regions.RegionDecomposition`
    :param counts: extreme circle counts, computed when omitted
    :type counts: tuple of integers
    :returns: all terms of the identities
    :rtype: :class:`knotspan.regions.RegionCheck`
    """
    s_a, s_b = counts if counts is not None else extreme_counts(diagram)
    region_s_a, region_s_b, _ = circle_number_via_regions(decomposition)

    n, k, r, s = diagram.n, info.k, decomposition.r, decomposition.s

    return RegionCheck(n=n, k=k, r=r, s=s, s_a=s_a, s_b=s_b, region_s_a=region_s_a, region_s_b=region_s_b,
                       rk_value=2 * k + 2 * r - n - 2,
                       chi_lhs=(n + 3 * k) - (2 * n + 4 * k + 2 * s) + s_a + s_b,
                       chi_rhs=2 - 3 * k)


@dataclass(frozen=True)
class AlternatingCaseCheck:
    """Consequences of dealternator connectivity."""

    applicable: bool
    n: int
    k: int
    circle_number: int
    genus: int
    span: typing.Optional[int] = None

    @property
    def expected_circle_number(self):
        """``n + 2 - 2k``."""
        return self.n + 2 - 2 * self.k

    @property
    def span_bound(self):
        """``4(n - k)``."""
        return 4 * (self.n - self.k)

    @property
    def holds(self):
        """True when not applicable or every consequence holds."""
        if not self.applicable:
            return True

        return self.circle_number == self.expected_circle_number and self.genus == self.k and \
            (self.span is None or self.span <= self.span_bound)


def theorem_ac_check(diagram, info, decomposition, span=None, counts=None):
    """
    Check circle number ``n + 2 - 2k``, Turaev genus ``k`` and span at most ``4(n - k)``.

    Only applicable to dealternator connected diagrams, that is when the
    regions have no holes.

    :param diagram: connected diagram
    :type diagram: :class:`knotspan.diagram.Diagram`
    :param info: dealternator data
    :type info: :class:`knotspan.dealternator.DealternatorInfo`
    :param decomposition: region decomposition
    :type decomposition: :class:`knotspan.regions.RegionDecomposition`
    :param span: span of the Kauffman bracket, the span bound is skipped when omitted
    :type span: integer
    :param counts: extreme circle counts, computed when omitted
    :type counts: tuple of integers
    :returns: check record
    :rtype: :class:`knotspan.regions.AlternatingCaseCheck`
    """
    counts = counts if counts is not None else extreme_counts(diagram)

    return AlternatingCaseCheck(applicable=decomposition.s == 0, n=diagram.n, k=info.k, circle_number=sum(counts),
                                genus=turaev_genus(diagram, counts), span=span)
