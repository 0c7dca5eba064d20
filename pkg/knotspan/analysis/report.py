#####################################################################
# report.py
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
"""Analysis report of a single diagram."""

import dataclasses
import json
import typing

from dataclasses import dataclass

from ..common.helpers import format_fields, indent_block

CHECK_PASS = "pass"
CHECK_FAIL = "fail"
CHECK_NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class AnalysisReport:
    """
    All invariants, bounds and check verdicts of a diagram.

    Fields hold JSON compatible values only, topology fields are ``None``
    for crossingless or disconnected diagrams.
    """

    pd: str
    n: int
    free_loops: int
    is_connected: bool
    sA: int  # noqa: N815
    sB: int  # noqa: N815
    circle_number: int
    k: typing.Optional[int] = None
    dealternators: typing.Optional[typing.List[int]] = None
    tie: typing.Optional[bool] = None
    is_reduced: typing.Optional[bool] = None
    is_alternating: typing.Optional[bool] = None
    is_dealternator_connected: typing.Optional[bool] = None
    is_dealternator_reduced: typing.Optional[bool] = None
    r: typing.Optional[int] = None
    s: typing.Optional[int] = None
    per_region: typing.Optional[typing.List[dict]] = None
    turaev_genus: typing.Optional[int] = None
    surface: typing.Optional[dict] = None
    bracket: typing.Optional[dict] = None
    bounds: typing.Optional[dict] = None
    checks: typing.Dict[str, str] = dataclasses.field(default_factory=dict)

    @property
    def failed_checks(self):
        """Names of the failed checks."""
        return sorted(name for name, verdict in self.checks.items() if verdict == CHECK_FAIL)

    @property
    def ok(self):
        """No check failed."""
        return not self.failed_checks

    def to_dict(self):
        """Get the report as JSON compatible dictionary."""
        return dataclasses.asdict(self)

    def to_json(self, indent=2):
        """
        Serialize the report, maps are written in sorted key order.

        :param indent: JSON indentation
        :type indent: integer
        :returns: JSON text
        :rtype: string
        """
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        """
        Parse a serialized report.

        :param text: JSON text from :meth:`to_json`
        :type text: string
        :returns: report
        :rtype: :class:`knotspan.analysis.AnalysisReport`
        """
        return cls(**json.loads(text))

    def to_text(self):
        """Get a human readable report."""
        fields = [("pd", self.pd), ("crossings", self.n), ("free loops", self.free_loops),
                  ("connected", self.is_connected), ("k", self.k), ("dealternators", self.dealternators),
                  ("tie", self.tie), ("reduced", self.is_reduced), ("alternating", self.is_alternating),
                  ("dealternator connected", self.is_dealternator_connected),
                  ("dealternator reduced", self.is_dealternator_reduced),
                  ("|s_A D|", self.sA), ("|s_B D|", self.sB), ("circle number", self.circle_number),
                  ("r", self.r), ("s", self.s), ("Turaev genus", self.turaev_genus)]
        sections = [format_fields(fields)]

        if self.per_region:
            regions = [f"{region['color']}: {region['faces']} faces, {region['bridges']} bridges, "
                       f"s_i={region['s_i']}" for region in self.per_region]
            sections.append("regions:\n" + indent_block("\n".join(regions)))

        if self.surface:
            sections.append("surface:\n" + format_fields(sorted(self.surface.items()), 2))

        if self.bracket:
            bracket = self.bracket
            sections.append("bracket:\n" + format_fields([
                ("polynomial", bracket["text"]), ("span", bracket["span"]), ("jones span", bracket["jones_span"]),
                ("M", bracket["M"]), ("m", bracket["m"]), ("a_M", bracket["a_M"]), ("a_m", bracket["a_m"]),
                ("A adequate", bracket["A_adequate"]), ("B adequate", bracket["B_adequate"])], 2))

        if self.bounds:
            bound_lines = []
            for name in ("generic", "zhu", "adams"):
                bound = self.bounds[name]
                verdict = "n/a" if not bound["applicable"] else ("ok" if bound["satisfied"] else "VIOLATED")
                bound_lines.append((name, f"{bound['value']} ({verdict})"))
            bound_lines.append(("region estimate", f"{self.bounds['region_estimate']}"
                                f"{' (exceeded)' if self.bounds['region_estimate_exceeded'] else ''}"))
            sections.append(f"bounds (span {self.bounds['span']}):\n" + format_fields(bound_lines, 2))

        if self.checks:
            sections.append("checks:\n" + format_fields(sorted(self.checks.items()), 2))

        return "\n".join(sections)
