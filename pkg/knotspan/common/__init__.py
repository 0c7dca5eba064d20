#####################################################################
# __init__.py
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
"""Contains helper functions, settings and exceptions."""

from .config import DEFAULT_SKEIN_MAX_CROSSINGS, DEFAULT_SMOOTHING_CAP, DEFAULT_STATE_CAP, DEFAULT_VERIFY_MAX_CROSSINGS, \
    DEFAULT_WORKERS, EXHAUSTIVE_STATE_MAX_CROSSINGS, K11N151_ENVIRONMENT_VARIABLE, K11N151_FILE_NAME, \
    SWITCH_FAMILY_MAX_CROSSINGS
from .events import EventProducer
from .exceptions import CapExceeded, ColoringContradiction, ConstraintContradiction, DisconnectedDiagram, \
    KnotspanError, LabelError, LengthMismatch, PDSyntaxError, PlanarityError, SpecError, ZeroPolynomialError
from .helpers import check_cap, format_fields, indent_block, indent_line


__all__ = ["DEFAULT_SKEIN_MAX_CROSSINGS", "DEFAULT_SMOOTHING_CAP", "DEFAULT_STATE_CAP", "DEFAULT_VERIFY_MAX_CROSSINGS",
           "DEFAULT_WORKERS", "EXHAUSTIVE_STATE_MAX_CROSSINGS", "K11N151_ENVIRONMENT_VARIABLE", "K11N151_FILE_NAME",
           "SWITCH_FAMILY_MAX_CROSSINGS",
           "EventProducer",
           "CapExceeded", "ColoringContradiction", "ConstraintContradiction", "DisconnectedDiagram", "KnotspanError",
           "LabelError", "LengthMismatch", "PDSyntaxError", "PlanarityError", "SpecError", "ZeroPolynomialError",
           "check_cap", "format_fields", "indent_block", "indent_line"]
