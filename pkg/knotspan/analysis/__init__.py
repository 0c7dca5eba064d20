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
"""Analysis of diagrams and the built-in catalog."""

from .analyzer import DiagramAnalyzer
from .catalog import CatalogEntry, catalog, catalog_entry, find_k11n151
from .report import CHECK_FAIL, CHECK_NOT_APPLICABLE, CHECK_PASS, AnalysisReport

__all__ = ["DiagramAnalyzer", "CatalogEntry", "catalog", "catalog_entry", "find_k11n151",
           "CHECK_FAIL", "CHECK_NOT_APPLICABLE", "CHECK_PASS", "AnalysisReport"]
