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
"""Verification suite over the catalog, a corpus and generated families."""

from .families import catalog_family, corpus_family, families, pretzel_family, switch_family
from .properties import PROPERTIES, Property, Subject
from .propertystatemachine import STATE_FAILED, STATE_PASSED, STATE_UNCHECKED, STATE_VACUOUS, PropertyStateMachine
from .runner import K11N151_PROPERTY, PropertyResult, Verifier, VerifySummary

__all__ = ["catalog_family", "corpus_family", "families", "pretzel_family", "switch_family",
           "PROPERTIES", "Property", "Subject",
           "STATE_FAILED", "STATE_PASSED", "STATE_UNCHECKED", "STATE_VACUOUS", "PropertyStateMachine",
           "K11N151_PROPERTY", "PropertyResult", "Verifier", "VerifySummary"]
