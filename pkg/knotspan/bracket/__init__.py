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
"""Kauffman bracket, its degree data and span bounds."""

from .laurent import LaurentPolynomial
from .report import Bound, BoundsReport, BracketReport, LemmaCheck, adequacy, bounds_report, bracket_report, \
    degree_bounds, lemma_recursion_check
from .statesum import DELTA, kauffman_bracket, polynomial_from_tally, skein_check, tally_states

__all__ = ["LaurentPolynomial",
           "Bound", "BoundsReport", "BracketReport", "LemmaCheck", "adequacy", "bounds_report", "bracket_report",
           "degree_bounds", "lemma_recursion_check",
           "DELTA", "kauffman_bracket", "polynomial_from_tally", "skein_check", "tally_states"]
