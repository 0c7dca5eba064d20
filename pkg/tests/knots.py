#####################################################################
# knots.py
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
"""PD codes shared by the tests."""

import knotspan.diagram
import knotspan.pretzel

UNKNOT_LOOP = "loops=1"
CURL = "X[1,1,2,2]"
TWO_CURLS = "X[1,1,2,2] X[3,3,4,4]"
HOPF = "X[4,1,3,2] X[2,3,1,4]"
SWITCHED_HOPF = "X[4,1,3,2] X[3,1,4,2]"
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
SWITCHED_TREFOIL = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


def diagram(text):
    return knotspan.diagram.parse_pd(text)


def pretzel(*twists):
    return knotspan.pretzel.pretzel(knotspan.pretzel.PretzelSpec(twists))
