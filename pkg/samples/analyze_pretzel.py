#####################################################################
# analyze_pretzel.py
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

import code
import logging

import knotspan.analysis
import knotspan.pretzel

logging.basicConfig(format='%(asctime)s %(name)s.%(funcName)s: %(message)s', level=logging.DEBUG)

d = knotspan.pretzel.pretzel(knotspan.pretzel.parse_twists("P(4,-3,3)"))
report = knotspan.analysis.DiagramAnalyzer().analyze(d)

print(report.to_text())

code.interact("diagram and report are available as variables 'd' and 'report'", local=locals())
