#####################################################################
# families.py
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
"""Diagram families run by the verification suite."""

import itertools
import logging
import pathlib

from ..analysis.catalog import catalog
from ..common.config import K11N151_FILE_NAME, SWITCH_FAMILY_MAX_CROSSINGS
from ..dealternator.info import is_alternating
from ..diagram.faces import is_connected
from ..diagram.operations import switch_crossings
from ..diagram.pd import load_pd
from ..pretzel.pretzel import PretzelSpec, alternating_pretzels, pretzel

logger = logging.getLogger(__name__)

# alternating bases besides the catalog, P(1,2,2) switches give dealternator reduced instances
EXTRA_SWITCH_BASES = (PretzelSpec((1, 2, 2)), PretzelSpec((2, 2, 2)))


def catalog_family(max_crossings):
    """
    Get the catalog diagrams up to a crossing count.

    :param max_crossings: largest number of crossings
    :type max_crossings: integer
    :returns: (name, diagram) pairs
    :rtype: iterator of tuples
    """
    for entry in catalog(include_k11n151=False):
        diagram = entry.diagram
        if diagram.n <= max_crossings:
            yield entry.name, diagram


def corpus_family(corpus_dir, max_crossings):
    """
    Get the ``*.pd`` files of a corpus directory, the K11n151 slot excluded.

    :param corpus_dir: corpus directory, None for no corpus
    :type corpus_dir: string or path-like
    :param max_crossings: largest number of crossings
    :type max_crossings: integer
    :returns: (file name, diagram) pairs
    :rtype: iterator of tuples
    """
    if corpus_dir is None:
        return

    for path in sorted(pathlib.Path(corpus_dir).glob("*.pd")):
        if path.name == K11N151_FILE_NAME:
            continue

        diagram = load_pd(path)
        if diagram.n <= max_crossings:
            yield path.name, diagram
        else:
            logger.info("skipping %s with %d crossings", path.name, diagram.n)


def pretzel_family(max_crossings):
    """
    Get the alternating pretzel diagrams up to a crossing count.

    :param max_crossings: largest number of crossings
    :type max_crossings: integer
    :returns: (name, diagram) pairs
    :rtype: iterator of tuples
    """
    for spec in alternating_pretzels(max_crossings):
        yield str(spec), pretzel(spec)


def switch_family(max_crossings):
    """
    Get every crossing switch of the small alternating bases.

    Bases are the connected alternating catalog diagrams and P(1,2,2),
    P(2,2,2), limited to ``min(max_crossings, 8)`` crossings.

    :param max_crossings: largest number of crossings
    :type max_crossings: integer
    :returns: (name, diagram) pairs
    :rtype: iterator of tuples
    """
    limit = min(max_crossings, SWITCH_FAMILY_MAX_CROSSINGS)

    bases = [(name, diagram) for name, diagram in catalog_family(limit)
             if diagram.n > 0 and is_connected(diagram) and is_alternating(diagram)]
    bases.extend((str(spec), pretzel(spec)) for spec in EXTRA_SWITCH_BASES if spec.n <= limit)

    for name, base in bases:
        for size in range(1, base.n + 1):
            for subset in itertools.combinations(range(base.n), size):
                yield f"{name} switched at {','.join(str(index) for index in subset)}", switch_crossings(base, subset)


def families(max_crossings, corpus_dir=None):
    """
    Get all families in run order.

    :param max_crossings: largest number of crossings
    :type max_crossings: integer
    :param corpus_dir: corpus directory
    :type corpus_dir: string or path-like
    :returns: (family name, generator) pairs
    :rtype: list of tuples
    """
    return [("catalog", catalog_family(max_crossings)),
            ("corpus", corpus_family(corpus_dir, max_crossings)),
            ("alternating pretzels", pretzel_family(max_crossings)),
            ("crossing switches", switch_family(max_crossings))]
