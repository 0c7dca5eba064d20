#####################################################################
# catalog.py
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
"""Built-in named diagrams."""

import logging
import os
import pathlib
import typing

from dataclasses import dataclass

from ..common.config import K11N151_ENVIRONMENT_VARIABLE, K11N151_FILE_NAME
from ..diagram.pd import load_pd, parse_pd, to_pd
from ..pretzel.pretzel import PretzelSpec, pretzel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    """Named diagram with a short description."""

    name: str
    pd: str
    description: str

    @property
    def diagram(self):
        """Parsed diagram."""
        return parse_pd(self.pd)


def _pretzel_pd(*twists):
    return to_pd(pretzel(PretzelSpec(twists)))


_ENTRIES = (
    ("unknot-loop", "loops=1", "crossingless unknot"),
    ("curl", "X[1,1,2,2]", "single nugatory crossing"),
    ("hopf", "X[4,1,3,2] X[2,3,1,4]", "alternating Hopf link"),
    ("trefoil", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "alternating trefoil"),
    ("figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", "alternating figure-eight knot"),
    ("pretzel-2-2", _pretzel_pd(2, 2), "alternating pretzel P(2,2)"),
    ("P(3,3,3)", _pretzel_pd(3, 3, 3), "alternating pretzel knot"),
    ("P(4,-3,3)", _pretzel_pd(4, -3, 3), "3-almost alternating pretzel, not dealternator connected"),
    ("switched-trefoil", "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]", "trefoil with crossing 0 switched, k = 1"),
    ("almost-alternating-pretzel", _pretzel_pd(-1, 2, 2),
     "P(-1,2,2), dealternator connected and dealternator reduced with k = 1"),
)


def find_k11n151(corpus_dir=None):
    """
    Locate the optional user supplied K11n151 PD file.

    The environment variable ``KNOTSPAN_K11N151_PD`` wins over a file named
    ``k11n151.pd`` in the corpus directory.

    :param corpus_dir: corpus directory
    :type corpus_dir: string or path-like
    :returns: path of an existing file or None
    :rtype: :class:`pathlib.Path`
    """
    candidates = []
    if os.environ.get(K11N151_ENVIRONMENT_VARIABLE):
        candidates.append(pathlib.Path(os.environ[K11N151_ENVIRONMENT_VARIABLE]))

    if corpus_dir is not None:
        candidates.append(pathlib.Path(corpus_dir) / K11N151_FILE_NAME)

    for candidate in candidates:
        if candidate.is_file():
            return candidate

    return None


def catalog(corpus_dir=None, include_k11n151=True) -> typing.List[CatalogEntry]:
    """
    Get the built-in diagrams.

    **Example**::

        >>> import knotspan.analysis
        >>> [entry.name for entry in knotspan.analysis.catalog()][:3]
        ['unknot-loop', 'curl', 'hopf']

    :param corpus_dir: directory searched for ``k11n151.pd``
    :type corpus_dir: string or path-like
    :param include_k11n151: add the ``k11n151`` slot when its file is found
    :type include_k11n151: boolean
    :returns: catalog entries
    :rtype: list of :class:`knotspan.analysis.CatalogEntry`
    """
    entries = [CatalogEntry(name, pd, description) for name, pd, description in _ENTRIES]

    if include_k11n151:
        path = find_k11n151(corpus_dir)
        if path is not None:
            entries.append(CatalogEntry("k11n151", to_pd(load_pd(path)), f"user supplied K11n151 from {path}"))

    return entries


def catalog_entry(name, corpus_dir=None):
    """
    Get a catalog entry by name.

    :param name: entry name
    :type name: string
    :param corpus_dir: directory searched for ``k11n151.pd``
    :type corpus_dir: string or path-like
    :returns: entry
    :rtype: :class:`knotspan.analysis.CatalogEntry`
    """
    for entry in catalog(corpus_dir):
        if entry.name == name:
            return entry

    raise KeyError(f"no catalog entry named {name!r}")
