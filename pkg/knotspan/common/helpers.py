#####################################################################
# helpers.py
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
"""Contains helper functions."""

from .exceptions import CapExceeded


def indent_line(line, spaces=2):
    """
    Indent line by a number of spaces.

    :param line: input text
    :type line: string
    :param spaces: number of spaces to prepend
    :type spaces: integer
    :returns: indented text
    :rtype: string
    """
    return (' ' * spaces) + line


def indent_block(block, spaces=2):
    """
    Indent a multiline string by a number of spaces, dropping empty lines.

    **Example**::

        >>> import knotspan.common
        >>>
        >>> knotspan.common.indent_block("n: 3\\nk: 0")
        '  n: 3\\n  k: 0'

    :param block: input text
    :type block: string
    :param spaces: number of spaces to prepend to each line
    :type spaces: integer
    :returns: indented text
    :rtype: string
    """
    return '\n'.join(indent_line(line, spaces) for line in block.split('\n') if line)


def format_fields(fields, spaces=0):
    """
    Format name/value pairs as aligned ``name: value`` lines.

    ``None`` values are rendered as ``n/a``.

    :param fields: pairs of field name and value
    :type fields: list of (string, various)
    :param spaces: indentation of every line
    :type spaces: integer
    :returns: formatted text
    :rtype: string
    """
    if not fields:
        return ""

    width = max(len(name) for name, _ in fields)
    lines = [f"{name + ':':<{width + 1}} {'n/a' if value is None else value}" for name, value in fields]
    return indent_block('\n'.join(lines), spaces)


def check_cap(what, requested, cap):
    """
    Raise :class:`CapExceeded` when an exponential enumeration would pass its cap.

    :param what: name of the enumeration
    :type what: string
    :param requested: exponent of the enumeration (crossings or dealternators)
    :type requested: integer
    :param cap: configured maximum exponent, ``None`` disables the check
    :type cap: integer
    """
    if cap is not None and requested > cap:
        raise CapExceeded(what, requested, cap)
