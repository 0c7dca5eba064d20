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
"""Command line interface."""

from .main import EXIT_CAP_EXCEEDED, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, build_parser, main

__all__ = ["EXIT_CAP_EXCEEDED", "EXIT_CHECK_FAILED", "EXIT_INPUT_ERROR", "EXIT_OK", "build_parser", "main"]
