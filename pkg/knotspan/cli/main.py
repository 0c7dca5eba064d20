#####################################################################
# main.py
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

import argparse
import json
import logging
import sys

from ..analysis.analyzer import DiagramAnalyzer
from ..analysis.catalog import catalog
from ..common.config import DEFAULT_STATE_CAP, DEFAULT_VERIFY_MAX_CROSSINGS, DEFAULT_WORKERS
from ..common.exceptions import CapExceeded, KnotspanError
from ..diagram.pd import parse_pd, to_pd
from ..pretzel.pretzel import parse_twists, pretzel
from ..verify.runner import Verifier

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CAP_EXCEEDED = 2
EXIT_CHECK_FAILED = 3

LOG_FORMAT = '%(asctime)s %(name)s.%(funcName)s: %(message)s'


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors with the invalid input exit code."""

    def error(self, message):
        """Print usage and message, exit with :data:`EXIT_INPUT_ERROR`."""
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _read_source(path):
    if path in (None, "-"):
        return sys.stdin.read()

    with open(path, "r", encoding="utf-8") as source:
        return source.read()


def _emit_report(report, as_json, out):
    out.write((report.to_json() if as_json else report.to_text()) + "\n")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _analyzer(args):
    return DiagramAnalyzer(state_cap=args.state_cap, workers=args.workers, compute_bracket=not args.no_bracket)


def cmd_analyze(args, out):
    """Analyze a PD file or standard input."""
    diagram = parse_pd(_read_source(args.path))
    return _emit_report(_analyzer(args).analyze(diagram), args.json, out)


def cmd_pretzel(args, out):
    """Generate a pretzel diagram, optionally analyzing it."""
    diagram = pretzel(parse_twists(args.twists))
    if not args.analyze:
        if args.json:
            out.write(json.dumps({"spec": args.twists, "pd": to_pd(diagram), "n": diagram.n}, sort_keys=True) + "\n")
        else:
            out.write(to_pd(diagram) + "\n")
        return EXIT_OK

    return _emit_report(_analyzer(args).analyze(diagram), args.json, out)


def cmd_catalog(args, out):
    """List the built-in diagrams."""
    entries = catalog(args.corpus)
    if args.name is not None:
        entries = [entry for entry in entries if entry.name == args.name]
        if not entries:
            raise KeyError(f"no catalog entry named {args.name!r}")

    if args.json:
        out.write(json.dumps([{"name": entry.name, "pd": entry.pd, "description": entry.description}
                              for entry in entries], indent=2, sort_keys=True) + "\n")
    elif args.name is not None:
        out.write(entries[0].pd + "\n")
    else:
        width = max(len(entry.name) for entry in entries)
        for entry in entries:
            out.write(f"{entry.name:<{width}}  {entry.pd}\n")

    return EXIT_OK


def cmd_verify(args, out):
    """Run the verification suite."""
    verifier = Verifier(max_crossings=args.max_crossings, state_cap=args.state_cap, workers=args.workers,
                        corpus_dir=args.corpus)

    def print_failure(data):
        sys.stderr.write(f"FAILED {data['property']} on {data['name']}: {data['pd']}\n")

    verifier.events.property_failed += print_failure
    summary = verifier.run()

    out.write((json.dumps(summary.to_dict(), indent=2, sort_keys=True) if args.json else summary.to_text()) + "\n")

    return EXIT_OK if summary.ok else EXIT_CHECK_FAILED


def build_parser():
    """
    Build the argument parser.

    :returns: parser with the analyze, pretzel, verify and catalog commands
    :rtype: :class:`argparse.ArgumentParser`
    """
    parser = ArgumentParser(prog="knotspan",
                            description="Extreme state circle numbers and Kauffman bracket spans of "
                                        "link diagrams")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_computation_options(command):
        command.add_argument("--json", action="store_true", help="Emit a JSON report")
        command.add_argument("--no-bracket", action="store_true", help="Skip the Kauffman bracket")
        command.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP,
                             help=f"Maximum crossings for the state sum (default: {DEFAULT_STATE_CAP})")
        command.add_argument("--workers", type=int, default=DEFAULT_WORKERS,
                             help=f"Worker processes for the state sum (default: {DEFAULT_WORKERS})")

    command = sub.add_parser("analyze", help="Analyze a PD coded diagram")
    command.add_argument("path", nargs="?", default="-", help="PD file, '-' for standard input (default)")
    add_computation_options(command)
    command.set_defaults(func=cmd_analyze)

    command = sub.add_parser("pretzel", help="Generate a pretzel diagram")
    command.add_argument("twists", help="Comma separated twist counts, e.g. 4,-3,3")
    command.add_argument("--analyze", action="store_true", help="Analyze the generated diagram")
    add_computation_options(command)
    command.set_defaults(func=cmd_pretzel)

    command = sub.add_parser("verify", help="Run the verification suite")
    command.add_argument("--corpus", help="Directory with additional *.pd files")
    command.add_argument("--max-crossings", type=int, default=DEFAULT_VERIFY_MAX_CROSSINGS,
                         help=f"Largest diagram checked (default: {DEFAULT_VERIFY_MAX_CROSSINGS})")
    command.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP,
                         help=f"Maximum crossings for the state sum (default: {DEFAULT_STATE_CAP})")
    command.add_argument("--workers", type=int, default=DEFAULT_WORKERS,
                         help=f"Worker processes for the state sum (default: {DEFAULT_WORKERS})")
    command.add_argument("--json", action="store_true", help="Emit a JSON summary")
    command.set_defaults(func=cmd_verify)

    command = sub.add_parser("catalog", help="List the built-in diagrams")
    command.add_argument("--name", help="Print the PD text of one entry")
    command.add_argument("--corpus", help="Directory searched for k11n151.pd")
    command.add_argument("--json", action="store_true", help="Emit JSON")
    command.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None, out=None):
    """
    Run the command line interface.

    :param argv: arguments, ``sys.argv[1:]`` when omitted
    :type argv: list of strings
    :param out: output stream, standard output when omitted
    :type out: file-like
    :returns: exit code, 0 ok, 1 invalid input, 2 cap exceeded, 3 check failed
    :rtype: integer
    """
    args = build_parser().parse_args(argv)
    out = out or sys.stdout

    logging.basicConfig(format=LOG_FORMAT, level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        return args.func(args, out)
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc} (raise --state-cap or use --no-bracket)\n")
        return EXIT_CAP_EXCEEDED
    except (KnotspanError, KeyError, OSError, UnicodeDecodeError) as exc:
        logger.debug("input rejected", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
