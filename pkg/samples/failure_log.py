#####################################################################
# failure_log.py
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

import logging
import sys

import knotspan.verify


class FailureLog:
    """Event target writing every property failure to a file."""

    def __init__(self, path):
        self.path = path

    def _on_event_diagram_started(self, data):
        logging.getLogger("failure_log").debug("checking %s from %s", data["name"], data["family"])

    def _on_event_property_failed(self, data):
        with open(self.path, "a", encoding="utf-8") as log:
            log.write(f"{data['property']}\t{data['name']}\t{data['pd']}\n")


logging.basicConfig(format='%(asctime)s %(name)s.%(funcName)s: %(message)s', level=logging.INFO)

verifier = knotspan.verify.Verifier(max_crossings=6, corpus_dir="corpus")
verifier.events.add_target(FailureLog("failures.log"))
verifier.events.run_finished += lambda data: print(data["summary"].to_text())

sys.exit(0 if verifier.run().ok else 1)
