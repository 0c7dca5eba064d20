#####################################################################
# runner.py
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
"""Verification runner."""

import dataclasses
import datetime
import logging
import typing

from dataclasses import dataclass

import dateutil.tz

from ..analysis.analyzer import DiagramAnalyzer
from ..analysis.catalog import find_k11n151
from ..common.config import DEFAULT_STATE_CAP, DEFAULT_VERIFY_MAX_CROSSINGS, DEFAULT_WORKERS
from ..common.events import EventProducer
from ..diagram.pd import load_pd, to_pd
from .families import families
from .properties import PROPERTIES, Subject
from .propertystatemachine import STATE_VACUOUS, PropertyStateMachine

K11N151_PROPERTY = "k11n151_region_estimate"


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property over a run."""

    name: str
    state: str
    passes: int
    failures: int
    requires_instance: bool
    first_failure: typing.Optional[str]
    ok: bool

    def to_dict(self):
        """Get the result as JSON compatible dictionary."""
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class VerifySummary:
    """Outcome of a verification run."""

    started: str
    finished: str
    diagrams: int
    properties: typing.Tuple[PropertyResult, ...]
    notices: typing.Tuple[str, ...]

    @property
    def ok(self):
        """No property failed."""
        return all(result.ok for result in self.properties)

    def result(self, name):
        """Get the result of a property by name."""
        for result in self.properties:
            if result.name == name:
                return result

        raise KeyError(name)

    def to_dict(self):
        """Get the summary as JSON compatible dictionary."""
        return {"started": self.started, "finished": self.finished, "diagrams": self.diagrams, "ok": self.ok,
                "properties": [result.to_dict() for result in self.properties], "notices": list(self.notices)}

    def to_text(self):
        """Get a human readable summary."""
        width = max(len(result.name) for result in self.properties)
        lines = [f"verification {self.started} .. {self.finished}, {self.diagrams} diagrams"]
        for result in self.properties:
            lines.append(f"{result.name:<{width}}  {result.state:<9} {result.passes:>5} passed "
                         f"{result.failures:>3} failed{'' if result.ok else '  <-- FAIL'}")
            if result.first_failure:
                lines.append(f"{'':<{width}}  first failure: {result.first_failure}")

        lines.extend(f"notice: {notice}" for notice in self.notices)
        lines.append("OK" if self.ok else "FAILED")

        return "\n".join(lines)


def _now():
    return datetime.datetime.now(dateutil.tz.tzlocal()).isoformat(timespec="seconds")


class Verifier:
    """
    Runs every property over the diagram families.

    Events published through :attr:`events`:

    - ``diagram_started``: ``{"family", "name", "pd"}``
    - ``property_failed``: ``{"property", "name", "pd"}``
    - ``run_finished``: ``{"summary"}``

    :param max_crossings: largest diagram checked
    :type max_crossings: integer
    :param state_cap: maximum number of crossings for state sums
    :type state_cap: integer
    :param workers: number of worker processes for the state sum
    :type workers: integer
    :param corpus_dir: directory with additional ``*.pd`` files
    :type corpus_dir: string or path-like
    """

    def __init__(self, max_crossings=DEFAULT_VERIFY_MAX_CROSSINGS, state_cap=DEFAULT_STATE_CAP,
                 workers=DEFAULT_WORKERS, corpus_dir=None):
        """Initialize the runner."""
        self.logger = logging.getLogger(self.__module__ + "." + self.__class__.__name__)

        self.max_crossings = max_crossings
        self.state_cap = state_cap
        self.corpus_dir = corpus_dir
        self.analyzer = DiagramAnalyzer(state_cap=state_cap, workers=workers)

        self.events = EventProducer()

        self._subject = None

    def _on_enter_FAILED(self, model):
        self.logger.info("property %s failed first on %s", model.name, self._subject)

    def _on_enter_VACUOUS(self, model):
        if model.requires_instance:
            self.logger.warning("property %s had no applicable diagram", model.name)

    def _models(self):
        callbacks = {"on_enter_FAILED": self._on_enter_FAILED, "on_enter_VACUOUS": self._on_enter_VACUOUS}

        models = [(prop, PropertyStateMachine(prop.name, prop.requires_instance, callbacks)) for prop in PROPERTIES]
        k11n151_model = PropertyStateMachine(K11N151_PROPERTY, False, callbacks)

        return models, k11n151_model

    def _check(self, family, name, diagram, models):
        self.events.fire("diagram_started", {"family": family, "name": name, "pd": to_pd(diagram)})

        report = self.analyzer.analyze(diagram)
        subject = Subject(name, diagram, report, self.state_cap)
        self._subject = subject

        for prop, model in models:
            outcome = prop.check(subject)
            model.record(outcome, str(subject))

            if outcome is False:
                self.events.fire("property_failed", {"property": prop.name, "name": name, "pd": report.pd})

    def _check_k11n151(self, model, notices):
        path = find_k11n151(self.corpus_dir)
        if path is None:
            notice = "K11n151 PD file not found, region estimate check skipped " \
                     "(set KNOTSPAN_K11N151_PD or add k11n151.pd to the corpus)"
            self.logger.warning(notice)
            notices.append(notice)
            return 0

        diagram = load_pd(path)
        analyzer = DiagramAnalyzer(state_cap=self.state_cap, workers=self.analyzer.workers, skein_max_crossings=0)
        report = analyzer.analyze(diagram)
        self._subject = f"k11n151: {report.pd}"

        exceeded = report.bounds is not None and report.bounds["region_estimate_exceeded"]
        model.record(exceeded, self._subject)
        if not exceeded:
            self.events.fire("property_failed", {"property": K11N151_PROPERTY, "name": "k11n151", "pd": report.pd})

        return 1

    def run(self):
        """
        Run the verification.

        :returns: summary of all properties
        :rtype: :class:`knotspan.verify.VerifySummary`
        """
        started = _now()
        models, k11n151_model = self._models()
        notices = []

        count = 0
        for family, diagrams in families(self.max_crossings, self.corpus_dir):
            family_count = 0
            for name, diagram in diagrams:
                self._check(family, name, diagram, models)
                family_count += 1

            self.logger.info("family %s: %d diagrams", family, family_count)
            count += family_count

        count += self._check_k11n151(k11n151_model, notices)

        results = []
        for model in [model for _, model in models] + [k11n151_model]:
            model.finalize()
            if model.state == STATE_VACUOUS and model.requires_instance:
                notices.append(f"property {model.name} is vacuous, no diagram satisfied its hypotheses")

            results.append(PropertyResult(name=model.name, state=model.state, passes=model.pass_count,
                                          failures=model.fail_count, requires_instance=model.requires_instance,
                                          first_failure=model.first_failure, ok=model.ok))

        summary = VerifySummary(started=started, finished=_now(), diagrams=count, properties=tuple(results),
                                notices=tuple(notices))
        self.logger.info("verification finished, %d diagrams, ok %s", count, summary.ok)
        self.events.fire("run_finished", {"summary": summary})

        return summary
