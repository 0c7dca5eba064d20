#####################################################################
# propertystatemachine.py
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
"""Contains the state machine tracking one verified property."""

from transitions import Machine

STATE_UNCHECKED = "UNCHECKED"
STATE_PASSED = "PASSED"
STATE_FAILED = "FAILED"
STATE_VACUOUS = "VACUOUS"


class PropertyStateMachine:
    """
    Verdict of a property over a verification run.

    A property starts UNCHECKED, an applicable instance moves it to PASSED,
    a counterexample to FAILED, which is absorbing. Finalizing an unchecked
    property makes it VACUOUS.
    """

    def __init__(self, name, requires_instance=False, callbacks=None):
        """
        Initialize the property state machine.

        :param name: property name
        :type name: string
        :param requires_instance: a vacuous run counts as failure
        :type requires_instance: boolean
        :param callbacks: callbacks for the state machine
        :type callbacks: dict
        """
        self.name = name
        self.requires_instance = requires_instance
        self.callbacks = callbacks or {}

        self.pass_count = 0
        self.fail_count = 0
        self.first_failure = None

        self.states = [STATE_UNCHECKED,
                       STATE_PASSED,
                       {
                           'name': STATE_FAILED,
                           'on_enter': self._on_enter_FAILED
                       },
                       {
                           'name': STATE_VACUOUS,
                           'on_enter': self._on_enter_VACUOUS
                       }]

        self.machine = Machine(model=self, states=self.states, initial=STATE_UNCHECKED, auto_transitions=False)

        self.machine.add_transition('passed', STATE_UNCHECKED, STATE_PASSED)
        self.machine.add_transition('passed', [STATE_PASSED, STATE_FAILED], None)
        self.machine.add_transition('failed', [STATE_UNCHECKED, STATE_PASSED], STATE_FAILED)
        self.machine.add_transition('failed', STATE_FAILED, None)
        self.machine.add_transition('finalize', STATE_UNCHECKED, STATE_VACUOUS)
        self.machine.add_transition('finalize', [STATE_PASSED, STATE_FAILED], None)

    def record(self, outcome, subject=None):
        """
        Record the outcome of the property on one diagram.

        :param outcome: True for pass, False for a counterexample, None when not applicable
        :type outcome: boolean
        :param subject: description of the diagram (name and PD text) kept for the first failure
        :type subject: string
        """
        if outcome is None:
            return

        if outcome:
            self.pass_count += 1
            self.passed()
            return

        self.fail_count += 1
        if self.first_failure is None:
            self.first_failure = subject
        self.failed()

    @property
    def ok(self):
        """True unless failed or vacuous although an instance is required."""
        if self.state == STATE_FAILED:
            return False

        return not (self.state == STATE_VACUOUS and self.requires_instance)

    def _on_enter_FAILED(self):
        if "on_enter_FAILED" in self.callbacks:
            self.callbacks["on_enter_FAILED"](self)

    def _on_enter_VACUOUS(self):
        if "on_enter_VACUOUS" in self.callbacks:
            self.callbacks["on_enter_VACUOUS"](self)
