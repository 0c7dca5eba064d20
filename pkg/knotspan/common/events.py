#####################################################################
# events.py
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
"""Event publishing for long running computations."""


class Event:
    """Callbacks registered for a single event."""

    def __init__(self):
        """Initialize the event class."""
        self._callbacks = []

    def __iadd__(self, other):
        """Add a new callback to event."""
        self._callbacks.append(other)
        return self

    def __isub__(self, other):
        """Remove a callback from event."""
        self._callbacks.remove(other)
        return self

    def __call__(self, data):
        """Raise the event and call all callbacks."""
        for callback in self._callbacks:
            callback(data)

    def __len__(self):
        """Return the number of callbacks."""
        return len(self._callbacks)

    def __repr__(self):
        """Generate representation for an object."""
        return f"{self.__class__.__name__}: {self._callbacks}"


class EventProducer:
    """
    Manages the consumers for the events and handles firing events.

    Consumers either subscribe a callable to a named event::

        producer.diagram_started += print

    or register a target object, which receives ``_on_event(name, data)`` and
    ``_on_event_<name>(data)`` calls when those methods exist.
    """

    def __init__(self):
        """Initialize the event producer class."""
        self._targets = []
        self._events = {}

    def __getattr__(self, name):
        """Get an event as member of the EventProducer object."""
        if name.startswith("_"):
            raise AttributeError(name)

        if name not in self._events:
            self._events[name] = Event()

        return self._events[name]

    def __setattr__(self, name, value):
        """Accept the in-place result of ``producer.event += callback``."""
        if not name.startswith("_") and isinstance(value, Event):
            self._events[name] = value
            return

        super().__setattr__(name, value)

    def fire(self, event, data):
        """
        Fire an event.

        Calls the generic and specific handler of every target, then every
        subscribed callback.

        :param event: name of the event
        :type event: string
        :param data: data connected to this event
        :type data: dict
        """
        for target in list(self._targets):
            generic_handler = getattr(target, "_on_event", None)
            if callable(generic_handler):
                generic_handler(event, data)

            specific_handler = getattr(target, "_on_event_" + event, None)
            if callable(specific_handler):
                specific_handler(data)

        if event in self._events:
            self._events[event](data)

    def add_target(self, target):
        """
        Register an object as consumer for all events.

        :param target: object implementing ``_on_event`` or ``_on_event_<name>`` methods
        :type target: object
        """
        self._targets.append(target)

    def remove_target(self, target):
        """
        Unregister a consumer object.

        :param target: previously registered object
        :type target: object
        """
        self._targets.remove(target)

    @property
    def targets(self):
        """Targets used as consumer for this producer."""
        return tuple(self._targets)

    def __iter__(self):
        """Iterate the names of events that have subscribers."""
        return iter([name for name, event in self._events.items() if len(event) > 0])

    def __repr__(self):
        """Generate representation for an object."""
        return f"{self.__class__.__name__}: {self._events}"
