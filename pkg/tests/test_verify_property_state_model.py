#####################################################################
# test_verify_property_state_model.py
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
import unittest.mock

from transitions import MachineError

import knotspan.verify


class TestPropertyStateMachine(unittest.TestCase):
    def setUp(self):
        self.model = knotspan.verify.PropertyStateMachine("skein")

    def testInitialState(self):
        self.assertEqual(self.model.state, knotspan.verify.STATE_UNCHECKED)

    def testPass(self):
        self.model.record(True, "trefoil")

        self.assertEqual(self.model.state, knotspan.verify.STATE_PASSED)
        self.assertEqual(self.model.pass_count, 1)
        self.assertTrue(self.model.ok)

    def testNotApplicable(self):
        self.model.record(None, "trefoil")

        self.assertEqual(self.model.state, knotspan.verify.STATE_UNCHECKED)
        self.assertEqual(self.model.pass_count, 0)

    def testFailAfterPass(self):
        self.model.record(True, "trefoil")
        self.model.record(False, "curl")

        self.assertEqual(self.model.state, knotspan.verify.STATE_FAILED)
        self.assertEqual(self.model.first_failure, "curl")
        self.assertFalse(self.model.ok)

    def testFailedIsAbsorbing(self):
        self.model.record(False, "curl")
        self.model.record(True, "trefoil")
        self.model.record(False, "hopf")
        self.model.finalize()

        self.assertEqual(self.model.state, knotspan.verify.STATE_FAILED)
        self.assertEqual((self.model.pass_count, self.model.fail_count), (1, 2))
        self.assertEqual(self.model.first_failure, "curl")

    def testFinalizePassed(self):
        self.model.record(True, "trefoil")
        self.model.finalize()

        self.assertEqual(self.model.state, knotspan.verify.STATE_PASSED)

    def testVacuous(self):
        self.model.finalize()

        self.assertEqual(self.model.state, knotspan.verify.STATE_VACUOUS)
        self.assertTrue(self.model.ok)

    def testVacuousRequiringInstance(self):
        model = knotspan.verify.PropertyStateMachine("adams_bound", requires_instance=True)
        model.finalize()

        self.assertFalse(model.ok)

    def testRecordAfterVacuous(self):
        self.model.finalize()

        with self.assertRaises(MachineError):
            self.model.record(True, "trefoil")

    def testCallbacks(self):
        on_failed = unittest.mock.Mock()
        on_vacuous = unittest.mock.Mock()
        callbacks = {"on_enter_FAILED": on_failed, "on_enter_VACUOUS": on_vacuous}

        failing = knotspan.verify.PropertyStateMachine("skein", callbacks=callbacks)
        failing.record(False, "curl")
        failing.record(False, "hopf")

        vacuous = knotspan.verify.PropertyStateMachine("lemma_recursion", callbacks=callbacks)
        vacuous.finalize()

        on_failed.assert_called_once_with(failing)
        on_vacuous.assert_called_once_with(vacuous)
