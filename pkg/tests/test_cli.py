#####################################################################
# test_cli.py
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

import io
import json
import os
import pathlib
import tempfile
import unittest
import unittest.mock

import knotspan.cli
import knotspan.common

from knots import TREFOIL, pretzel


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.stderr = io.StringIO()
        patcher = unittest.mock.patch("sys.stderr", self.stderr)
        patcher.start()
        self.addCleanup(patcher.stop)

        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def run_cli(self, *argv):
        out = io.StringIO()
        code = knotspan.cli.main(list(argv), out=out)

        return code, out.getvalue()

    def write_pd(self, name, text):
        path = pathlib.Path(self.directory.name, name)
        path.write_text(text + "\n")

        return str(path)


class TestAnalyze(CliTestCase):
    def testText(self):
        code, output = self.run_cli("analyze", self.write_pd("trefoil.pd", TREFOIL))

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertIn("circle number", output)

    def testJson(self):
        code, output = self.run_cli("analyze", "--json", self.write_pd("trefoil.pd", TREFOIL))
        report = json.loads(output)

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(report["circle_number"], 5)
        self.assertEqual(report["bracket"]["span"], 12)
        self.assertEqual(report["checks"]["theorem_rk"], "pass")

    def testStandardInput(self):
        with unittest.mock.patch("sys.stdin", io.StringIO(TREFOIL)):
            code, output = self.run_cli("analyze", "--json")

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(json.loads(output)["n"], 3)

    def testNoBracket(self):
        code, output = self.run_cli("analyze", "--json", "--no-bracket", self.write_pd("trefoil.pd", TREFOIL))

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertIsNone(json.loads(output)["bracket"])

    def testInvalidPd(self):
        code, output = self.run_cli("analyze", self.write_pd("bad.pd", "X[1,2,3]"))

        self.assertEqual(code, knotspan.cli.EXIT_INPUT_ERROR)
        self.assertEqual(output, "")
        self.assertIn("error:", self.stderr.getvalue())

    def testMissingFile(self):
        code, _ = self.run_cli("analyze", str(pathlib.Path(self.directory.name, "missing.pd")))

        self.assertEqual(code, knotspan.cli.EXIT_INPUT_ERROR)

    def testInvalidEncoding(self):
        path = pathlib.Path(self.directory.name, "latin1.pd")
        path.write_bytes(b"# caf\xe9\nX[1,1,2,2]\n")

        code, output = self.run_cli("analyze", str(path))

        self.assertEqual(code, knotspan.cli.EXIT_INPUT_ERROR)
        self.assertEqual(output, "")
        self.assertIn("error:", self.stderr.getvalue())

    def testStateCap(self):
        path = self.write_pd("pretzel.pd", str(pretzel(4, -3, 3)))

        code, _ = self.run_cli("analyze", "--state-cap", "5", path)

        self.assertEqual(code, knotspan.cli.EXIT_CAP_EXCEEDED)
        self.assertIn("cap", self.stderr.getvalue())


class TestPretzel(CliTestCase):
    def testPd(self):
        code, output = self.run_cli("pretzel", "1,1")

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(output, "X[4,3,1,2] X[3,4,2,1]\n")

    def testJson(self):
        code, output = self.run_cli("pretzel", "--json", "4,-3,3")

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(json.loads(output)["n"], 10)

    def testAnalyze(self):
        code, output = self.run_cli("pretzel", "--analyze", "--json", "P(-1,2,2)")
        report = json.loads(output)

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(report["dealternators"], [0])
        self.assertTrue(report["is_dealternator_reduced"])

    def testInvalid(self):
        code, _ = self.run_cli("pretzel", "1,0")

        self.assertEqual(code, knotspan.cli.EXIT_INPUT_ERROR)


class TestCatalog(CliTestCase):
    def setUp(self):
        super().setUp()

        patcher = unittest.mock.patch.dict(os.environ)
        patcher.start()
        self.addCleanup(patcher.stop)
        os.environ.pop(knotspan.common.K11N151_ENVIRONMENT_VARIABLE, None)

    def testList(self):
        code, output = self.run_cli("catalog")

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(len(output.splitlines()), 10)
        self.assertTrue(output.startswith("unknot-loop"))

    def testName(self):
        code, output = self.run_cli("catalog", "--name", "trefoil")

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(output, TREFOIL + "\n")

    def testUnknownName(self):
        code, _ = self.run_cli("catalog", "--name", "k11n151")

        self.assertEqual(code, knotspan.cli.EXIT_INPUT_ERROR)

    def testCorpusK11n151(self):
        self.write_pd("k11n151.pd", TREFOIL)

        code, output = self.run_cli("catalog", "--json", "--name", "k11n151", "--corpus", self.directory.name)

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertEqual(json.loads(output)[0]["pd"], TREFOIL)


class TestVerify(CliTestCase):
    def setUp(self):
        super().setUp()

        patcher = unittest.mock.patch.dict(os.environ)
        patcher.start()
        self.addCleanup(patcher.stop)
        os.environ.pop(knotspan.common.K11N151_ENVIRONMENT_VARIABLE, None)

    def testVacuousFails(self):
        code, output = self.run_cli("verify", "--max-crossings", "2")

        self.assertEqual(code, knotspan.cli.EXIT_CHECK_FAILED)
        self.assertIn("adams_bound", output)

    def testJson(self):
        code, output = self.run_cli("verify", "--json", "--max-crossings", "5")
        summary = json.loads(output)

        self.assertEqual(code, knotspan.cli.EXIT_OK)
        self.assertTrue(summary["ok"])
        self.assertGreater(summary["diagrams"], 0)
        self.assertEqual([result["name"] for result in summary["properties"] if result["failures"]], [])
        self.assertEqual(self.stderr.getvalue().count("FAILED"), 0)


class TestUsage(CliTestCase):
    def testUnknownOption(self):
        with self.assertRaises(SystemExit) as context:
            self.run_cli("analyze", "--bogus")

        self.assertEqual(context.exception.code, knotspan.cli.EXIT_INPUT_ERROR)
        self.assertIn("unrecognized arguments", self.stderr.getvalue())

    def testMissingCommand(self):
        with self.assertRaises(SystemExit) as context:
            self.run_cli()

        self.assertEqual(context.exception.code, knotspan.cli.EXIT_INPUT_ERROR)

    def testBadNumber(self):
        with self.assertRaises(SystemExit) as context:
            self.run_cli("verify", "--max-crossings", "many")

        self.assertEqual(context.exception.code, knotspan.cli.EXIT_INPUT_ERROR)

    def testHelpExitsCleanly(self):
        with unittest.mock.patch("sys.stdout", io.StringIO()), self.assertRaises(SystemExit) as context:
            self.run_cli("--help")

        self.assertEqual(context.exception.code, 0)
