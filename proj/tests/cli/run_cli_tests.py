# Copyright 2026 The epiihs Authors
# SPDX-License-Identifier: Apache-2.0
"""End-to-end checks of the epiihs command line: outputs, exit codes, schema."""

import json
import math
import os
import subprocess
import sys
import unittest

import jsonschema

CLI = os.environ["EPIIHS_CLI"]
with open(os.environ["EPIIHS_SCHEMA"], encoding="utf-8") as fh:
    SCHEMA = json.load(fh)


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env,
                          timeout=120, check=False)
    report = None
    if proc.stdout.strip():
        report = json.loads(proc.stdout)
        jsonschema.validate(report, SCHEMA)
    return proc.returncode, report, proc.stderr


class SumCommand(unittest.TestCase):
    def test_brute_rational(self):
        code, report, _ = run("sum", "-a", "2", "-k", "2", "-N", "2", "--method", "brute")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"], {"type": "rational", "value": "21/16"})

    def test_infinite_is_zeta(self):
        code, report, _ = run("sum", "-a", "2", "-k", "1", "-N", "inf")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["type"], "float")
        self.assertAlmostEqual(report["result"]["value"], math.pi ** 2 / 6, delta=1e-14)

    def test_empty_product(self):
        code, report, _ = run("sum", "-a", "1", "-k", "0", "-N", "5")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["value"], "1/1")

    def test_methods_agree(self):
        values = {run("sum", "-a", "3", "-k", "3", "-N", "6", "--method", m)[1]["result"]["value"]
                  for m in ("brute", "recurrence", "partition", "series")}
        self.assertEqual(len(values), 1)

    def test_enumeration_guard_exit_3(self):
        code, report, err = run("sum", "-a", "2", "-k", "5", "-N", "100", "--method", "brute")
        self.assertEqual(code, 3)
        self.assertIsNone(report)
        self.assertIn("enumeration", err)

    def test_invalid_inputs_exit_2(self):
        for args in (["-a", "0", "-k", "1", "-N", "3"],
                     ["-a", "1", "-k", "1", "-N", "inf"],
                     ["-a", "2", "-k", "1", "-N", "inf", "--method", "brute"],
                     ["-a", "2", "-k", "1", "-N", "Inf"],
                     ["-a", "2", "-k", "1", "-N", "3", "--method", "magic"]):
            with self.subTest(args=args):
                self.assertEqual(run("sum", *args)[0], 2)


class GenfuncCommand(unittest.TestCase):
    def test_gamma_route(self):
        code, report, _ = run("genfunc", "-m", "2", "-t", "0.5", "--route", "gamma")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(report["result"]["re"], math.pi / 2, delta=1e-10)

    def test_origin(self):
        code, report, _ = run("genfunc", "-m", "2", "-t", "0")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["re"], 1.0)

    def test_routes_delta_below_bound(self):
        code, report, _ = run("genfunc", "-m", "3", "-t", "0.5", "--route", "gamma,series")
        self.assertEqual(code, 0)
        self.assertEqual(len(report["checks"]), 1)
        check = report["checks"][0]
        self.assertEqual(check["status"], "pass")
        self.assertLessEqual(check["measured"], check["tolerance"])

    def test_unit_disc_exit_2(self):
        for t in ("1", "-1", "1.5"):
            with self.subTest(t=t):
                self.assertEqual(run("genfunc", "-m", "2", "-t", t)[0], 2)


class IntegrateCommand(unittest.TestCase):
    def test_quad_zeta2(self):
        code, report, _ = run("integrate", "-m", "2", "-k", "1", "--engine", "quad")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(report["result"]["value"], math.pi ** 2 / 6, delta=1e-10)

    def test_quad_k0(self):
        code, report, _ = run("integrate", "-m", "2", "-k", "0", "--engine", "quad")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(report["result"]["value"], 1.0, delta=1e-12)

    def test_mc_zeta3(self):
        code, report, _ = run("integrate", "-m", "3", "-k", "1", "--engine", "mc",
                              "-n", "10000000", "--seed", "42")
        self.assertEqual(code, 0)
        result = report["result"]
        self.assertEqual(result["seed"], 42)
        self.assertEqual(report["seed"], 42)
        self.assertLessEqual(abs(result["mean"]["re"] - 1.2020569031595943),
                             4 * result["stderr"])
        self.assertTrue(all(c["status"] == "pass" for c in report["checks"]))

    def test_default_seed_echoed(self):
        code, report, _ = run("integrate", "-m", "2", "-k", "1", "--engine", "mc", "-n", "20000")
        self.assertEqual(code, 0)
        self.assertEqual(report["seed"], 42)

    def test_thread_count_does_not_change_output(self):
        args = ("integrate", "-m", "3", "-k", "1", "--engine", "mc", "-n", "300000")
        one = run(*args, env={"EPIIHS_THREADS": "1"})[1]
        four = run(*args, env={"EPIIHS_THREADS": "4"})[1]
        self.assertEqual(one["result"], four["result"])
        self.assertEqual(one["checks"], four["checks"])

    def test_invalid_exit_2(self):
        for args in (["-m", "3", "-k", "1", "--engine", "quad"],
                     ["-m", "2", "-k", "1", "--engine", "mc", "-n", "10"],
                     ["-m", "2", "-k", "1", "--engine", "quad", "-U", "5"],
                     ["-m", "2", "-k", "1", "--engine", "simpson"]):
            with self.subTest(args=args):
                self.assertEqual(run("integrate", *args)[0], 2)

    def test_bad_thread_env_exit_2(self):
        code = run("integrate", "-m", "2", "-k", "1", "--engine", "mc", "-n", "2000",
                   env={"EPIIHS_THREADS": "zero"})[0]
        self.assertEqual(code, 2)


class VerifyCommand(unittest.TestCase):
    def test_suites_pass(self):
        for suite in ("exact", "series", "gamma"):
            with self.subTest(suite=suite):
                code, report, _ = run("verify", "--suite", suite)
                self.assertEqual(code, 0)
                self.assertEqual(report["result"]["failed"], 0)
                self.assertEqual(report["result"]["total"], len(report["checks"]))
                for check in report["checks"]:
                    self.assertEqual(check["status"], "pass", check["name"])

    def test_gamma_deltas(self):
        report = run("verify", "--suite", "gamma")[1]
        for check in report["checks"]:
            if check["name"].startswith("gamma.reflection"):
                self.assertLessEqual(check["measured"], 1e-12)

    def test_acceptance_gate(self):
        code, report, _ = run("verify", "--suite", "all", "--seed", "42")
        self.assertEqual(code, 0)
        self.assertEqual(report["seed"], 42)
        self.assertEqual(report["result"]["failed"], 0)

    def test_unknown_suite_exit_2(self):
        self.assertEqual(run("verify", "--suite", "nothing")[0], 2)


class Usage(unittest.TestCase):
    def test_unknown_command_exit_2(self):
        self.assertEqual(run("plot")[0], 2)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
