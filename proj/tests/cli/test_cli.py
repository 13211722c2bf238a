# Copyright 2026 The tempctx Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end tests for the tempctx command-line tool.

Usage: test_cli.py <tempctx binary> <report schema> <data dir>
"""

import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = SCHEMA_PATH = DATA = None


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, check=False)
    return proc.returncode, proc.stdout.decode(), proc.stderr.decode()


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA_PATH, encoding="utf-8") as f:
            schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(schema)
        cls.validator = jsonschema.Draft202012Validator(schema)

    def report(self, *args, code=0):
        rc, out, err = run(*args)
        self.assertEqual(rc, code, msg=f"{args}: stderr={err}")
        doc = json.loads(out)
        self.validator.validate(doc)
        self.assertEqual(doc["verdict"] == "pass", rc == 0)
        return doc, out

    def test_verify_temporal_defaults(self):
        doc, _ = self.report("verify-temporal")
        res = doc["results"]
        self.assertEqual(res["eigenvalues"], [-1, 1, 1])
        self.assertEqual(res["assignments_found"], 0)
        self.assertEqual(res["certificate"], [1, 2, 3])
        self.assertTrue(all(res["checks"].values()))

    def test_verify_temporal_rejected(self):
        doc, _ = self.report("verify-temporal", "--theta2", "pi/4", code=2)
        self.assertEqual(doc["results"]["reason"], "contexts not mutually commuting")
        self.assertEqual(doc["verdict"], "fail")

    def test_verify_temporal_only_separation_matters(self):
        doc, _ = self.report("verify-temporal", "--theta1", "pi/2", "--theta2", "pi")
        self.assertEqual(doc["results"]["eigenvalues"], [-1, 1, 1])

    def test_bad_angle_is_usage_error(self):
        self.report("verify-temporal", "--theta1", "tau", code=2)

    def test_verify_spatial(self):
        doc, first = self.report("verify-spatial")
        self.assertEqual(doc["results"]["eigenvalues"], [-1, -1, -1])
        self.assertEqual(doc["results"]["assignments_found"], 0)
        _, second = self.report("verify-spatial")
        self.assertEqual(first, second)

    def test_simulate_temporal(self):
        doc, first = self.report("simulate", "temporal", "--seed", "42")
        ctx = doc["results"]["contexts"]
        self.assertEqual(ctx[0]["product_histogram"], {"-1": 10000, "+1": 0})
        self.assertEqual(ctx[1]["product_histogram"], {"-1": 0, "+1": 10000})
        _, second = self.report("simulate", "temporal", "--seed", "42")
        self.assertEqual(first, second)

    def test_simulate_single_trial_and_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            csv_path = os.path.join(tmp, "trials.csv")
            json_path = os.path.join(tmp, "report.json")
            _, out = self.report("simulate", "temporal", "--trials", "1", "--csv", csv_path,
                                 "--json", json_path)
            with open(csv_path, encoding="utf-8") as f:
                lines = f.read().splitlines()
            with open(json_path, encoding="utf-8") as f:
                self.assertEqual(f.read(), out)
        self.assertEqual(lines[0], "trial,context_id,outcome_t1,outcome_t2,product")
        self.assertEqual(len(lines), 4)
        for row in lines[1:]:
            _, _, a, b, p = (int(x) for x in row.split(","))
            self.assertEqual(a * b, p)

    def test_simulate_spatial_product_state_is_informational(self):
        doc, _ = self.report("simulate", "spatial", "--state", "up", "--trials", "2000")
        xx = doc["results"]["contexts"][0]
        self.assertEqual(xx["mode"], "informational")
        self.assertIsNone(xx["deterministic_product"])
        self.assertGreater(xx["product_histogram"]["-1"], 0)
        self.assertGreater(xx["product_histogram"]["+1"], 0)

    def test_simulate_random_state(self):
        self.report("simulate", "temporal", "--state", "random:7", "--trials", "2000")

    def test_simulate_unknown_state(self):
        self.report("simulate", "temporal", "--state", "sideways", code=2)
        self.report("simulate", "temporal", "--state", "singlet", code=2)
        self.report("simulate", "temporal", "--trials", "0", code=2)

    def test_scan(self):
        doc, _ = self.report("scan")
        self.assertEqual(doc["results"]["accepted_indices"], [90, 270])
        doc, _ = self.report("scan", "--grid", "8")
        self.assertEqual(doc["results"]["accepted_indices"], [2, 6])
        doc, _ = self.report("scan", "--grid", "7")
        self.assertEqual(doc["results"]["accepted_indices"], [])
        self.assertTrue(doc["results"]["resolution_miss"])

    def test_nchv(self):
        doc, _ = self.report("nchv", os.path.join(DATA, "temporal_system.json"),
                             "--expect", "unsat")
        self.assertEqual(doc["results"]["certificate"], [1, 2, 3])
        doc, _ = self.report("nchv", os.path.join(DATA, "relaxed_system.json"))
        self.assertTrue(doc["results"]["satisfiable"])
        self.assertIsNone(doc["results"]["certificate"])
        self.report("nchv", os.path.join(DATA, "relaxed_system.json"), "--expect", "unsat",
                    code=1)
        self.report("nchv", os.path.join(DATA, "undeclared_variable.json"), code=2)
        self.report("nchv", os.path.join(DATA, "missing.json"), code=2)

    def test_floats_use_17_significant_digits(self):
        _, out = self.report("verify-temporal", "--theta2", "3pi/2")
        self.assertIn('"theta2_radians": 4.7123889803846897', out)
        for literal in re.findall(r":\s(-?\d+\.\d+(?:e[-+]?\d+)?)", out):
            self.assertEqual(float(literal), float(repr(float(literal))))

    def test_usage_errors_exit_two(self):
        rc, _, _ = run()
        self.assertEqual(rc, 2)
        rc, _, _ = run("scan", "--grid", "many")
        self.assertEqual(rc, 2)


if __name__ == "__main__":
    BINARY, SCHEMA_PATH, DATA = sys.argv[1:4]
    unittest.main(argv=sys.argv[:1], verbosity=2)
