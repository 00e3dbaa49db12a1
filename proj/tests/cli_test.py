#!/usr/bin/env python3
# Copyright 2026 The mdsdual Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the mdsdual command-line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None


def run(*args):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


class FieldInfo(unittest.TestCase):
    def test_f9(self):
        rc, out, _ = run("field-info", "--p", 3, "--deg", 2)
        self.assertEqual(rc, 0)
        info = json.loads(out)
        self.assertEqual(info["modulus"], "x^2+1")
        self.assertEqual(info["g"], "x+1")
        self.assertEqual(info["q_minus_1_factors"], [[2, 3]])

    def test_rejects_bad_fields(self):
        self.assertEqual(run("field-info", "--p", 2, "--deg", 3)[0], 2)
        self.assertEqual(run("field-info", "--p", 9, "--deg", 1)[0], 2)
        self.assertEqual(run("field-info", "--q", 15)[0], 2)


class Construct(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_small_artifact(self):
        rc, out, _ = run("construct", "--q", 9, "--theorem", "T1i", "--m", 4, "--t", 1)
        self.assertEqual(rc, 0)
        art = json.loads(out)
        self.assertEqual(art["n"], 4)
        self.assertTrue(art["verification"]["self_dual"])
        self.assertEqual(art["verification"]["min_distance"], 3)

    def test_exclusion_clause(self):
        rc, out, err = run("construct", "--q", 25, "--theorem", "T1ii", "--m", 2, "--t", 2)
        self.assertEqual(rc, 2)
        clause = json.loads(out)["error"]["clause"]
        self.assertIn("excluded: t even, m even and r\u22611 (mod 4)", clause)
        self.assertIn("HypothesisViolated", err)

    def test_too_large(self):
        rc, out, _ = run("construct", "--p", 5, "--deg", 27, "--theorem", "T5", "--k", 3, "--t", 31, "--e", 7)
        self.assertEqual(rc, 3)
        self.assertEqual(json.loads(out)["error"]["code"], "TooLargeToMaterialize")

    def test_unknown_theorem(self):
        self.assertEqual(run("construct", "--q", 9, "--theorem", "T9")[0], 2)

    def test_example_length_426(self):
        out = self.path("a426.json")
        rc, _, _ = run("construct", "--q", 22801, "--theorem", "T1i", "--m", 6, "--t", 71, "--out", out)
        self.assertEqual(rc, 0)
        with open(out) as fh:
            art = json.load(fh)
        self.assertEqual(art["n"], 426)
        self.assertTrue(art["verification"]["self_dual"])

    def test_round_trip_and_corruption(self):
        out = self.path("t4.json")
        self.assertEqual(run("construct", "--q", 81, "--theorem", "T4", "--e", 2, "--out", out)[0], 0)
        self.assertEqual(run("verify", "--in", out)[0], 0)
        self.assertEqual(run("verify", "--in", out, "--mds")[0], 0)

        with open(out) as fh:
            art = json.load(fh)
        # Multiply one nonzero entry by g; this changes the row's self-product.
        g_row = art["G"][0]
        col = next(i for i, x in enumerate(g_row) if x != 0)
        field = json.loads(run("field-info", "--q", 81)[1])
        p, d, modulus, gen = field["p"], field["d"], field["modulus_coeffs"], field["g_encoding"]
        g_row[col] = mul(g_row[col], gen, p, d, modulus)
        bad = self.path("bad.json")
        with open(bad, "w") as fh:
            json.dump(art, fh)
        self.assertEqual(run("verify", "--in", bad)[0], 4)

        with open(out) as fh:
            text = fh.read()
        trunc = self.path("trunc.json")
        with open(trunc, "w") as fh:
            fh.write(text[: len(text) // 2])
        self.assertEqual(run("verify", "--in", trunc)[0], 2)
        self.assertEqual(run("verify", "--in", self.path("missing.json"))[0], 2)

    def test_byte_identical(self):
        args = ("construct", "--q", 49, "--theorem", "T3ii", "--m", 4, "--t", 2, "--s", 2)
        first = run(*args)[1]
        second = run(*args)[1]
        self.assertEqual(first, second)
        self.assertTrue(first.endswith("\n"))


class Census(unittest.TestCase):
    def test_list(self):
        rc, out, _ = run("census", "--q", 9, "--rows", "all", "--list")
        self.assertEqual(rc, 0)
        report = json.loads(out)
        self.assertIn(10, report["prior"])
        self.assertEqual(report["union_count"], len(set(report["prior"]) | set(report["new"])))

    def test_spot_checks(self):
        rc, out, _ = run("census", "--q", 25, "--rows", "new", "--spot-check-bound", 26)
        self.assertEqual(rc, 0)
        report = json.loads(out)
        self.assertIn("26", report["spot_checks"])
        self.assertNotIn("prior", report)

    def test_errors(self):
        self.assertEqual(run("census", "--q", 10)[0], 2)
        self.assertEqual(run("census", "--q", 9, "--rows", "old")[0], 2)


def mul(a, b, p, d, modulus):
    """Schoolbook product of two encoded elements of F_p[x]/(modulus)."""
    da = [(a // p**i) % p for i in range(d)]
    db = [(b // p**i) % p for i in range(d)]
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * modulus[i]) % p
    return sum(prod[i] * p**i for i in range(d))


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    unittest.main()
