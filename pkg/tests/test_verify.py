#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright © 2019-2020 Ralf Weber
#
# This file is part of rowmotion.
#
# rowmotion is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# rowmotion is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with rowmotion.  If not, see <https://www.gnu.org/licenses/>.
#


import io
import time
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from rowmotion.auxiliary import report_digest
from rowmotion.birational import ContractError
from rowmotion.catalog import LieType, build_minuscule
from rowmotion.verify import (THEOREMS, Report, doubling_check, doubling_factor, diamond_check, exit_status,
                              local_identity_check, maximal_divisors, resolve_mode, verify, verify_many)


class VerifyTestCase(unittest.TestCase):

    def assertPassed(self, record):
        self.assertEqual(record["status"], "PASS", record)
        self.assertTrue(record["checks"])
        for check in record["checks"]:
            self.assertEqual(check["passed"], check["total"])

    def test_all_theorems_exact(self):
        mp = build_minuscule(LieType("A", 3, 2))
        for theorem in THEOREMS:
            record = verify(mp, theorem, "exact")
            self.assertPassed(record)
            self.assertEqual(record["mode"], "exact")
            self.assertEqual(record["seed"], 0)
            self.assertIsNone(record["trials"])

    def test_x_variables(self):
        mp = build_minuscule(LieType("A", 3, 2))
        for theorem in ("periodicity", "reciprocity", "file_homomesy"):
            self.assertPassed(verify(mp, theorem, "exact", variables="X"))

    def test_non_simply_laced(self):
        for lie in (LieType("B", 3, 3), LieType("C", 3, 1)):
            mp = build_minuscule(lie)
            for theorem in ("periodicity", "reciprocity", "file_homomesy", "rel_phi_prime", "rel_phi", "hopkins"):
                self.assertPassed(verify(mp, theorem, "exact"))

    def test_half_period(self):
        for lie in (LieType("A", 1, 1), LieType("A", 2, 1), LieType("A", 3, 2)):
            record = verify(build_minuscule(lie), "half_period_conjecture", "exact")
            self.assertPassed(record)
            self.assertEqual(record["kind"], "conjecture")
        record = verify(build_minuscule(LieType("B", 4, 4)), "half_period_conjecture", "prob", seed=4, trials=20)
        self.assertPassed(record)
        self.assertEqual(record["checks"][0]["total"], 20 * 10)

    def test_probabilistic(self):
        mp = build_minuscule(LieType("E", 7, 7))
        self.assertEqual(resolve_mode(mp), "probabilistic")
        record = verify(mp, "hopkins", seed=1, trials=3)
        self.assertPassed(record)
        self.assertEqual(record["mode"], "probabilistic")
        self.assertEqual((record["seed"], record["trials"]), (1, 3))
        self.assertEqual(record["checks"][0]["total"], 3)
        self.assertPassed(verify(mp, "periodicity", "prob", seed=2, trials=1))

    def test_auto_mode(self):
        self.assertEqual(resolve_mode(build_minuscule(LieType("E", 6, 6))), "exact")
        self.assertEqual(resolve_mode(build_minuscule(LieType("D", 6, 1)), "prob"), "probabilistic")
        self.assertRaises(ContractError, resolve_mode, build_minuscule(LieType("A", 1, 1)), "fast")

    def test_coxeter_orderings_follow_seed(self):
        mp = build_minuscule(LieType("A", 5, 1))
        identities = {}
        for seed in (3, 9):
            record = verify(mp, "coxeter_periodicity", "exact", seed=seed)
            self.assertPassed(record)
            self.assertEqual(record["seed"], seed)
            identities[seed] = {check["identity"] for check in record["checks"]}
        self.assertIn("gamma[5,3,2,4,1]^h = id", identities[3])
        self.assertNotEqual(identities[3], identities[9])

    def test_coxeter_motion_exact(self):
        mp = build_minuscule(LieType("A", 5, 3))
        self.assertEqual(resolve_mode(mp), "exact")
        start = time.perf_counter()
        self.assertPassed(verify(mp, "coxeter_periodicity", "exact", seed=2))
        self.assertLess(time.perf_counter() - start, 120)

    def test_e6_periodicity(self):
        mp = build_minuscule(LieType("E", 6, 6))
        record = verify(mp, "periodicity", "exact")
        self.assertPassed(record)
        identities = [check["identity"] for check in record["checks"]]
        self.assertEqual(identities[:3], ["rho^h = id", "rho^6 != id", "rho^4 != id"])

    def test_debug_output(self):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            self.assertPassed(verify(build_minuscule(LieType("A", 2, 1)), "reciprocity", "exact", debug=True))
            self.assertPassed(diamond_check(build_minuscule(LieType("D", 4, 1)), debug=True))
        self.assertEqual(stdout.getvalue(), "")
        self.assertIn("A2w1 reciprocity symbolic: PASS", stderr.getvalue())
        self.assertIn("D4w1 diamond oracle: PASS", stderr.getvalue())

    def test_phi_prime_laurent(self):
        mp = build_minuscule(LieType("A", 3, 2))
        self.assertPassed(verify(mp, "phi_prime_laurent", "exact"))
        self.assertRaises(ContractError, verify, mp, "phi_prime_laurent", "prob")
        self.assertRaises(ContractError, verify, mp, "phi_prime_laurent", "exact", variables="X")

    def test_unknown_theorem(self):
        mp = build_minuscule(LieType("A", 1, 1))
        self.assertRaises(ContractError, verify, mp, "fermat")

    def test_doubling(self):
        self.assertEqual(doubling_factor(1, 0, 1, 1), Fraction(1, 2))
        self.assertEqual(doubling_factor(1, 0, 1, 2), Fraction(1))
        self.assertEqual(doubling_factor(1, 0, 1, 3), Fraction(2))
        self.assertEqual(doubling_factor(1, 0, 1, 4), Fraction(1))
        self.assertPassed(doubling_check(1))
        self.assertPassed(doubling_check(2))
        record = doubling_check(3)
        self.assertPassed(record)
        self.assertIsNone(record["seed"])
        record = doubling_check(3, "prob", seed=5, trials=2)
        self.assertPassed(record)
        self.assertEqual(record["poset"], "staircase3")

    def test_diamond(self):
        for n in (4, 5, 6):
            self.assertPassed(diamond_check(build_minuscule(LieType("D", n, 1))))

    def test_local_identities(self):
        self.assertPassed(local_identity_check(build_minuscule(LieType("A", 3, 2)), 2))
        record = local_identity_check(build_minuscule(LieType("C", 3, 1)), 2)
        self.assertPassed(record)
        self.assertIn("rowmotion H2", [check["identity"] for check in record["checks"]])
        self.assertPassed(local_identity_check(build_minuscule(LieType("E", 6, 6)), 4, "prob", seed=3, trials=2))

    def test_report(self):
        report = Report("A1w1", "periodicity", "exact")
        report.check("first", True)
        self.assertTrue(report.passed)
        report.check("first", False, {"trial": 4}, vertex=0)
        report.check("second", False, vertex=1)
        self.assertFalse(report.passed)
        record = report.record()
        self.assertEqual(record["status"], "FAIL")
        self.assertEqual(record["witness"], {"trial": 4, "identity": "first", "vertex": 0})
        self.assertEqual([(c["identity"], c["passed"], c["total"]) for c in record["checks"]],
                         [("first", 1, 2), ("second", 0, 1)])

    def test_exit_status(self):
        passed = {"status": "PASS", "kind": "theorem"}
        failed = {"status": "FAIL", "kind": "theorem"}
        conjecture = {"status": "FAIL", "kind": "conjecture"}
        self.assertEqual(exit_status([passed, conjecture]), 0)
        self.assertEqual(exit_status([passed, failed]), 1)
        self.assertEqual(exit_status([]), 0)

    def test_maximal_divisors(self):
        self.assertEqual(maximal_divisors(12), [6, 4])
        self.assertEqual(maximal_divisors(18), [9, 6])
        self.assertEqual(maximal_divisors(2), [1])

    def test_digest(self):
        lie_types = [LieType("E", 6, 6)]
        first = verify_many(lie_types, ["reciprocity"], "prob", seed=7, trials=2)
        second = verify_many(lie_types, ["reciprocity"], "prob", seed=7, trials=2)
        other = verify_many(lie_types, ["reciprocity"], "prob", seed=8, trials=2)
        self.assertEqual(report_digest(first), report_digest(second))
        self.assertNotEqual(report_digest(first), report_digest(other))
        self.assertEqual(len(report_digest(first)), 64)


if __name__ == '__main__':
    unittest.main()
