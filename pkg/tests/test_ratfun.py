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


import unittest
from fractions import Fraction

import numpy as np

from rowmotion.birational import x_to_z, z_to_x
from rowmotion.posets import Poset, from_coordinates
from rowmotion.ratfun import (RatFun, RetryExhaustedError, VarTable, ZeroDenominatorError, ratfun_equal,
                              substitute)


class RatFunTestCase(unittest.TestCase):

    def setUp(self):
        self.table = VarTable(["x", "y", "z"])
        self.x, self.y, self.z = self.table.gens()

    def random_ratfun(self, rng):
        terms = self.table.zero
        for _ in range(3):
            exponents = rng.integers(0, 3, size=3)
            term = self.table.constant(int(rng.integers(-5, 6)))
            for gen, e in zip((self.x, self.y, self.z), exponents):
                term = term * gen ** int(e)
            terms = terms + term
        return terms / (self.x + self.y + int(rng.integers(1, 4)))

    def test_field_operations(self):
        x, y = self.x, self.y
        self.assertEqual(x + (-x), 0)
        self.assertFalse(x + (-x))
        self.assertEqual((x / y) * (y / x), 1)
        self.assertEqual(1 / (1 / x + 1 / y), x * y / (x + y))
        self.assertEqual(x - x / 2, x * Fraction(1, 2))
        self.assertEqual((x / y) ** -2, y ** 2 / x ** 2)
        self.assertRaises(ZeroDivisionError, lambda: x / (y - y))
        self.assertRaises(ZeroDenominatorError, (x - x).inverse)

    def test_normal_form(self):
        f = RatFun(self.table, self.x.num * 2, self.y.num * -4)
        self.assertEqual(f.num, -self.x.num)
        self.assertEqual(f.den, self.y.num * 2)
        self.assertTrue(f.den.LC > 0)

        g = (self.x ** 2 - self.y ** 2) / (self.x - self.y)
        reduced = g.reduced()
        self.assertEqual(reduced.num, (self.x + self.y).num)
        self.assertEqual(reduced.den, self.table.ring.one)
        again = reduced.reduced()
        self.assertEqual((again.num, again.den), (reduced.num, reduced.den))

    def test_gcd_threshold(self):
        table = VarTable(["x", "y"], gcd_threshold=0)
        x, y = table.gens()
        g = (x ** 2 - y ** 2) / (x - y)
        self.assertEqual(g.num, (x + y).num)
        self.assertEqual(g.den, table.ring.one)

    def test_reduced_arithmetic(self):
        x, y = self.x, self.y
        s = x / (x + y) + y / (x + y)
        self.assertTrue(s.coprime)
        self.assertEqual((s.num, s.den), (self.table.ring.one, self.table.ring.one))

        s = 1 / (x - y) - 1 / (x + y)
        self.assertEqual(s.num, (2 * y).num)
        self.assertEqual(s.den, ((x - y) * (x + y)).num)

        p = (x ** 2 - y ** 2) / y * (y / (x - y))
        self.assertTrue(p.coprime)
        self.assertEqual(p.num, (x + y).num)
        self.assertEqual(p.den, self.table.ring.one)

        q = ((x + y) / (x - y)) / ((x + y) ** 2 / y)
        self.assertEqual(q.num, y.num)
        self.assertEqual(q.den, ((x - y) * (x + y)).num)
        self.assertEqual((-q).inverse() ** 2 * q ** 2, self.table.one)

    def test_ring_laws(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            f, g, h = (self.random_ratfun(rng) for _ in range(3))
            self.assertEqual((f + g) + h, f + (g + h))
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f * (g + h), f * g + f * h)

    def test_ratfun_equal(self):
        x, y = self.x, self.y
        f = (x ** 2 - y ** 2) / (x - y)
        self.assertTrue(ratfun_equal(f, x + y))
        self.assertTrue(ratfun_equal(f, x + y, "probabilistic", seed=1, trials=5))
        self.assertFalse(ratfun_equal(x + y, x + y + 1, "probabilistic", seed=1, trials=5))
        self.assertFalse(ratfun_equal(x + y, x + y + 1))
        self.assertRaises(RetryExhaustedError, ratfun_equal, x, x, "probabilistic", 0, 0)
        self.assertRaises(ValueError, ratfun_equal, x, x, "approximate")

    def test_probabilistic_agrees_with_exact(self):
        rng = np.random.default_rng(5)
        for k in range(100):
            f = self.random_ratfun(rng)
            g = f if k % 2 else self.random_ratfun(rng)
            g = (g * (self.z + 1)) / (self.z + 1)
            self.assertEqual(ratfun_equal(f, g), ratfun_equal(f, g, "probabilistic", seed=k, trials=3))

    def test_evaluate(self):
        f = (self.x + 1) / (self.y * 2)
        self.assertEqual(f.evaluate([1, 3, 7]), Fraction(1, 3))
        self.assertEqual(f.evaluate({"x": Fraction(1, 2), "y": 1, "z": 0}), Fraction(3, 4))
        self.assertRaises(ZeroDenominatorError, f.evaluate, [1, 0, 1])

    def test_substitute(self):
        self.assertEqual(substitute(self.x, {"x": self.y / self.z}), self.y / self.z)
        self.assertEqual(self.x.substitute({"x": 3}), 3)
        self.assertRaises(ZeroDenominatorError, substitute, 1 / self.x, {"x": self.y - self.y})

        other = VarTable(["u", "v"])
        u, v = other.gens()
        moved = substitute(self.x * self.y, {"x": u, "y": u + v}, other)
        self.assertEqual(moved, u * u + u * v)
        self.assertRaises(ValueError, substitute, self.z, {"x": u}, other)

    def test_chain_change_of_variables(self):
        table = VarTable(["Xu", "Xw", "Zu", "Zw"])
        Xu, Xw, Zu, Zw = table.gens()
        chain = Poset(2, [(0, 1)])
        self.assertEqual(x_to_z(chain, [Xu, Xw]), [Xu, Xw / Xu])
        self.assertEqual(z_to_x(chain, [Zu, Zw]), [Zu, Zw * Zu])

        forward = {"Xu": Zu, "Xw": Zw * Zu}
        backward = {"Zu": Xu, "Zw": Xw / Xu}
        for f in (Xw / Xu + Xu, Xu * Xw):
            self.assertEqual(f.substitute(forward).substitute(backward), f)

    def test_grid_saturated_chains(self):
        grid = from_coordinates([(0, 0), (0, 1), (1, 0), (1, 1)])
        table = VarTable(["Z0", "Z1", "Z2", "Z3"])
        Z = table.gens()
        X = z_to_x(grid, Z)
        self.assertEqual(X[3], Z[3] * Z[1] * Z[0] + Z[3] * Z[2] * Z[0])
        self.assertEqual(x_to_z(grid, X), Z)

    def test_laurent_monomial(self):
        x, y, z = self.x, self.y, self.z
        self.assertTrue((x * y / z).is_laurent_monomial())
        self.assertTrue((x * (x + y) / (x + y)).is_laurent_monomial())
        self.assertFalse(((x + y) / x).is_laurent_monomial())
        self.assertFalse(((x ** 2 - y ** 2) / (x - y)).is_laurent_monomial())

    def test_variable_table(self):
        self.assertRaises(ValueError, VarTable, ["x", "x"])
        self.assertEqual(len(self.table), 3)
        self.assertEqual(self.table["y"], self.y)
        other = VarTable(["x"])
        self.assertRaises(ValueError, lambda: self.x + other["x"])


if __name__ == '__main__':
    unittest.main()
