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

import networkx as nx

from rowmotion.catalog import LieType, build_minuscule
from rowmotion.posets import (HatPoset, Poset, PosetError, enumerate_ideals, from_coordinates, linear_extension,
                              members, rank_function)


def grid():
    return from_coordinates([(0, 0), (0, 1), (1, 0), (1, 1)])


def brute_force_ideals(p):
    out = []
    for subset in range(1 << len(p)):
        if all(not (subset >> v) & 1 or all((subset >> w) & 1 for w in p.lowers[v]) for v in range(len(p))):
            out.append(subset)
    return out


class PosetsTestCase(unittest.TestCase):

    def test_linear_extension(self):
        self.assertEqual(linear_extension(Poset(1, [])), [0])
        self.assertEqual(linear_extension(Poset(2, [(0, 1)])), [0, 1])

        p = grid()
        order = linear_extension(p)
        self.assertEqual(order, linear_extension(p))
        self.assertEqual(sorted(order), [0, 1, 2, 3])
        for k in range(len(order) + 1):
            self.assertTrue(p.is_ideal(sum(1 << v for v in order[:k])))

    def test_invalid_covers(self):
        self.assertRaises(PosetError, Poset, 2, [(0, 1), (1, 0)])
        self.assertRaises(PosetError, Poset, 3, [(0, 1), (1, 2), (0, 2)])
        self.assertRaises(PosetError, Poset, 2, [(0, 2)])

    def test_covers_and_order(self):
        p = grid()
        self.assertEqual(p.covers, ((0, 1), (0, 2), (1, 3), (2, 3)))
        self.assertEqual(p.lowers[3], (1, 2))
        self.assertEqual(p.uppers[0], (1, 2))
        self.assertTrue(p.less_than(0, 3))
        self.assertFalse(p.less_than(1, 2))
        self.assertFalse(p.less_than(3, 0))
        self.assertEqual(members(p.ideal_generated_by([3])), [0, 1, 2, 3])
        self.assertEqual(members(p.ideal_generated_by([1])), [0, 1])

    def test_enumerate_ideals(self):
        self.assertEqual(list(enumerate_ideals(Poset(1, []))), [0, 1])
        self.assertEqual(list(enumerate_ideals(Poset(0, []))), [0])

        p = grid()
        ideals = list(enumerate_ideals(p))
        self.assertEqual(len(ideals), 6)
        self.assertEqual(ideals, brute_force_ideals(p))

        mp = build_minuscule(LieType("A", 7, 3))
        ideals = list(enumerate_ideals(mp.poset))
        self.assertEqual(len(ideals), 56)
        self.assertEqual(ideals, sorted(set(ideals)))
        self.assertTrue(all(mp.poset.is_ideal(ideal) for ideal in ideals))

    def test_rank_function(self):
        ranks = rank_function(Poset(3, [(0, 1), (1, 2)]))
        self.assertEqual(ranks.ranks, (1, 2, 3))
        self.assertEqual(ranks.height, 3)

        mp = build_minuscule(LieType("B", 4, 4))
        self.assertEqual(rank_function(mp.poset).height, 7)

        self.assertIsNone(rank_function(Poset(4, [(0, 1), (1, 2), (0, 3)])))
        self.assertIsNone(rank_function(Poset(4, [(0, 1), (1, 3), (2, 3)])))
        self.assertEqual(rank_function(Poset(0, [])).height, 0)

    def test_two_linear_extensions_are_topological(self):
        p = grid()
        other = list(nx.lexicographical_topological_sort(p.graph, key=lambda v: -v))
        self.assertNotEqual(other, linear_extension(p))
        for order in (other, linear_extension(p)):
            position = {v: k for k, v in enumerate(order)}
            self.assertTrue(all(position[a] < position[b] for a, b in p.covers))

    def test_hat_poset(self):
        p = Poset(3, [(0, 2), (1, 2)])
        hat = HatPoset(p)
        self.assertEqual((hat.top, hat.bottom), (3, 4))
        self.assertEqual(hat.lower_covers(hat.top), (2,))
        self.assertEqual(hat.upper_covers(hat.bottom), (0, 1))
        self.assertEqual(hat.upper_covers(2), (3,))
        self.assertEqual(hat.lower_covers(0), (4,))
        self.assertEqual(hat.lower_covers(2), (0, 1))
        self.assertEqual(len(hat), 5)


if __name__ == '__main__':
    unittest.main()
