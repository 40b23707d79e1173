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

import networkx as nx


class PosetError(ValueError):
    pass


def members(ideal):
    """Element indices of a bit-vector ideal, in increasing order."""
    out = []
    v = 0
    while ideal:
        if ideal & 1:
            out.append(v)
        ideal >>= 1
        v += 1
    return out


class Poset:
    """Finite poset on the elements 0..n_elements-1, given by its cover pairs (lower, upper).

    Order ideals are plain integers used as bit-vectors: bit v is set iff element v is a member.
    """

    def __init__(self, n_elements, covers):

        if n_elements < 0:
            raise PosetError("negative number of elements: {}".format(n_elements))

        graph = nx.DiGraph()
        graph.add_nodes_from(range(n_elements))
        for lower, upper in covers:
            if not (0 <= lower < n_elements and 0 <= upper < n_elements):
                raise PosetError("cover ({}, {}) refers to an unknown element".format(lower, upper))
            graph.add_edge(lower, upper)

        if not nx.is_directed_acyclic_graph(graph):
            raise PosetError("cover relation contains a cycle")
        if nx.transitive_reduction(graph).number_of_edges() != graph.number_of_edges():
            raise PosetError("cover relation is redundant")

        self.n_elements = n_elements
        self.graph = nx.freeze(graph)
        self.covers = tuple(sorted(graph.edges()))
        self.uppers = tuple(tuple(sorted(graph.successors(v))) for v in range(n_elements))
        self.lowers = tuple(tuple(sorted(graph.predecessors(v))) for v in range(n_elements))
        self.minimal = tuple(v for v in range(n_elements) if not self.lowers[v])
        self.maximal = tuple(v for v in range(n_elements) if not self.uppers[v])
        self.full = (1 << n_elements) - 1

        self._linear_extension = tuple(nx.lexicographical_topological_sort(graph))

        # strict down-sets as bit-vectors
        below = [0] * n_elements
        for v in self._linear_extension:
            mask = 0
            for w in self.lowers[v]:
                mask |= below[w] | (1 << w)
            below[v] = mask
        self.below = tuple(below)

    def __len__(self):
        return self.n_elements

    def __repr__(self):
        return "Poset({}, {})".format(self.n_elements, list(self.covers))

    def less_than(self, v, w):
        return bool((self.below[w] >> v) & 1)

    def is_ideal(self, ideal):
        return all(self.below[v] & ~ideal == 0 for v in members(ideal))

    def ideal_generated_by(self, elements):
        ideal = 0
        for v in elements:
            ideal |= self.below[v] | (1 << v)
        return ideal


class HatPoset:
    """Poset with 1̂ (index top) and 0̂ (index bottom) adjoined."""

    def __init__(self, base):
        self.base = base
        n = len(base)
        self.top = n
        self.bottom = n + 1
        self.uppers = tuple(base.uppers[v] or (self.top,) for v in range(n)) + ((), base.minimal)
        self.lowers = tuple(base.lowers[v] or (self.bottom,) for v in range(n)) + (base.maximal, ())

    def __len__(self):
        return len(self.base) + 2

    def upper_covers(self, v):
        return self.uppers[v]

    def lower_covers(self, v):
        return self.lowers[v]


class RankFunction:

    def __init__(self, ranks):
        self.ranks = tuple(ranks)
        self.height = max(self.ranks, default=0)

    def __getitem__(self, v):
        return self.ranks[v]

    def __len__(self):
        return len(self.ranks)

    def __repr__(self):
        return "RankFunction({}, height={})".format(list(self.ranks), self.height)


def from_coordinates(coordinates):
    """Poset on a finite subset of Z^2, covers are the coordinate successors (i+1, j) and (i, j+1)."""
    index = {c: k for k, c in enumerate(coordinates)}
    if len(index) != len(coordinates):
        raise PosetError("duplicate coordinates")
    covers = []
    for (i, j), k in index.items():
        for succ in ((i + 1, j), (i, j + 1)):
            if succ in index:
                covers.append((k, index[succ]))
    return Poset(len(coordinates), covers)


def linear_extension(p):
    return list(p._linear_extension)


def enumerate_ideals(p):
    """Yields every order ideal of p once, in increasing bit-vector order."""
    ideals = [0]
    for v in p._linear_extension:
        required = 0
        for w in p.lowers[v]:
            required |= 1 << w
        extended = []
        for ideal in ideals:
            extended.append(ideal)
            if ideal & required == required:
                extended.append(ideal | (1 << v))
        ideals = extended
    for ideal in sorted(ideals):
        yield ideal


def rank_function(p):
    """Returns the RankFunction of a graded poset and None if p is not graded."""
    ranks = [0] * len(p)
    for v in p._linear_extension:
        candidates = {ranks[w] + 1 for w in p.lowers[v]} or {1}
        if len(candidates) > 1:
            return None
        ranks[v] = candidates.pop()
    if len({ranks[v] for v in p.maximal}) > 1:
        return None
    return RankFunction(ranks)
