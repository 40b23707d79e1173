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

from collections import namedtuple
from fractions import Fraction

import networkx as nx
import numpy as np
import sympy

from .posets import HatPoset, from_coordinates, rank_function


class CatalogError(ValueError):
    pass


LieType = namedtuple("LieType", ["family", "rank_n", "weight_index"])

CartanData = namedtuple("CartanData", ["cartan", "inverse_cartan", "dynkin", "w0_permutation"])

Pairings = namedtuple("Pairings", ["cartan_data", "weight", "dual_weight"])


class FileComponent(namedtuple("FileComponent", ["shape", "m", "blacks", "u", "y", "z", "v"])):
    """One connected component of the file graph, shape G_m or H_m.

    blacks are x_1..x_m bottom to top, u lies below x_1, v above x_m and y_i (and z_i for G_m)
    lie between x_i and x_{i+1}. White vertices are hat indices, so u and v may be 0̂ or 1̂.
    """

    __slots__ = ()

    @property
    def label(self):
        return "{}{}".format(self.shape, self.m)


E6_COLORS = {
    (1, 1): 6, (2, 1): 5, (3, 1): 4, (4, 1): 3, (5, 1): 1, (3, 2): 2, (4, 2): 4, (5, 2): 3,
    (4, 3): 5, (5, 3): 4, (6, 3): 2, (4, 4): 6, (5, 4): 5, (6, 4): 4, (7, 4): 3, (8, 4): 1,
}

E7_COLORS = {
    (1, 1): 7, (1, 2): 6, (1, 3): 5, (1, 4): 4, (1, 5): 3, (1, 6): 1,
    (2, 4): 2, (2, 5): 4, (2, 6): 3, (3, 5): 5, (3, 6): 4, (3, 7): 2,
    (4, 5): 6, (4, 6): 5, (4, 7): 4, (5, 5): 7, (5, 6): 6, (5, 7): 5,
    (4, 8): 3, (4, 9): 1, (5, 8): 4, (5, 9): 3, (6, 8): 2, (6, 9): 4,
    (7, 9): 5, (8, 9): 6, (9, 9): 7,
}


def legal_weights(family, n):
    if family == "A" and n >= 1:
        return tuple(range(1, n + 1))
    if family == "B" and n >= 2:
        return (n,)
    if family == "C" and n >= 2:
        return (1,)
    if family == "D" and n >= 3:
        return (1, n - 1, n)
    if family == "E" and n == 6:
        return (1, 6)
    if family == "E" and n == 7:
        return (7,)
    return ()


def check_lie(lie):
    family, n, r = lie
    weights = legal_weights(family, n)
    if not weights:
        raise CatalogError("no minuscule weights for type {}_{}".format(family, n))
    if r not in weights:
        raise CatalogError("{}_{} weight {} is not minuscule; the minuscule weight table allows {}".format(
            family, n, r, ", ".join(str(w) for w in weights)))
    return lie


def lie_name(lie):
    return "{}{}w{}".format(*lie)


def catalog_entries(max_rank=7):
    entries = []
    for family, start in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for n in range(start, max_rank + 1):
            for r in legal_weights(family, n):
                entries.append(LieType(family, n, r))
    entries += [LieType("E", 6, 1), LieType("E", 6, 6), LieType("E", 7, 7)]
    return entries


def coxeter_number(family, n):
    if family == "A":
        return n + 1
    if family in ("B", "C"):
        return 2 * n
    if family == "D":
        return 2 * n - 2
    return {6: 12, 7: 18}[n]


def dynkin_edges(family, n):
    if family in ("A", "B", "C"):
        return [(i, i + 1) for i in range(1, n)]
    if family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    if n == 7:
        edges.append((6, 7))
    return edges


def cartan_matrix(family, n):
    """Cartan matrix with entries a[i-1, j-1] = <alpha_j, alpha_i^vee> (Bourbaki numbering)."""
    a = 2 * np.eye(n, dtype=int)
    for i, j in dynkin_edges(family, n):
        a[i - 1, j - 1] = a[j - 1, i - 1] = -1
    if family == "B":
        a[n - 1, n - 2] = -2
    elif family == "C":
        a[n - 2, n - 1] = -2
    return a


def w0_permutation(family, n):
    """Images of 1..n under the diagram involution alpha -> -w0(alpha)."""
    perm = list(range(1, n + 1))
    if family == "A":
        perm = [n + 1 - i for i in perm]
    elif family == "D" and n % 2 == 1:
        perm[n - 2], perm[n - 1] = n, n - 1
    elif family == "E" and n == 6:
        perm = [6, 2, 5, 4, 3, 1]
    return tuple(perm)


def cartan_data(family, n):

    cartan = cartan_matrix(family, n)
    inverse = sympy.Matrix(cartan.tolist()).inv()
    inverse_cartan = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            inverse_cartan[i, j] = Fraction(int(inverse[i, j].p), int(inverse[i, j].q))

    dynkin = nx.Graph()
    dynkin.add_nodes_from(range(1, n + 1))
    dynkin.add_edges_from(dynkin_edges(family, n))

    w0 = w0_permutation(family, n)

    if (cartan.dot(inverse_cartan) != np.eye(n, dtype=int)).any():
        raise CatalogError("inverse Cartan matrix check failed for {}_{}".format(family, n))
    if any(w0[w0[i] - 1] != i + 1 for i in range(n)):
        raise CatalogError("-w0 permutation is not an involution")
    if any(not dynkin.has_edge(w0[i - 1], w0[j - 1]) for i, j in dynkin.edges()):
        raise CatalogError("-w0 permutation does not preserve the Dynkin diagram")

    return CartanData(cartan, inverse_cartan, nx.freeze(dynkin), w0)


def pairing_data(lie):
    """Fundamental coweight pairings <ϖ_α^∨, λ> and <ϖ_α^∨, -w0 λ> for every simple root α."""
    family, n, r = check_lie(lie)
    data = cartan_data(family, n)
    dual_r = data.w0_permutation[r - 1]
    weight = {alpha: data.inverse_cartan[alpha - 1, r - 1] for alpha in range(1, n + 1)}
    dual_weight = {alpha: data.inverse_cartan[alpha - 1, dual_r - 1] for alpha in range(1, n + 1)}
    return Pairings(data, weight, dual_weight)


def _type_a(n, r):
    coords = [(i, j) for i in range(r) for j in range(n - r + 1)]
    color = {(i, j): r + j - i for i, j in coords}
    iota = {(i, j): (r - 1 - i, n - r - j) for i, j in coords}
    return coords, color, iota


def _type_b(n):
    coords = [(i, j) for j in range(n) for i in range(j + 1)]
    color = {(i, j): n - (j - i) for i, j in coords}
    iota = {(i, j): (n - 1 - j, n - 1 - i) for i, j in coords}
    return coords, color, iota


def _type_c(n):
    coords = [(1, k) for k in range(1, n + 1)] + [(k, n) for k in range(2, n + 1)]
    color = {c: n - abs(n - 1 - t) for t, c in enumerate(coords)}
    iota = {c: coords[len(coords) - 1 - t] for t, c in enumerate(coords)}
    return coords, color, iota


def _type_d_first(n):
    # double-tailed diamond: bottom tail, the two middle vertices e_1 - e_n and e_1 + e_n, top tail
    bottom = [(0, t) for t in range(n - 2)]
    top = [(k, n - 2) for k in range(1, n - 1)]
    minus, plus = (0, n - 2), (1, n - 3)
    coords = bottom + [minus, plus] + top
    color = {(0, t): t + 1 for _, t in bottom}
    color.update({minus: n - 1, plus: n})
    color.update({(k, n - 2): n - 1 - k for k, _ in top})
    iota = {}
    for _, t in bottom:
        iota[(0, t)] = (n - 2 - t, n - 2)
        iota[(n - 2 - t, n - 2)] = (0, t)
    if n % 2:
        iota.update({minus: plus, plus: minus})
    else:
        iota.update({minus: minus, plus: plus})
    return coords, color, iota


def _type_d_spin(n, r):
    coords = [(i, j) for j in range(n - 1) for i in range(j + 1)]
    color = {}
    for i, j in coords:
        if i == j:
            color[(i, j)] = n if i % 2 == 0 else n - 1
        else:
            color[(i, j)] = n - 1 - (j - i)
    if r == n - 1:
        swap = {n - 1: n, n: n - 1}
        color = {c: swap.get(a, a) for c, a in color.items()}
    iota = {(i, j): (n - 2 - j, n - 2 - i) for i, j in coords}
    return coords, color, iota


def _type_e(n, r):
    if n == 6:
        color = dict(E6_COLORS)
        if r == 1:
            swap = {1: 6, 6: 1, 3: 5, 5: 3}
            color = {c: swap.get(a, a) for c, a in color.items()}
        iota = {(i, j): (9 - i, 5 - j) for i, j in color}
    else:
        color = dict(E7_COLORS)
        iota = {(i, j): (10 - j, 10 - i) for i, j in color}
    return list(color), color, iota


class MinusculePoset:
    """A minuscule poset with its coloring by simple roots, the involution ι and Cartan data."""

    def __init__(self, lie, coordinates, color, iota):

        self.lie = lie
        family, n, r = lie
        # sorted by rank so that the index order is itself a linear extension
        self.embedding = tuple(sorted(coordinates, key=lambda c: (c[0] + c[1], c[0])))
        index = {c: k for k, c in enumerate(self.embedding)}

        self.poset = from_coordinates(self.embedding)
        self.hat = HatPoset(self.poset)
        self.coloring = tuple(color[c] for c in self.embedding)
        try:
            self.involution = tuple(index[iota[c]] for c in self.embedding)
        except KeyError as error:
            raise CatalogError("involution leaves the coordinate set at {}".format(error))
        self.coxeter_number = coxeter_number(family, n)
        self.cartan = cartan_data(family, n)

        self.ranks = rank_function(self.poset)
        if self.ranks is None:
            raise CatalogError("{} is not graded".format(lie_name(lie)))

        self.files = {}
        for alpha in range(1, n + 1):
            chain = [v for v in range(len(self.poset)) if self.coloring[v] == alpha]
            self.files[alpha] = tuple(sorted(chain, key=self.ranks.__getitem__))

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        return "MinusculePoset({})".format(lie_name(self.lie))

    @property
    def name(self):
        return lie_name(self.lie)

    @property
    def rank_n(self):
        return self.lie.rank_n

    @property
    def height(self):
        return self.ranks.height

    def file(self, alpha):
        return self.files[alpha]

    def validate(self):
        """Raises CatalogError unless every structural property of a minuscule poset holds."""
        family, n, r = self.lie
        p = self.poset
        dynkin = self.cartan.dynkin
        w0 = self.cartan.w0_permutation

        if self.height != self.coxeter_number - 1:
            raise CatalogError("height {} does not match Coxeter number {}".format(self.height, self.coxeter_number))
        if len(p.minimal) != 1 or len(p.maximal) != 1:
            raise CatalogError("expected a unique minimal and a unique maximal element")
        if self.coloring[p.minimal[0]] != r or self.coloring[p.maximal[0]] != w0[r - 1]:
            raise CatalogError("colors of the extremal elements do not match the weight")

        for lower, upper in p.covers:
            if not dynkin.has_edge(self.coloring[lower], self.coloring[upper]):
                raise CatalogError("cover {}<{} joins non-adjacent colors".format(lower, upper))
            if (self.involution[upper], self.involution[lower]) not in p.graph.edges:
                raise CatalogError("involution does not reverse the cover {}<{}".format(lower, upper))

        for alpha, chain in self.files.items():
            for a, b in zip(chain, chain[1:]):
                if not p.less_than(a, b):
                    raise CatalogError("file {} is not a chain".format(alpha))
                if (self.ranks[b] - self.ranks[a]) % 2:
                    raise CatalogError("file {} has an odd rank gap".format(alpha))

        for v in range(len(p)):
            if self.involution[self.involution[v]] != v:
                raise CatalogError("involution is not an involution at {}".format(v))
            if self.coloring[self.involution[v]] != w0[self.coloring[v] - 1]:
                raise CatalogError("involution does not map files according to -w0")
        return self


def build_minuscule(lie):
    lie = LieType(*check_lie(lie))
    family, n, r = lie
    if family == "A":
        coords, color, iota = _type_a(n, r)
    elif family == "B":
        coords, color, iota = _type_b(n)
    elif family == "C":
        coords, color, iota = _type_c(n)
    elif family == "D" and r == 1:
        coords, color, iota = _type_d_first(n)
    elif family == "D":
        coords, color, iota = _type_d_spin(n, r)
    else:
        coords, color, iota = _type_e(n, r)
    return MinusculePoset(lie, coords, color, iota).validate()


def involution_of(mp, v):
    return mp.involution[v]


def _component_shape(mp, blacks):

    hat = mp.hat
    lower = hat.lower_covers(blacks[0])
    upper = hat.upper_covers(blacks[-1])
    if len(lower) != 1 or len(upper) != 1:
        raise CatalogError("file component {} has more than one outer neighbor".format(blacks))

    gaps = []
    for a, b in zip(blacks, blacks[1:]):
        between = hat.upper_covers(a)
        if set(between) != set(hat.lower_covers(b)):
            raise CatalogError("file component {} is not of shape G or H".format(blacks))
        gaps.append(between)

    sizes = {len(gap) for gap in gaps}
    if sizes <= {2}:
        return FileComponent("G", len(blacks), tuple(blacks), lower[0],
                             tuple(g[0] for g in gaps), tuple(g[1] for g in gaps), upper[0])
    if sizes == {1}:
        return FileComponent("H", len(blacks), tuple(blacks), lower[0],
                             tuple(g[0] for g in gaps), (), upper[0])
    raise CatalogError("file component {} mixes gap sizes {}".format(blacks, sorted(sizes)))


def file_decomposition(mp, alpha):
    """Connected components of the bipartite graph between P^alpha and its cover neighbors in the hat poset."""
    if alpha not in mp.files:
        raise CatalogError("no simple root {} for {}".format(alpha, mp.name))

    graph = nx.Graph()
    for x in mp.file(alpha):
        graph.add_node(("black", x))
        for w in mp.hat.lower_covers(x) + mp.hat.upper_covers(x):
            graph.add_edge(("black", x), ("white", w))

    components = []
    for nodes in nx.connected_components(graph):
        blacks = sorted((v for kind, v in nodes if kind == "black"), key=mp.ranks.__getitem__)
        components.append(_component_shape(mp, blacks))
    components.sort(key=lambda c: mp.ranks[c.blacks[0]])
    return components


def diamond_labels(mp):
    """Maps the double-tailed diamond labels 1..2n-3 ("+"/"-" for the two middle vertices) to elements."""
    family, n, r = mp.lie
    if family != "D" or r != 1:
        raise CatalogError("diamond labels need D_n with weight 1, got {}".format(mp.name))
    index = {c: k for k, c in enumerate(mp.embedding)}
    labels = {"-": index[(0, n - 2)], "+": index[(1, n - 3)]}
    for t in range(n - 2):
        labels[2 * n - 3 - t] = index[(0, t)]
    for k in range(1, n - 1):
        labels[n - 1 - k] = index[(k, n - 2)]
    return labels
