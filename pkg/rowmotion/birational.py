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

import functools
import operator
from fractions import Fraction

import networkx as nx
import numpy as np

from .catalog import CatalogError, diamond_labels
from .posets import linear_extension
from .ratfun import VarTable


NUMERIC_SAMPLE_RANGE = 10 ** 6


class ContractError(ValueError):
    pass


def _total(values):
    return functools.reduce(operator.add, values)


def _product(values):
    return functools.reduce(operator.mul, values)


class Labeling:
    """Field values on the hat poset: elements 0..N-1, then A at 1̂ and B at 0̂.

    Values are RatFun (symbolic), Fraction (numeric) or Tropical (piecewise-linear).
    """

    __slots__ = ("hat", "values")

    def __init__(self, hat, values):
        values = tuple(values)
        if len(values) != len(hat):
            raise ContractError("labeling needs {} values, got {}".format(len(hat), len(values)))
        self.hat = hat
        self.values = values

    @classmethod
    def from_elements(cls, hat, values, a, b):
        return cls(hat, list(values) + [a, b])

    def __getitem__(self, v):
        return self.values[v]

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return "Labeling({})".format(list(self.values))

    @property
    def A(self):
        return self.values[self.hat.top]

    @property
    def B(self):
        return self.values[self.hat.bottom]

    def elements(self):
        return self.values[:self.hat.top]

    def replace(self, v, value):
        values = list(self.values)
        values[v] = value
        return Labeling(self.hat, values)

    def with_boundary(self, a, b):
        return Labeling.from_elements(self.hat, self.elements(), a, b)

    def first_difference(self, other):
        for v, (x, y) in enumerate(zip(self.values, other.values)):
            if x != y:
                return v
        return None

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.first_difference(other) is None

    __hash__ = None


def btoggle(F, v):
    hat = F.hat
    if not 0 <= v < hat.top:
        raise ContractError("cannot toggle at {}".format(v))
    lower = _total([F[w] for w in hat.lower_covers(v)])
    upper = _total([1 / F[z] for z in hat.upper_covers(v)])
    return F.replace(v, lower / (F[v] * upper))


def browmotion(F, extension=None):
    """Birational rowmotion: toggles along a linear extension, maximal elements first."""
    if extension is None:
        extension = linear_extension(F.hat.base)
    for v in reversed(extension):
        F = btoggle(F, v)
    return F


def browmotion_recursive(F):
    """(ρF)(v) from F(v), the lower covers of v and the already computed (ρF) above v."""
    hat = F.hat
    new = list(F.values)
    for v in reversed(linear_extension(hat.base)):
        lower = _total([F[w] for w in hat.lower_covers(v)])
        upper = _total([1 / new[z] for z in hat.upper_covers(v)])
        new[v] = lower / (F[v] * upper)
    return Labeling(hat, new)


class Trajectory:
    """Lazily computed iterates F, step(F), step(step(F)), ..."""

    def __init__(self, F, step=browmotion):
        self._states = [F]
        self._step = step

    def __getitem__(self, k):
        while len(self._states) <= k:
            self._states.append(self._step(self._states[-1]))
        return self._states[k]

    def __len__(self):
        return len(self._states)


def sigma(mp, F, alpha):
    for v in mp.file(alpha):
        F = btoggle(F, v)
    return F


def check_order(mp, order):
    order = tuple(order)
    if sorted(order) != list(range(1, mp.rank_n + 1)):
        raise ContractError("{} is not an ordering of the simple roots 1..{}".format(order, mp.rank_n))
    return order


def coxeter_motion(mp, F, order):
    """Applies σ_α for α in ``order``, first entry first."""
    for alpha in check_order(mp, order):
        F = sigma(mp, F, alpha)
    return F


def dynkin_bipartition(mp):
    """Two-coloring (Π_1, Π_2) of the Dynkin diagram with α_1 in Π_1."""
    try:
        coloring = nx.bipartite.color(mp.cartan.dynkin)
    except nx.NetworkXError:
        raise CatalogError("Dynkin diagram of {} is not bipartite".format(mp.name))
    first = tuple(a for a in sorted(coloring) if coloring[a] == coloring[1])
    second = tuple(a for a in sorted(coloring) if coloring[a] != coloring[1])
    return first, second


def delta_map(mp, F, parts=None):
    """δ = γ_1 γ_2 γ_1 ... with h factors; the rightmost factor acts first."""
    if parts is None:
        parts = dynkin_bipartition(mp)
    factors = [parts[k % 2] for k in range(mp.coxeter_number)]
    for part in reversed(factors):
        for alpha in part:
            F = sigma(mp, F, alpha)
    return F


def x_to_z(p, X):
    """Z(v) = X(v) for minimal v, X(v) / Σ_{w⋖v} X(w) otherwise."""
    return [X[v] if not p.lowers[v] else X[v] / _total([X[w] for w in p.lowers[v]]) for v in range(len(p))]


def z_to_x(p, Z):
    """X(v) as the sum over saturated chains from a minimal element to v of the Z products."""
    X = [None] * len(p)
    for v in linear_extension(p):
        X[v] = Z[v] if not p.lowers[v] else Z[v] * _total([X[w] for w in p.lowers[v]])
    return X


def variable_table(p, prefix="X"):
    return VarTable(["{}{}".format(prefix, v) for v in range(len(p))] + ["A", "B"])


def symbolic_state(hat, variables="Z", boundary=True, table=None):
    """Generic symbolic labeling and its variable table.

    With variables="Z" the element values are the saturated-chain sums in the Z variables,
    with "X" they are the X variables themselves. boundary=False sets A = B = 1.
    """
    p = hat.base
    if variables not in ("X", "Z"):
        raise ContractError("unknown variables: {}".format(variables))
    if table is None:
        table = variable_table(p, variables)
    gens = [table["{}{}".format(variables, v)] for v in range(len(p))]
    values = z_to_x(p, gens) if variables == "Z" else gens
    if boundary:
        a, b = table["A"], table["B"]
    else:
        a, b = table.one, table.one
    return table, Labeling.from_elements(hat, values, a, b)


def sample_positive(rng, high=NUMERIC_SAMPLE_RANGE):
    num, den = rng.integers(1, high, size=2, endpoint=True)
    return Fraction(int(num), int(den))


def numeric_state(hat, rng, boundary=True, high=NUMERIC_SAMPLE_RANGE):
    values = [sample_positive(rng, high) for _ in range(hat.top)]
    if boundary:
        a, b = sample_positive(rng, high), sample_positive(rng, high)
    else:
        a, b = Fraction(1), Fraction(1)
    return Labeling.from_elements(hat, values, a, b)


def phi(mp, F, alpha):
    return _product([F[v] for v in mp.file(alpha)])


def phi_prime(mp, trajectory, alpha, k=0):
    """Φ'_α(ρ^k F) = Π_{v ∈ P^α} (ρ^{k + (rank v - rank v_0)/2} F)(v)."""
    chain = mp.file(alpha)
    base = mp.ranks[chain[0]]
    return _product([trajectory[k + (mp.ranks[v] - base) // 2][v] for v in chain])


def psi(F):
    hat = F.hat
    return _product([F[x] / _total([F[y] for y in hat.lower_covers(x)]) for x in range(hat.top)])


def statistics(mp, F):
    trajectory = Trajectory(F)
    alphas = range(1, mp.rank_n + 1)
    return {"phi": {alpha: phi(mp, F, alpha) for alpha in alphas},
            "phi_prime": {alpha: phi_prime(mp, trajectory, alpha) for alpha in alphas},
            "psi": psi(F)}


def diamond_oracle(mp, k, v, table):
    """Closed form of (ρ^k X)(v) on D_n with weight 1 and A = B = 1, in the Z variables of ``table``.

    Positions 1..2n-3 run from the maximum down to the minimum; position n-1 is one of the
    two middle vertices and a chain monomial through it carries the sign "+" or "-".
    """
    n = mp.rank_n
    labels = diamond_labels(mp)
    label = {e: l for l, e in labels.items()}[v]
    rank = mp.ranks[v]
    if not 0 <= k <= rank:
        raise ContractError("k = {} outside 0..{}".format(k, rank))

    def z(position):
        return table["Z{}".format(labels[position])]

    def chain(start, length, sign=None):
        out = table.one
        for position in range(start, start + length):
            if position == n - 1:
                if sign is None:
                    raise ContractError("chain monomial through the middle needs a sign")
                out = out * z(sign)
            else:
                out = out * z(position)
        return out

    def both(start, length):
        return chain(start, length, "+") + chain(start, length, "-")

    if label in ("+", "-"):
        if k == 0:
            return chain(n - 1, n - 1, label)
        sign = label if (k - 1) % 2 == 0 else {"+": "-", "-": "+"}[label]
        return 1 / chain(k, n - 1, sign)

    i = label
    length = 2 * n - i - 2
    if k == 0:
        return both(i, length) if i <= n - 2 else chain(i, length)
    if i >= n:
        return 1 / both(k, i)
    if n - i <= k <= n - 1:
        return 1 / chain(k, i, "+") + 1 / chain(k, i, "-")
    return 1 / chain(k, i)
