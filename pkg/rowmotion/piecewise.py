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

import sys
from fractions import Fraction
from functools import reduce

import numpy as np
from sympy import ilcm

from .birational import Labeling, browmotion
from .combinatorial import rowmotion
from .posets import enumerate_ideals, linear_extension


PL_SAMPLE_RANGE = 1000

# a PLState is a Labeling of exact rationals, a at 1̂ and b at 0̂
PLState = Labeling


class Tropical:
    """Element of the max-plus (sign "+") or min-plus (sign "-") semifield over the rationals.

    Tropical sum is max or min, product is +, quotient is - and 1/x is -x, so the
    birational engine run on Tropical values performs the piecewise-linear toggles.
    """

    __slots__ = ("value", "sign")
    __hash__ = None

    def __init__(self, value, sign="+"):
        if sign not in ("+", "-"):
            raise ValueError("unknown tropical sign: {}".format(sign))
        self.value = Fraction(value)
        self.sign = sign

    def __repr__(self):
        return "Tropical({}, {!r})".format(self.value, self.sign)

    def __add__(self, other):
        choose = max if self.sign == "+" else min
        return Tropical(choose(self.value, other.value), self.sign)

    def __mul__(self, other):
        return Tropical(self.value + other.value, self.sign)

    def __truediv__(self, other):
        return Tropical(self.value - other.value, self.sign)

    def __rtruediv__(self, other):
        if other != 1:
            raise ValueError("only 1/x is defined for tropical numbers")
        return Tropical(-self.value, self.sign)

    def __pow__(self, exponent):
        return Tropical(self.value * exponent, self.sign)

    def __eq__(self, other):
        if not isinstance(other, Tropical):
            return NotImplemented
        return self.value == other.value and self.sign == other.sign


def pl_state(hat, values, a, b):
    return Labeling.from_elements(hat, [Fraction(x) for x in values], Fraction(a), Fraction(b))


def to_tropical(f, sign):
    return Labeling(f.hat, [Tropical(x, sign) for x in f.values])


def from_tropical(f):
    return Labeling(f.hat, [x.value for x in f.values])


def pl_toggle(f, v, sign="+"):
    hat = f.hat
    lower = [f[w] for w in hat.lower_covers(v)]
    upper = [f[z] for z in hat.upper_covers(v)]
    if sign == "+":
        value = max(lower) + min(upper) - f[v]
    else:
        value = min(lower) + max(upper) - f[v]
    return f.replace(v, value)


def pl_rowmotion(f, sign="+", extension=None):
    if extension is None:
        extension = linear_extension(f.hat.base)
    for v in reversed(extension):
        f = pl_toggle(f, v, sign)
    return f


def pl_coxeter_motion(mp, f, order, sign="+"):
    for alpha in order:
        for v in mp.file(alpha):
            f = pl_toggle(f, v, sign)
    return f


def chi_plus(hat, ideal):
    """0 on the ideal and at 0̂, 1 elsewhere; a PL state with (a, b) = (1, 0)."""
    values = [0 if (ideal >> v) & 1 else 1 for v in range(hat.top)]
    return pl_state(hat, values, 1, 0)


def chi_minus(hat, ideal):
    """1 on the ideal and at 0̂, 0 elsewhere; a PL state with (a, b) = (0, 1)."""
    values = [1 if (ideal >> v) & 1 else 0 for v in range(hat.top)]
    return pl_state(hat, values, 0, 1)


def tropicalize(f, sign="+"):
    """Piecewise-linear function of a subtraction-free RatFun, evaluated on variable values."""
    if not f or not f.is_subtraction_free():
        raise ValueError("{} has no subtraction-free numerator and denominator".format(f))
    choose = max if sign == "+" else min

    def poly(p, point):
        return choose(sum((e * x for e, x in zip(monom, point)), Fraction(0)) for monom in p.itermonoms())

    def evaluate(point):
        point = [Fraction(x) for x in point]
        return poly(f.num, point) - poly(f.den, point)

    return evaluate


def random_pl_state(hat, rng, high=PL_SAMPLE_RANGE):
    def draw():
        num, den = rng.integers(1, high, size=2, endpoint=True)
        return Fraction(int(num), int(den))
    return pl_state(hat, [draw() for _ in range(hat.top)], draw(), draw())


def _exact_order(f, step, bound):
    current = f
    for k in range(1, bound + 1):
        current = step(current)
        if current == f:
            return k
    return None


def bridge_check(mp, samples=100, seed=0, debug=False):
    """Checks the piecewise-linear level against the combinatorial and birational levels."""
    hat = mp.hat
    p = mp.poset
    h = mp.coxeter_number
    counterexamples = []

    characteristic = True
    for ideal in enumerate_ideals(p):
        target = rowmotion(p, ideal)
        if pl_rowmotion(chi_plus(hat, ideal), "+") != chi_plus(hat, target):
            characteristic = False
            counterexamples.append({"check": "characteristic_plus", "ideal": ideal})
        if pl_rowmotion(chi_minus(hat, ideal), "-") != chi_minus(hat, target):
            characteristic = False
            counterexamples.append({"check": "characteristic_minus", "ideal": ideal})

    rng = np.random.default_rng(seed)
    order = tuple(range(1, mp.rank_n + 1))
    orders = {"+": [], "-": []}
    coxeter_orders = {"+": [], "-": []}
    reciprocity = True
    tropical_engine = True

    for trial in range(samples):
        f = random_pl_state(hat, rng)
        for sign in ("+", "-"):
            k = _exact_order(f, lambda g: pl_rowmotion(g, sign), h)
            orders[sign].append(k)
            if k is None:
                counterexamples.append({"check": "order", "sign": sign, "trial": trial})

            k = _exact_order(f, lambda g: pl_coxeter_motion(mp, g, order, sign), h)
            coxeter_orders[sign].append(k)
            if k is None:
                counterexamples.append({"check": "coxeter_order", "sign": sign, "trial": trial})

            iterates = [f]
            for _ in range(mp.height):
                iterates.append(pl_rowmotion(iterates[-1], sign))
            for v in range(len(p)):
                if iterates[mp.ranks[v]][v] + f[mp.involution[v]] != f.A + f.B:
                    reciprocity = False
                    counterexamples.append({"check": "reciprocity", "sign": sign, "trial": trial, "vertex": v})
                    break

            if from_tropical(browmotion(to_tropical(f, sign))) != iterates[1]:
                tropical_engine = False
                counterexamples.append({"check": "tropical_engine", "sign": sign, "trial": trial})

        if debug:
            print("{}: bridge trial {} done".format(mp.name, trial), file=sys.stderr)

    def exact(found):
        return all(k is not None for k in found) and reduce(ilcm, found, 1) == h

    report = {"poset": mp.name,
              "samples": samples,
              "seed": seed,
              "characteristic": characteristic,
              "order": {sign: exact(found) for sign, found in orders.items()},
              "coxeter_order": {sign: exact(found) for sign, found in coxeter_orders.items()},
              "reciprocity": reciprocity,
              "tropical_engine": tropical_engine,
              "counterexamples": counterexamples}
    passed = (characteristic and reciprocity and tropical_engine
              and all(report["order"].values()) and all(report["coxeter_order"].values()))
    report["status"] = "PASS" if passed else "FAIL"
    return report
