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

"""Exact multivariate rational functions over the integers.

Polynomials are sparse sympy ring elements over ZZ with graded lexicographic order. A
RatFun keeps a numerator and a nonzero denominator, with integer content divided out
and the leading coefficient of the denominator positive. Reduced operands give
reduced results: products cancel crosswise before multiplying, and sums only cancel
against the gcd of the two denominators. Other fractions take the full multivariate
GCD once they grow beyond ``gcd_threshold`` terms.
"""

from fractions import Fraction

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring as poly_ring


GCD_THRESHOLD = 64
DEFAULT_TRIALS = 20
EQUALITY_SAMPLE_RANGE = 2 ** 31


class ZeroDenominatorError(ZeroDivisionError):
    pass


class RetryExhaustedError(RuntimeError):
    pass


class VarTable:
    """Fixed ordered set of variable names shared by every RatFun of a computation."""

    def __init__(self, names, gcd_threshold=GCD_THRESHOLD):
        names = tuple(names)
        if not names:
            raise ValueError("a variable table needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names are not unique: {}".format(names))
        self.names = names
        self.index = {name: k for k, name in enumerate(names)}
        self.ring = poly_ring(names, ZZ, grlex)[0]
        self.gcd_threshold = gcd_threshold
        self.one = RatFun(self, self.ring.one)
        self.zero = RatFun(self, self.ring.zero)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return "VarTable({})".format(", ".join(self.names))

    def __getitem__(self, name):
        return RatFun(self, self.ring.gens[self.index[name]])

    def gens(self):
        return [RatFun(self, g) for g in self.ring.gens]

    def constant(self, value):
        value = Fraction(value)
        return RatFun(self, self.ring(value.numerator), self.ring(value.denominator))


def _evaluate(poly, values, one):
    total = one * 0
    powers = {}
    for monom, coeff in poly.items():
        term = one * int(coeff)
        for k, e in enumerate(monom):
            if not e:
                continue
            if values[k] is None:
                raise ValueError("no value for variable number {}".format(k))
            if (k, e) not in powers:
                powers[(k, e)] = values[k] ** e
            term = term * powers[(k, e)]
        total = total + term
    return total


def _cancel(p, q):
    """p / gcd(p, q) and q / gcd(p, q)."""
    if p.is_ground or q.is_ground:
        return p, q
    _, p, q = p.cofactors(q)
    return p, q


class RatFun:

    __slots__ = ("table", "num", "den", "coprime")

    def __init__(self, table, num, den=None, reduce=False, coprime=False):

        ring = table.ring
        if den is None:
            den = ring.one
        if not den:
            raise ZeroDenominatorError("zero denominator")

        if not num:
            den = ring.one
            coprime = True
        else:
            g = ZZ.gcd(num.content(), den.content())
            if g != 1:
                num = num.quo_ground(g)
                den = den.quo_ground(g)
            if not coprime and (reduce or len(num) + len(den) > table.gcd_threshold):
                _, num, den = num.cofactors(den)
                coprime = True

        if den.LC < 0:
            num, den = -num, -den

        self.table = table
        self.num = num
        self.den = den
        self.coprime = coprime or den.is_ground or num.is_ground

    def _coerce(self, other):
        if isinstance(other, RatFun):
            if other.table is not self.table:
                raise ValueError("rational functions over different variable tables")
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.constant(other)
        return NotImplemented

    def __repr__(self):
        if self.den == 1:
            return str(self.num.as_expr())
        return "({})/({})".format(self.num.as_expr(), self.den.as_expr())

    def __bool__(self):
        return bool(self.num)

    def __neg__(self):
        return RatFun(self.table, -self.num, self.den, coprime=self.coprime)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not (self.coprime and other.coprime):
            if self.den == other.den:
                return RatFun(self.table, self.num + other.num, self.den)
            return RatFun(self.table, self.num * other.den + other.num * self.den, self.den * other.den)
        # reduced operands: only factors of gcd(den, den) can cancel
        g, a, b = self.den.cofactors(other.den)
        num = self.num * b + other.num * a
        num, g = _cancel(num, g)
        return RatFun(self.table, num, a * b * g, coprime=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not (self.num and other.num):
            return self.table.zero
        # cancel crosswise on the operands before forming the product
        a_num, b_den = _cancel(self.num, other.den)
        b_num, a_den = _cancel(other.num, self.den)
        return RatFun(self.table, a_num * b_num, a_den * b_den, coprime=self.coprime and other.coprime)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDenominatorError("inverse of the zero function")
        return RatFun(self.table, self.den, self.num, coprime=self.coprime)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        return RatFun(self.table, self.num ** exponent, self.den ** exponent, coprime=self.coprime)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def reduced(self):
        if self.coprime:
            return self
        return RatFun(self.table, self.num, self.den, reduce=True)

    def is_laurent_monomial(self):
        r = self.reduced()
        return len(r.num) == 1 and len(r.den) == 1

    def is_subtraction_free(self):
        return all(c > 0 for c in self.num.itercoeffs()) and all(c > 0 for c in self.den.itercoeffs())

    def evaluate(self, point):
        """Exact value at a point given as a sequence or as a name -> value mapping."""
        if isinstance(point, dict):
            point = [point[name] for name in self.table.names]
        values = [Fraction(x) for x in point]
        den = _evaluate(self.den, values, Fraction(1))
        if den == 0:
            raise ZeroDenominatorError("denominator vanishes at {}".format(point))
        return _evaluate(self.num, values, Fraction(1)) / den

    def substitute(self, sigma, target=None):
        return substitute(self, sigma, target)


def substitute(f, sigma, target=None):
    """Composes f with sigma: variable name -> value in ``target`` (defaults to f's own table).

    Variables that sigma leaves out stay unchanged when target is f's table.
    """
    target = f.table if target is None else target
    values = []
    for name in f.table.names:
        if name in sigma:
            value = sigma[name]
            values.append(value if isinstance(value, RatFun) else target.constant(value))
        elif target is f.table:
            values.append(target[name])
        else:
            values.append(None)
    num = _evaluate(f.num, values, target.one)
    den = _evaluate(f.den, values, target.one)
    if not den:
        raise ZeroDenominatorError("substitution gives a zero denominator")
    return num / den


def sample_point(rng, size, high=EQUALITY_SAMPLE_RANGE):
    return [int(x) for x in rng.integers(1, high, size=size, endpoint=True)]


def ratfun_equal(f, g, mode="exact", seed=0, trials=DEFAULT_TRIALS):
    """Exact equality by cross-multiplication, or a seeded Schwartz-Zippel test.

    In probabilistic mode points whose denominators vanish are skipped; if every point is
    skipped RetryExhaustedError is raised.
    """
    if not isinstance(g, RatFun):
        g = f.table.constant(g)
    if mode == "exact":
        return f == g
    if mode not in ("probabilistic", "prob"):
        raise ValueError("unknown equality mode: {}".format(mode))

    rng = np.random.default_rng(seed)
    evaluated = 0
    for _ in range(trials):
        point = sample_point(rng, len(f.table))
        try:
            a = f.evaluate(point)
            b = g.evaluate(point)
        except ZeroDenominatorError:
            continue
        evaluated += 1
        if a != b:
            return False
    if not evaluated:
        raise RetryExhaustedError("all {} sample points hit a zero denominator".format(trials))
    return True
