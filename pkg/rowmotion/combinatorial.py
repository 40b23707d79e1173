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

from sympy import ilcm

from .catalog import pairing_data
from .posets import enumerate_ideals, linear_extension, members


def toggle(p, ideal, v):
    bit = 1 << v
    if ideal & bit:
        if any((ideal >> w) & 1 for w in p.uppers[v]):
            return ideal
        return ideal & ~bit
    if all((ideal >> w) & 1 for w in p.lowers[v]):
        return ideal | bit
    return ideal


def rowmotion(p, ideal):
    """Order ideal generated by the minimal elements of the complement."""
    complement = p.full & ~ideal
    generators = [v for v in members(complement) if not any((complement >> w) & 1 for w in p.lowers[v])]
    return p.ideal_generated_by(generators)


def rowmotion_by_toggles(p, ideal, extension=None):
    if extension is None:
        extension = linear_extension(p)
    for v in reversed(extension):
        ideal = toggle(p, ideal, v)
    return ideal


def coxeter_motion(mp, ideal, order):
    """Toggles every element of P^α for α in ``order``, first entry first."""
    for alpha in order:
        for v in mp.file(alpha):
            ideal = toggle(mp.poset, ideal, v)
    return ideal


def orbits(ideals, step):
    """Orbits of a bijection, each starting at its smallest ideal."""
    seen = set()
    out = []
    for start in sorted(ideals):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        current = step(start)
        while current != start:
            orbit.append(current)
            seen.add(current)
            current = step(current)
        out.append(orbit)
    return out


def orbit_stats(mp, order=None, debug=False):
    """Orbit structure of rowmotion (or of the Coxeter-motion for ``order``) and the file averages.

    Parameters
    ----------
    mp : MinusculePoset
    order : sequence of simple roots, optional
        Use the combinatorial Coxeter-motion with this root ordering instead of rowmotion.

    Returns
    -------
    dict
        order, orbit lengths, per-file orbit averages and the PASS/FAIL flags for periodicity,
        file homomesy and (rowmotion only) reciprocity.
    """
    p = mp.poset
    ideals = list(enumerate_ideals(p))
    if order is None:
        image = {ideal: rowmotion(p, ideal) for ideal in ideals}
    else:
        image = {ideal: coxeter_motion(mp, ideal, order) for ideal in ideals}

    found = orbits(ideals, image.__getitem__)
    lengths = [len(orbit) for orbit in found]
    period = reduce(ilcm, lengths, 1)
    if debug:
        print("{}: {} ideals, {} orbits, order {}".format(mp.name, len(ideals), len(found), period),
              file=sys.stderr)

    expected = pairing_data(mp.lie).weight
    averages = {}
    for alpha in range(1, mp.rank_n + 1):
        mask = sum(1 << v for v in mp.file(alpha))
        averages[alpha] = [Fraction(sum(bin(ideal & mask).count("1") for ideal in orbit), len(orbit))
                           for orbit in found]
    homomesy = all(avg == expected[alpha] for alpha, values in averages.items() for avg in values)

    empty_orbit = next(len(orbit) for orbit in found if orbit[0] == 0)

    report = {"poset": mp.name,
              "map": "rowmotion" if order is None else "coxeter {}".format(list(order)),
              "ideals": len(ideals),
              "order": period,
              "coxeter_number": mp.coxeter_number,
              "orbit_lengths": lengths,
              "empty_orbit_length": empty_orbit,
              "averages": averages,
              "expected": dict(expected),
              "periodicity": period == mp.coxeter_number and (order is not None or empty_orbit == period),
              "homomesy": homomesy}

    if order is None:
        report["reciprocity"] = reciprocity_holds(mp, image)
    return report


def reciprocity_holds(mp, image):
    """v ∈ R^{rank v}(I) iff ι(v) ∉ I, for every ideal I and element v."""
    for ideal in image:
        current = ideal
        for k in range(1, mp.height + 1):
            current = image[current]
            for v in range(len(mp)):
                if mp.ranks[v] != k:
                    continue
                if bool((current >> v) & 1) == bool((ideal >> mp.involution[v]) & 1):
                    return False
    return True
