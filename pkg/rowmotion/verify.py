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

import itertools
import sys
import time
from collections import OrderedDict, namedtuple
from fractions import Fraction

import numpy as np
import sympy

from .birational import (ContractError, Labeling, Trajectory, coxeter_motion, delta_map, diamond_oracle,
                         numeric_state, phi, phi_prime, psi, sample_positive, sigma, symbolic_state)
from .catalog import build_minuscule, file_decomposition, pairing_data
from .posets import HatPoset, from_coordinates
from .ratfun import DEFAULT_TRIALS, VarTable


EXACT_MAX_ELEMENTS = 16

THEOREMS = ("periodicity", "reciprocity", "file_homomesy", "coxeter_periodicity", "coxeter_homomesy",
            "hopkins", "rel_phi_prime", "rel_phi", "half_period_conjecture", "ab_reduction")

EXACT_ONLY = ("phi_prime_laurent",)

CONJECTURES = ("half_period_conjecture",)

State = namedtuple("State", ["F", "one", "witness"])


class Report:
    """Outcome of one (theorem, poset, mode) run, aggregated per sub-identity."""

    def __init__(self, poset, theorem, mode, seed=None, trials=None):
        self.poset = poset
        self.theorem = theorem
        self.mode = mode
        self.seed = seed
        self.trials = trials
        self.checks = OrderedDict()
        self.witness = None
        self._start = time.perf_counter()

    def check(self, identity, passed, witness=None, **details):
        counts = self.checks.setdefault(identity, [0, 0])
        counts[1] += 1
        if passed:
            counts[0] += 1
        elif self.witness is None:
            self.witness = dict(witness or {}, identity=identity, **details)
        return passed

    @property
    def passed(self):
        return all(ok == total for ok, total in self.checks.values())

    def record(self):
        out = OrderedDict([("poset", self.poset),
                           ("theorem", self.theorem),
                           ("kind", "conjecture" if self.theorem in CONJECTURES else "theorem"),
                           ("mode", self.mode),
                           ("status", "PASS" if self.passed else "FAIL"),
                           ("seed", self.seed),
                           ("trials", self.trials),
                           ("elapsed_ms", int(round(1000 * (time.perf_counter() - self._start)))),
                           ("checks", [OrderedDict([("identity", name),
                                                    ("status", "PASS" if ok == total else "FAIL"),
                                                    ("passed", ok),
                                                    ("total", total)])
                                       for name, (ok, total) in self.checks.items()])])
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def resolve_mode(mp, mode="auto"):
    if mode == "auto":
        return "exact" if len(mp) <= EXACT_MAX_ELEMENTS else "probabilistic"
    if mode == "prob":
        return "probabilistic"
    if mode not in ("exact", "probabilistic"):
        raise ContractError("unknown mode: {}".format(mode))
    return mode


def states(hat, mode, seed=0, trials=DEFAULT_TRIALS, variables="Z", boundary=True):
    """One symbolic state in exact mode, ``trials`` seeded positive rational states otherwise."""
    if mode == "exact":
        table, F = symbolic_state(hat, variables, boundary=boundary)
        yield State(F, table.one, {})
    else:
        rng = np.random.default_rng(seed)
        for trial in range(trials):
            F = numeric_state(hat, rng, boundary=boundary)
            yield State(F, Fraction(1), {"trial": trial, "point": [str(x) for x in F.values]})


def maximal_divisors(h):
    return [h // q for q in sympy.primefactors(h)]


def _exponent(value):
    value = Fraction(value)
    if value.denominator != 1:
        raise ContractError("non-integral exponent {}".format(value))
    return int(value)


def _orderings(mp, seed):
    n = mp.rank_n
    if n <= 4:
        return list(itertools.permutations(range(1, n + 1)))
    rng = np.random.default_rng(seed)
    return [tuple(int(a) + 1 for a in rng.permutation(n)) for _ in range(5)]


def _homomesy_targets(mp, A, B):
    pairings = pairing_data(mp.lie)
    h = mp.coxeter_number
    return {alpha: A ** _exponent(h * pairings.dual_weight[alpha]) * B ** _exponent(h * pairings.weight[alpha])
            for alpha in range(1, mp.rank_n + 1)}


def _check_order(mp, trajectory, F, report, witness, label=""):
    h = mp.coxeter_number
    report.check("{}^h = id".format(label), trajectory[h] == F, witness,
                 vertex=trajectory[h].first_difference(F), iterate=h)
    for d in maximal_divisors(h):
        report.check("{}^{} != id".format(label, d), trajectory[d] != F, witness, iterate=d)


def check_periodicity(mp, state, report):
    F, witness = state.F, state.witness
    trajectory = Trajectory(F)
    _check_order(mp, trajectory, F, report, witness, "rho")
    AB = F.A * F.B
    for v in range(len(mp)):
        w = mp.involution[v]
        report.check("reciprocity composed to rho^h",
                     trajectory[mp.coxeter_number][w] * trajectory[mp.ranks[v]][v] == AB,
                     witness, vertex=v)


def check_reciprocity(mp, state, report):
    F, witness = state.F, state.witness
    trajectory = Trajectory(F)
    AB = F.A * F.B
    for v in range(len(mp)):
        k = mp.ranks[v]
        report.check("(rho^rank(v) F)(v) F(iota v) = AB", trajectory[k][v] * F[mp.involution[v]] == AB,
                     witness, vertex=v, iterate=k)


def _check_file_homomesy(mp, trajectory, F, report, witness, label):
    targets = _homomesy_targets(mp, F.A, F.B)
    for alpha, target in targets.items():
        product = F.A ** 0
        for k in range(mp.coxeter_number):
            product = product * phi(mp, trajectory[k], alpha)
        report.check("{} alpha={}".format(label, alpha), product == target, witness, root=alpha)


def check_file_homomesy(mp, state, report):
    _check_file_homomesy(mp, Trajectory(state.F), state.F, report, state.witness, "rowmotion")


def _coxeter_trajectories(mp, F, seed):
    for order in _orderings(mp, seed):
        label = "gamma[{}]".format(",".join(map(str, order)))
        yield label, order, Trajectory(F, lambda G, order=order: coxeter_motion(mp, G, order))


def check_coxeter_periodicity(mp, state, report):
    for label, order, trajectory in _coxeter_trajectories(mp, state.F, report.seed):
        _check_order(mp, trajectory, state.F, report, dict(state.witness, order=list(order)), label)


def check_coxeter_homomesy(mp, state, report):
    for label, order, trajectory in _coxeter_trajectories(mp, state.F, report.seed):
        _check_file_homomesy(mp, trajectory, state.F, report, dict(state.witness, order=list(order)), label)


def check_hopkins(mp, state, report):
    F = state.F
    trajectory = Trajectory(F)
    product = F.A ** 0
    for k in range(mp.coxeter_number):
        product = product * psi(trajectory[k])
    report.check("prod Psi = (A/B)^#P", product == (F.A / F.B) ** len(mp), state.witness)


def _extremal_roots(mp):
    p = mp.poset
    return mp.coloring[p.maximal[0]], mp.coloring[p.minimal[0]]


def _kronecker(F, alpha, alpha_max, alpha_min, power=1):
    out = F.A ** 0
    if alpha == alpha_max:
        out = out * F.A ** power
    if alpha == alpha_min:
        out = out * F.B ** power
    return out


def _shift(mp, alpha, beta):
    """1 if v_0^beta lies above v_0^alpha, 0 if below."""
    a, b = mp.file(alpha)[0], mp.file(beta)[0]
    if mp.poset.less_than(a, b):
        return 1
    if mp.poset.less_than(b, a):
        return 0
    raise ContractError("file minima of roots {} and {} are incomparable".format(alpha, beta))


def check_rel_phi_prime(mp, state, report):
    F = state.F
    trajectory = Trajectory(F)
    cartan = mp.cartan.cartan
    alpha_max, alpha_min = _extremal_roots(mp)
    for alpha in range(1, mp.rank_n + 1):
        lhs = phi_prime(mp, trajectory, alpha, 0) * phi_prime(mp, trajectory, alpha, 1)
        rhs = _kronecker(F, alpha, alpha_max, alpha_min)
        for beta in mp.cartan.dynkin.neighbors(alpha):
            m = _shift(mp, alpha, beta)
            rhs = rhs * phi_prime(mp, trajectory, beta, m) ** int(-cartan[alpha - 1, beta - 1])
        report.check("Phi' relation alpha={}".format(alpha), lhs == rhs, state.witness, root=alpha)


def check_rel_phi(mp, state, report):
    F = state.F
    h = mp.coxeter_number
    trajectory = Trajectory(F)
    cartan = mp.cartan.cartan
    alpha_max, alpha_min = _extremal_roots(mp)
    alphas = range(1, mp.rank_n + 1)

    totals = {}
    for beta in alphas:
        product = F.A ** 0
        for k in range(h):
            product = product * phi(mp, trajectory[k], beta)
        totals[beta] = product

    for alpha in alphas:
        lhs = F.A ** 0
        for beta in alphas:
            if cartan[alpha - 1, beta - 1]:
                lhs = lhs * totals[beta] ** int(cartan[alpha - 1, beta - 1])
        rhs = _kronecker(F, alpha, alpha_max, alpha_min, power=h)
        report.check("period product relation alpha={}".format(alpha), lhs == rhs, state.witness, root=alpha)

        moved = sigma(mp, F, alpha)
        rhs = _kronecker(F, alpha, alpha_max, alpha_min)
        for beta in mp.cartan.dynkin.neighbors(alpha):
            rhs = rhs * phi(mp, F, beta) ** int(-cartan[alpha - 1, beta - 1])
        report.check("sigma relation alpha={}".format(alpha), phi(mp, F, alpha) * phi(mp, moved, alpha) == rhs,
                     state.witness, root=alpha)
        for beta in alphas:
            if beta != alpha:
                report.check("sigma invariance alpha={}".format(alpha), phi(mp, moved, beta) == phi(mp, F, beta),
                             state.witness, root=alpha, other=beta)


def check_half_period(mp, state, report):
    F = state.F
    G = delta_map(mp, F)
    AB = F.A * F.B
    for v in range(len(mp)):
        report.check("(delta F)(v) F(iota v) = AB", G[v] * F[mp.involution[v]] == AB, state.witness, vertex=v)


def check_ab_reduction(mp, state, report):
    F, one = state.F, state.one
    general = Trajectory(F)
    unit = Trajectory(F.with_boundary(one, one))
    n = mp.height
    for k in range(1, n + 2):
        for v in range(len(mp)):
            rank = mp.ranks[v]
            if k <= rank - 1:
                factor, case = F.A, "A"
            elif k == rank:
                factor, case = F.A * F.B, "AB"
            elif k <= n:
                factor, case = F.B, "B"
            else:
                factor, case = one, "1"
            report.check("factor {}".format(case), general[k][v] == unit[k][v] * factor,
                         state.witness, vertex=v, iterate=k)


def check_phi_prime_laurent(mp, state, report):
    trajectory = Trajectory(state.F)
    for alpha in range(1, mp.rank_n + 1):
        for k in range(mp.coxeter_number):
            report.check("Laurent alpha={}".format(alpha),
                         phi_prime(mp, trajectory, alpha, k).is_laurent_monomial(),
                         state.witness, root=alpha, iterate=k)


CHECKS = {"periodicity": check_periodicity,
          "reciprocity": check_reciprocity,
          "file_homomesy": check_file_homomesy,
          "coxeter_periodicity": check_coxeter_periodicity,
          "coxeter_homomesy": check_coxeter_homomesy,
          "hopkins": check_hopkins,
          "rel_phi_prime": check_rel_phi_prime,
          "rel_phi": check_rel_phi,
          "half_period_conjecture": check_half_period,
          "ab_reduction": check_ab_reduction,
          "phi_prime_laurent": check_phi_prime_laurent}


def verify(mp, theorem, mode="auto", seed=0, trials=DEFAULT_TRIALS, variables="Z", debug=False):
    """Checks one theorem on one minuscule poset and returns the report record."""
    if theorem not in CHECKS:
        raise ContractError("unknown theorem: {}".format(theorem))
    mode = resolve_mode(mp, mode)
    if theorem in EXACT_ONLY and (mode != "exact" or variables != "Z"):
        raise ContractError("{} needs exact mode in the Z variables".format(theorem))

    # the seed also draws the Coxeter orderings
    report = Report(mp.name, theorem, mode, seed, trials if mode != "exact" else None)
    for state in states(mp.hat, mode, seed, trials, variables):
        CHECKS[theorem](mp, state, report)
        if debug:
            print("{} {} {}: {}".format(mp.name, theorem, state.witness.get("trial", "symbolic"),
                                        "PASS" if report.passed else "FAIL"), file=sys.stderr)
    return report.record()


def diamond_check(mp, debug=False):
    """Closed-form diamond values against the engine, exact, A = B = 1."""
    report = Report(mp.name, "diamond_oracle", "exact")
    table, F = symbolic_state(mp.hat, "Z", boundary=False)
    trajectory = Trajectory(F)
    for v in range(len(mp)):
        for k in range(mp.ranks[v] + 1):
            report.check("oracle", trajectory[k][v] == diamond_oracle(mp, k, v, table), vertex=v, iterate=k)
    if debug:
        print("{} diamond oracle: {}".format(mp.name, "PASS" if report.passed else "FAIL"), file=sys.stderr)
    return report.record()


def doubling_factor(r, i, j, k):
    if k <= i + j:
        return Fraction(1, 2)
    if k == i + j + 1:
        return Fraction(1)
    if k <= 2 * r + 1:
        return Fraction(2)
    return Fraction(1)


def doubling_check(r, mode="exact", seed=0, trials=DEFAULT_TRIALS, debug=False):
    """Shifted staircase of parameter r against the symmetrized (r+1)x(r+1) rectangle, A = B = 1."""
    mode = "probabilistic" if mode == "prob" else mode
    staircase = [(i, j) for j in range(r + 1) for i in range(j + 1)]
    square = [(i, j) for i in range(r + 1) for j in range(r + 1)]
    small = HatPoset(from_coordinates(staircase))
    large = HatPoset(from_coordinates(square))
    s_index = {c: k for k, c in enumerate(staircase)}

    name = "staircase{}".format(r)
    report = Report(name, "doubling", mode, *((seed, trials) if mode != "exact" else ()))

    if mode == "exact":
        table = VarTable(["X{}".format(k) for k in range(len(staircase))] + ["A", "B"])
        runs = [([table["X{}".format(k)] for k in range(len(staircase))], table.one, {})]
    else:
        rng = np.random.default_rng(seed)
        runs = []
        for trial in range(trials):
            values = [sample_positive(rng) for _ in staircase]
            runs.append((values, Fraction(1), {"trial": trial, "point": [str(x) for x in values]}))

    for values, one, witness in runs:
        F = Labeling.from_elements(small, values, one, one)
        G = Labeling.from_elements(large, [values[s_index[(min(c), max(c))]] for c in square], one, one)
        left, right = Trajectory(F), Trajectory(G)
        for k in range(1, 2 * r + 3):
            for t, (i, j) in enumerate(square):
                if i > j:
                    continue
                factor = doubling_factor(r, i, j, k)
                report.check("factor {}".format(factor), left[k][s_index[(i, j)]] == right[k][t] * factor,
                             witness, vertex=[i, j], iterate=k)
    if debug:
        print("{} doubling: {}".format(name, "PASS" if report.passed else "FAIL"), file=sys.stderr)
    return report.record()


def local_identity_check(mp, alpha, mode="auto", seed=0, trials=DEFAULT_TRIALS, debug=False):
    """Rowmotion and σ_α product identities on every G_m / H_m component of the file of α."""
    mode = resolve_mode(mp, mode)
    report = Report(mp.name, "local_identity alpha={}".format(alpha), mode,
                    *((seed, trials) if mode != "exact" else ()))
    components = file_decomposition(mp, alpha)
    for state in states(mp.hat, mode, seed, trials):
        F = state.F
        trajectory = Trajectory(F)
        moved = sigma(mp, F, alpha)
        for c in components:
            lhs = F.A ** 0
            sigma_lhs = F.A ** 0
            for i, x in enumerate(c.blacks, 1):
                lhs = lhs * trajectory[i - 1][x] * trajectory[i][x]
                sigma_lhs = sigma_lhs * F[x] * moved[x]
            rhs = F[c.u] * trajectory[c.m][c.v]
            sigma_rhs = F[c.u] * F[c.v]
            for i in range(1, c.m):
                if c.shape == "G":
                    rhs = rhs * trajectory[i][c.y[i - 1]] * trajectory[i][c.z[i - 1]]
                    sigma_rhs = sigma_rhs * F[c.y[i - 1]] * F[c.z[i - 1]]
                else:
                    rhs = rhs * trajectory[i][c.y[i - 1]] ** 2
                    sigma_rhs = sigma_rhs * F[c.y[i - 1]] ** 2
            report.check("rowmotion {}".format(c.label), lhs == rhs, state.witness, blacks=list(c.blacks))
            report.check("sigma {}".format(c.label), sigma_lhs == sigma_rhs, state.witness, blacks=list(c.blacks))
    if debug:
        print("{} local identities alpha={}: {}".format(mp.name, alpha, "PASS" if report.passed else "FAIL"),
              file=sys.stderr)
    return report.record()


def exit_status(records):
    """0 if every theorem record passed, 1 otherwise; conjecture records never fail the run."""
    failed = [r for r in records if r["status"] == "FAIL" and r.get("kind") != "conjecture"]
    return 1 if failed else 0


def verify_many(lie_types, theorems, mode="auto", seed=0, trials=DEFAULT_TRIALS, variables="Z", debug=False):
    records = []
    for lie in lie_types:
        mp = build_minuscule(lie)
        for theorem in theorems:
            records.append(verify(mp, theorem, mode, seed, trials, variables, debug))
    return records


