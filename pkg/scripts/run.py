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


import os
import sys
import time

sys.path.append(os.path.join(".."))
from rowmotion.auxiliary import records_to_json, report_digest, write_output
from rowmotion.catalog import build_minuscule, catalog_entries, lie_name
from rowmotion.combinatorial import orbit_stats
from rowmotion.piecewise import bridge_check
from rowmotion.verify import THEOREMS, diamond_check, doubling_check, exit_status, verify_many


def combinatorial_sweep(max_rank=7, orders=((1, 2, 3), (3, 2, 1), (2, 1, 3))):
    print("==================================")
    print("Combinatorial rowmotion, rank <= {}".format(max_rank))
    print("==================================")
    failed = []
    for lie in catalog_entries(max_rank):
        mp = build_minuscule(lie)
        reports = [orbit_stats(mp)]
        for order in orders:
            if sorted(order) == list(range(1, mp.rank_n + 1)):
                reports.append(orbit_stats(mp, order))
        for report in reports:
            ok = report["periodicity"] and report["homomesy"] and report.get("reciprocity", True)
            print(lie_name(lie), report["map"], report["ideals"], report["order"], "PASS" if ok else "FAIL")
            if not ok:
                failed.append(report)
    return failed


def bridge_sweep(lie_types=(("A", 3, 2), ("B", 3, 3), ("C", 3, 1), ("D", 4, 1)), samples=100, seed=0):
    print("==================================")
    print("Piecewise-linear bridge")
    print("==================================")
    reports = []
    for lie in lie_types:
        report = bridge_check(build_minuscule(lie), samples, seed)
        print(lie_name(lie), report["status"])
        reports.append(report)
    return reports


def birational_sweep(max_rank=5, mode="auto", seed=0, trials=20, path_out="results/birational.json"):
    print("==================================")
    print("Birational identities, rank <= {}, mode {}".format(max_rank, mode))
    print("==================================")
    records = verify_many(catalog_entries(max_rank), THEOREMS, mode, seed, trials, debug=True)
    records += [diamond_check(build_minuscule(("D", n, 1))) for n in range(4, max_rank + 1)]
    records += [doubling_check(r) for r in (1, 2)]
    records.append(doubling_check(3, "prob", seed, trials))
    write_output(records_to_json(records), path_out)
    print("digest", report_digest(records))
    print("exit status", exit_status(records))
    return records


def benchmark(lie=("E", 6, 6), theorems=("periodicity", "reciprocity", "file_homomesy")):
    print("==================================")
    print("Exact benchmark {}".format(lie_name(lie)))
    print("==================================")
    mp = build_minuscule(lie)
    for theorem in theorems:
        start = time.time()
        record = verify_many([lie], [theorem], "exact")[0]
        print(theorem, record["status"], "{:.1f}s".format(time.time() - start), len(mp))


if __name__ == "__main__":
    os.makedirs("results", exist_ok=True)
    combinatorial_sweep()
    bridge_sweep()
    birational_sweep()
    benchmark()
