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

import hashlib
import json
import sys
from collections import OrderedDict

import pandas as pd

from .catalog import build_minuscule, catalog_entries
from .posets import enumerate_ideals


def poset_to_dot(mp, name=None):
    """Hasse diagram in DOT, nodes labeled "index:color" and aligned by rank."""
    out = "digraph {} {{\n".format(name or mp.name)
    out += "  rankdir=BT;\n"
    for v in range(len(mp)):
        out += '  {} [label="{}:{}"];\n'.format(v, v, mp.coloring[v])
    for lower, upper in mp.poset.covers:
        out += "  {} -> {};\n".format(lower, upper)
    for rank in range(1, mp.height + 1):
        level = [str(v) for v in range(len(mp)) if mp.ranks[v] == rank]
        out += "  {{rank=same; {};}}\n".format("; ".join(level))
    out += "}\n"
    return out


def poset_to_dict(mp):
    family, n, r = mp.lie
    return OrderedDict([
        ("family", family),
        ("n", n),
        ("weight", r),
        ("elements", [OrderedDict([("id", v),
                                   ("coord", list(mp.embedding[v])),
                                   ("color", mp.coloring[v]),
                                   ("rank", mp.ranks[v])]) for v in range(len(mp))]),
        ("covers", [list(c) for c in mp.poset.covers]),
        ("involution", list(mp.involution)),
        ("coxeter_number", mp.coxeter_number)])


def poset_to_json(mp):
    return json.dumps(poset_to_dict(mp), indent=2) + "\n"


def catalog_table(max_rank=7):
    rows = []
    for lie in catalog_entries(max_rank):
        mp = build_minuscule(lie)
        rows.append(OrderedDict([("family", lie.family),
                                 ("n", lie.rank_n),
                                 ("weight", lie.weight_index),
                                 ("elements", len(mp)),
                                 ("ideals", sum(1 for _ in enumerate_ideals(mp.poset))),
                                 ("coxeter_number", mp.coxeter_number)]))
    return pd.DataFrame(rows, columns=["family", "n", "weight", "elements", "ideals", "coxeter_number"])


def records_to_json(records):
    return json.dumps(records, indent=2, default=str) + "\n"


def report_digest(records):
    """SHA-256 of the report records with the elapsed_ms fields left out."""
    stripped = [{k: v for k, v in record.items() if k != "elapsed_ms"} for record in records]
    return hashlib.sha256(json.dumps(stripped, sort_keys=True, default=str).encode("utf-8")).hexdigest()


def write_output(text, path=None):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(text)
