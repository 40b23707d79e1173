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

import argparse
import multiprocessing
import sys

from rowmotion import __version__

from . import auxiliary
from .birational import ContractError
from .catalog import CatalogError, LieType, build_minuscule
from .combinatorial import orbit_stats
from .ratfun import DEFAULT_TRIALS
from .verify import THEOREMS, exit_status, verify


def _lie_arguments(parser):
    parser.add_argument('-t', '--type', dest='family', choices=['A', 'B', 'C', 'D', 'E'], required=True,
                        help="Family of the root system.")
    parser.add_argument('-n', '--n', type=int, required=True,
                        help="Rank of the root system.")
    parser.add_argument('-w', '--weight', type=int, required=True,
                        help="Index r of the minuscule fundamental weight.")


def _run_job(job):
    lie, theorem, mode, seed, trials, variables, debug = job
    return verify(build_minuscule(lie), theorem, mode, seed, trials, variables, debug)


def run(args):

    if args.step == "catalog":
        table = auxiliary.catalog_table(args.max_rank)
        if args.format == "json":
            text = table.to_json(orient="records", indent=2) + "\n"
        else:
            text = table.to_string(index=False) + "\n"
        auxiliary.write_output(text, args.out)
        return 0

    lie = LieType(args.family, args.n, args.weight)
    mp = build_minuscule(lie)

    if args.step == "export":
        text = auxiliary.poset_to_dot(mp) if args.format == "dot" else auxiliary.poset_to_json(mp)
        auxiliary.write_output(text, args.out)
        return 0

    if args.step == "orbits":
        order = None
        if args.coxeter:
            order = tuple(int(a) for a in args.coxeter.split(","))
            if sorted(order) != list(range(1, mp.rank_n + 1)):
                raise ContractError("{} is not an ordering of the simple roots".format(args.coxeter))
        report = orbit_stats(mp, order, debug=args.debug)
        auxiliary.write_output(auxiliary.records_to_json([report]), args.out)
        return 0 if report["periodicity"] and report["homomesy"] and report.get("reciprocity", True) else 1

    theorems = list(THEOREMS) if args.all or not args.theorem else args.theorem
    mode = args.mode or "auto"
    jobs = [(lie, theorem, mode, args.seed, args.trials, args.variables, args.debug) for theorem in theorems]
    if args.processes > 1:
        with multiprocessing.Pool(args.processes) as pool:
            records = pool.map(_run_job, jobs)
    else:
        records = [_run_job(job) for job in jobs]
    auxiliary.write_output(auxiliary.records_to_json(records), args.out)
    return exit_status(records)


def main(argv=None):

    print("Executing rowmotion version %s." % __version__, file=sys.stderr)

    parser = argparse.ArgumentParser(description='Rowmotion and Coxeter-motion on minuscule posets',
                                     formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    subparsers = parser.add_subparsers(dest='step')

    parser_catalog = subparsers.add_parser('catalog', help='List the minuscule posets.',
                                           formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser_export = subparsers.add_parser('export', help='Export a minuscule poset as DOT or JSON.',
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser_orbits = subparsers.add_parser('orbits', help='Orbit statistics of combinatorial rowmotion.',
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser_verify = subparsers.add_parser('verify', help='Verify birational identities.',
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    parser_catalog.add_argument('-m', '--max-rank', type=int, default=7,
                                help="Largest rank listed for the classical families.")
    parser_catalog.add_argument('-f', '--format', choices=['text', 'json'], default='text',
                                help="Output format.")

    _lie_arguments(parser_export)
    parser_export.add_argument('-f', '--format', choices=['dot', 'json'], default='json',
                               help="Output format.")

    _lie_arguments(parser_orbits)
    parser_orbits.add_argument('-c', '--coxeter', type=str, default=None,
                               help="Comma separated root ordering; use the Coxeter-motion instead of rowmotion.")

    _lie_arguments(parser_verify)
    group = parser_verify.add_mutually_exclusive_group()
    group.add_argument('--theorem', action='append', choices=THEOREMS + ('phi_prime_laurent',),
                       help="Theorem to verify (repeatable).")
    group.add_argument('--all', action='store_true',
                       help="Verify every theorem.")
    parser_verify.add_argument('--mode', choices=['exact', 'prob'], default=None,
                               help="Exact symbolic or seeded probabilistic verification "
                                    "(default: exact up to 16 elements).")
    parser_verify.add_argument('-s', '--seed', type=int, default=0,
                               help="Seed for sample points and root orderings.")
    parser_verify.add_argument('--trials', type=int, default=DEFAULT_TRIALS,
                               help="Number of sample points in probabilistic mode.")
    parser_verify.add_argument('--variables', choices=['Z', 'X'], default='Z',
                               help="Variables of the symbolic state.")
    parser_verify.add_argument('-p', '--processes', type=int, default=1,
                               help="Number of worker processes.")

    for sub in (parser_catalog, parser_export, parser_orbits, parser_verify):
        sub.add_argument('-o', '--out', type=str, default=None,
                         help="Output file (default: stdout).")
        sub.add_argument('-d', '--debug', action='store_true',
                         help="Print progress.")

    args = parser.parse_args(argv)

    if args.step is None:
        parser.print_help()
        sys.exit(2)

    try:
        code = run(args)
    except (CatalogError, ContractError) as error:
        print("Configuration error: {}".format(error), file=sys.stderr)
        code = 2
    except OSError as error:
        print("I/O error: {}".format(error), file=sys.stderr)
        code = 2
    sys.exit(code)


if __name__ == "__main__":
    main()
