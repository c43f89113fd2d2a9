#!/usr/bin/python
# -*- coding: utf-8 -*-
""" Command line interface: diam, search, verify and table.

    Exit status is 0 when everything passes, 1 when a verification check fails
    and 2 on usage or parse errors. Results go to standard output, diagnostics
    to standard error.
"""
import argparse
import sys
import h5py as h5

from ..errors import AbelcayError, CertificationFailure, SearchError
from ..literals import parse_group, parse_elements, map_element
from ..metrics.bfs import bfs_profile
from ..metrics.genset import GeneratingSet
from ..support.tools import parse_range
from ..extremal.records import CYCLIC, ABELIAN
from ..extremal.search import search_extremal, search_m_cyclic, search_m_star, frontier_table
from .emit import dumps, profile_json, write_extremal_csv, extremal_json, write_frontier_csv
from .suites import SUITES, run_suite

MODES = {'cyclic': CYCLIC, 'abelian': ABELIAN}


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {text!r}')
    if n < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {n}')
    return n


def _range(text):
    rng = parse_range(text)
    if len(rng) == 0:
        raise argparse.ArgumentTypeError(f'empty range {text!r}')
    return rng


def build_parser():
    parser = argparse.ArgumentParser(prog='abelcay',
                                     description='Distance metrics and extremal orders of '
                                                 'Cayley digraphs of finite Abelian groups.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('diam', help='distance profile of Cay(group, generators)')
    p.add_argument('group', help='group literal, e.g. Z11, Z2xZ6 or Z6xZ2')
    p.add_argument('generators', nargs='+', help='element literals, e.g. 1,3 or (1,0),(-1,1)')
    p.add_argument('--hdf5', metavar='PATH', help='also store the distance profile in an HDF5 file')

    p = sub.add_parser('search', help='extremal order m(d,k) or m*(d,k)')
    p.add_argument('--mode', choices=sorted(MODES), default='cyclic')
    p.add_argument('--d', type=_positive, required=True, help='diameter bound')
    p.add_argument('--k', type=_positive, default=2, help='degree (default 2)')
    p.add_argument('--cap', type=_positive, default=None, help='largest order to scan')
    p.add_argument('--workers', type=_positive, default=1)
    p.add_argument('--no-symmetry', dest='symmetry', action='store_false',
                   help='disable unit-action pruning of circulant candidates')
    p.add_argument('--debug', action='store_true', help='print per-order progress to stderr')

    p = sub.add_parser('verify', help='run a verification suite')
    p.add_argument('suite', choices=list(SUITES))
    p.add_argument('--x', type=_range, default=None, help='x range, e.g. 2:6')
    p.add_argument('--d', type=_range, default=None, help='diameter range, e.g. 2:13')
    p.add_argument('--m', type=_range, default=None, help='order range, e.g. 5:30')
    p.add_argument('--k', type=_positive, default=2)
    p.add_argument('--workers', type=_positive, default=1)
    p.add_argument('--debug', action='store_true')

    p = sub.add_parser('table', help='comparison table on standard output')
    p.add_argument('kind', choices=['extremal', 'avgdist'])
    p.add_argument('--d', type=_range, default=None, help='diameter range (extremal)')
    p.add_argument('--m', type=_range, default=None, help='order range (avgdist)')
    p.add_argument('--k', type=_positive, default=2)
    p.add_argument('--workers', type=_positive, default=1)
    p.add_argument('--format', choices=['csv', 'json'], default='csv')
    p.add_argument('--debug', action='store_true')

    return parser


def cmd_diam(args, out):
    group, cmap = parse_group(args.group)
    elements = [map_element(cmap, coords, text) for text in args.generators
                for coords in parse_elements(text)]
    profile = bfs_profile(group, GeneratingSet(group, elements))
    if args.hdf5:
        with h5.File(args.hdf5, 'w') as fh:
            profile.writeHDF5(fh)
    print(dumps(profile_json(profile)), file=out)
    return 0


def cmd_search(args, out):
    record = search_extremal(args.d, args.k, scope=MODES[args.mode], cap=args.cap,
                             workers=args.workers, symmetry=args.symmetry, debug=args.debug)
    print(dumps(record.to_json()), file=out)
    return 0


def cmd_verify(args, out):
    _, option, _ = SUITES[args.suite]
    result = run_suite(args.suite, getattr(args, option), k=args.k,
                       workers=args.workers, debug=args.debug)
    print(dumps(result.to_json()), file=out)
    print(f'{result.name}: {result.count("pass")} pass, {result.count("fail")} fail, '
          f'{result.count("flagged")} flagged in {result.elapsed:.2f}s', file=sys.stderr)
    return 0 if result.passed else 1


def cmd_table(args, out):
    kw = dict(workers=args.workers, debug=args.debug)
    if args.kind == 'extremal':
        if args.d is None:
            raise argparse.ArgumentTypeError('table extremal needs --d')
        pairs = [(search_m_cyclic(d, args.k, **kw), search_m_star(d, args.k, **kw)) for d in args.d]
        if args.format == 'csv':
            write_extremal_csv(pairs, out)
        else:
            print(dumps(extremal_json(pairs)), file=out)
        return 0

    if args.m is None or args.m.start < 2:
        raise argparse.ArgumentTypeError('table avgdist needs --m with orders >= 2')
    rows = frontier_table(args.m, args.k, **kw)
    if args.format == 'csv':
        write_frontier_csv(rows, out)
    else:
        print(dumps([row.to_json() for row in rows]), file=out)
    return 0


COMMANDS = {'diam': cmd_diam, 'search': cmd_search, 'verify': cmd_verify, 'table': cmd_table}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except (CertificationFailure, SearchError) as err:
        print(f'abelcay: {err}', file=sys.stderr)
        return 1
    except (AbelcayError, argparse.ArgumentTypeError) as err:
        print(f'abelcay: error: {err}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
