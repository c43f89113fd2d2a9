#!/usr/bin/python
# -*- coding: utf-8 -*-
""" JSON and CSV emission. All numbers are exact integers; rationals are split
    into numerator and denominator fields.
"""
import csv
import json

from ..errors import CertificationFailure
from ..literals import parse_group
from ..metrics.bfs import bfs_profile
from ..metrics.genset import GeneratingSet

EXTREMAL_HEADER = ['d', 'k', 'm_cyclic', 'm_star', 'gap', 'witness_group', 'witness_set']

FRONTIER_HEADER = ['m', 'k', 'cyclic_avg_num', 'cyclic_avg_den', 'cyclic_group', 'cyclic_set',
                   'abelian_avg_num', 'abelian_avg_den', 'abelian_group', 'abelian_set', 'improved']


def dumps(obj):
    return json.dumps(obj, ensure_ascii=False)


def profile_json(profile):
    avg = profile.avg_distance
    farthest = sorted(profile.farthest()) if profile.is_generating else []
    return {'group': str(profile.group),
            'gens': profile.gens.to_list(),
            'diameter': profile.diameter,
            'avg_num': None if avg is None else avg.numerator,
            'avg_den': None if avg is None else avg.denominator,
            'reached': profile.reached,
            'farthest': [list(u) for u in farthest]}


def profile_from_json(obj):
    """ Rebuild the profile from its JSON form by a fresh BFS and check it matches. """
    group, _ = parse_group(obj['group'])
    gens = GeneratingSet(group, [tuple(u) for u in obj['gens']])
    profile = bfs_profile(group, gens)
    if profile.diameter != obj['diameter'] or profile.reached != obj['reached']:
        raise CertificationFailure(f'Recomputed profile of {gens} in {group} has diameter '
                                   f'{profile.diameter}, recorded {obj["diameter"]}.')
    return profile


def _writer(stream):
    return csv.writer(stream, lineterminator='\n')


def write_extremal_csv(pairs, stream):
    """ pairs: (cyclic record, abelian record) per diameter, ascending in d. """
    w = _writer(stream)
    w.writerow(EXTREMAL_HEADER)
    for cyc, star in sorted(pairs, key=lambda p: (p[0].d, p[0].k)):
        w.writerow([cyc.d, cyc.k, cyc.value, star.value, star.value - cyc.value,
                    str(star.witness_group), str(star.witness_set)])


def extremal_json(pairs):
    return [{'d': cyc.d, 'k': cyc.k, 'm_cyclic': cyc.value, 'm_star': star.value,
             'gap': star.value - cyc.value, 'cyclic': cyc.to_json(), 'abelian': star.to_json()}
            for cyc, star in sorted(pairs, key=lambda p: (p[0].d, p[0].k))]


def write_frontier_csv(rows, stream):
    w = _writer(stream)
    w.writerow(FRONTIER_HEADER)
    for row in sorted(rows, key=lambda r: r.m):
        w.writerow([row.m, row.k, row.cyclic_avg.numerator, row.cyclic_avg.denominator,
                    str(row.cyclic_set.group), str(row.cyclic_set),
                    row.abelian_avg.numerator, row.abelian_avg.denominator,
                    str(row.abelian_set.group), str(row.abelian_set), int(row.improved)])
