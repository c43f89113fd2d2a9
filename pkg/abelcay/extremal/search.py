#!/usr/bin/python
# -*- coding: utf-8 -*-
""" Exhaustive searches for extremal Cayley digraphs of finite Abelian groups.

    The candidate space of a fixed (d, k) is partitioned by the group order m.
    Each order is scanned independently (possibly in a worker process) and the
    results are folded in order of m, so the outcome never depends on which
    worker finishes first.
"""
import sys
import warnings
from fractions import Fraction
from itertools import combinations, islice
from multiprocessing import Pool
from typing import NamedTuple
import numpy as np

from ..enumeration import enumerate_abelian_groups
from ..errors import OutOfDomainError, NoValidSetError, SearchError, UndefinedAverageError
from ..group import AbelianGroup
from ..metrics.bfs import levels, diameter_within
from ..metrics.genset import GeneratingSet
from ..support.tools import ball_bound, units
from .formulas import min_diameter_bound_abelian
from .records import ExtremalRecord, FrontierRow, CYCLIC, ABELIAN, SCOPES

# Candidate k-subsets are materialised in blocks of at most this many rows
BLOCK_SIZE = 4096

# Upper bound on the (units x block x k) array built for unit-action canonicalization
_CANON_BUDGET = 1 << 22


def _encode(rows, m):
    code = np.zeros(rows.shape[:-1], dtype=np.int64)
    for j in range(rows.shape[-1]):
        code = code * m + rows[..., j]
    return code


def _canonical_mask(m, block, us):
    """ True for rows that are the smallest sorted image of their unit orbit. """
    k = block.shape[1]
    if m ** k >= 1 << 62:
        return np.asarray([tuple(row) == unit_canonical(m, row) for row in block.tolist()], dtype=bool)

    mask = np.empty(block.shape[0], dtype=bool)
    step = max(1, _CANON_BUDGET // (us.size * k))
    for s in range(0, block.shape[0], step):
        rows = block[s:s + step]
        images = np.sort((rows[None, :, :] * us[:, None, None]) % m, axis=2)
        mask[s:s + step] = _encode(images, m).min(axis=0) == _encode(rows, m)
    return mask


def unit_canonical(m, A):
    """ Lexicographically smallest sorted image u·A (mod m) over units u of Z_m. """
    A = [int(a) % m for a in A]
    return min(tuple(sorted(u * a % m for a in A)) for u in units(m).tolist())


def is_unit_canonical(m, A):
    return tuple(sorted(int(a) % m for a in A)) == unit_canonical(m, A)


def candidate_blocks(group, k, symmetry=False):
    """ Yields (block, generating) pairs covering every k-subset of non-identity
        elements in lexicographic order.

        block is an (n, k) array of dense indices, each row listing its elements in
        lexicographic order; generating marks rows whose element orders have lcm
        equal to the group exponent, a necessary condition for generating (and a
        sufficient one for cyclic groups). With symmetry on a cyclic group only
        unit-orbit representatives are kept.
    """
    m = group.order
    if m - 1 < k:
        return
    us = units(m) if symmetry and group.is_cyclic else None
    orders = group.element_orders
    # the identity leads lex_order
    it = combinations(group.lex_order[1:].tolist(), k)
    while True:
        block = np.asarray(list(islice(it, BLOCK_SIZE)), dtype=np.int64)
        if block.size == 0:
            break
        block = block.reshape(-1, k)
        if us is not None:
            # dense indices of Z_m are the residues themselves
            block = block[_canonical_mask(m, block, us)]
        generating = np.lcm.reduce(orders[block], axis=1) == group.exponent
        yield block, generating


def _groups(m, k, scope):
    if scope == CYCLIC:
        return [AbelianGroup.cyclic(m)]
    # a k-element set generates a group of rank at most k
    return [g for g in enumerate_abelian_groups(m) if g.rank <= k]


def _release(groups):
    # enumerated groups are cached across calls; their translations are not
    for g in groups:
        g.clear_translations()


class OrderScan(NamedTuple):
    """ Outcome of scanning one order: the first feasible witness, if any. """
    m: int
    examined: int
    moduli: tuple = None
    indices: tuple = None
    diameter: int = None

    @property
    def feasible(self):
        return self.indices is not None


def scan_order(m, d, k, scope=CYCLIC, symmetry=True):
    """ Test every candidate set of every group of order m for diameter <= d.

        Groups are visited in shortlex order and sets in lexicographic order, and
        the scan stops at the first feasible set.
    """
    examined = 0
    groups = _groups(m, k, scope)
    try:
        for g in groups:
            for block, generating in candidate_blocks(g, k, symmetry=symmetry):
                for row, gen in zip(block.tolist(), generating.tolist()):
                    examined += 1
                    if not gen:
                        continue
                    diam = diameter_within(g, row, d)
                    if diam is not None:
                        return OrderScan(m, examined, g.moduli, tuple(row), diam)
    finally:
        _release(groups)
    return OrderScan(m, examined)


def _scan_task(task):
    return scan_order(*task)


def _run(func, tasks, workers=1, debug=False):
    """ Map func over tasks, in order, optionally on a process pool. """
    if workers > 1:
        with Pool(workers) as pool:
            return list(_progress(pool.imap(func, tasks), debug))
    return list(_progress(map(func, tasks), debug))


def _progress(results, debug):
    for res in results:
        if debug:
            print(f'{res}', file=sys.stderr)
        yield res


def scan_ceiling(d, k, cap=None):
    ceiling = ball_bound(d, k)
    if cap is not None and cap < ceiling:
        warnings.warn(f'Scan capped at m = {cap} below the ball bound {ceiling} for d = {d}, k = {k}; '
                      'the record is exhaustive only up to the cap.', RuntimeWarning)
        ceiling = cap
    return ceiling


def search_extremal(d, k, scope=CYCLIC, cap=None, workers=1, symmetry=True, debug=False):
    """ Largest m admitting a k-element connection set of diameter <= d.

        Every order 2 <= m <= min(cap, C(d+k, k)) is scanned; no monotonicity in m
        is assumed.
    """
    if d < 1 or k < 1:
        raise OutOfDomainError(f'Need d >= 1 and k >= 1, got d = {d}, k = {k}.')
    assert scope in SCOPES, f'Unknown scope {scope}!'

    ceiling = scan_ceiling(d, k, cap)
    tasks = [(m, d, k, scope, symmetry) for m in range(2, ceiling + 1)]
    scans = _run(_scan_task, tasks, workers=workers, debug=debug)

    feasible = [s for s in scans if s.feasible]
    if not feasible:
        raise SearchError(f'No feasible order found for d = {d}, k = {k} up to m = {ceiling}.')
    best = max(feasible, key=lambda s: s.m)

    group = AbelianGroup(best.moduli)
    record = ExtremalRecord(d=d, k=k, value=best.m, witness_group=group,
                            witness_set=GeneratingSet.from_indices(group, best.indices),
                            witness_diameter=best.diameter, exhaustive_up_to=ceiling, scope=scope,
                            refutations=tuple((s.m, s.examined) for s in scans if s.m > best.m))
    record.verify()
    return record


def search_m_cyclic(d, k, cap=None, **kwargs):
    """ m(d, k): the extremal order over cyclic groups. """
    return search_extremal(d, k, scope=CYCLIC, cap=cap, **kwargs)


def search_m_star(d, k, cap=None, **kwargs):
    """ m*(d, k): the extremal order over all finite Abelian groups. """
    return search_extremal(d, k, scope=ABELIAN, cap=cap, **kwargs)


def min_diameter_for_order(m, k, scope=CYCLIC, symmetry=True):
    """ Smallest diameter of Cay(Γ, A) over |Γ| = m in scope and |A| = k.

        Returns (diameter, (group, connection set)).
    """
    if m < 2 or k < 1:
        raise OutOfDomainError(f'Need m >= 2 and k >= 1, got m = {m}, k = {k}.')
    if k > m - 1:
        raise NoValidSetError(f'Z_{m} has only {m - 1} non-identity elements; k = {k} is too large.')

    best = None
    groups = _groups(m, k, scope)
    try:
        for g in groups:
            for block, generating in candidate_blocks(g, k, symmetry=symmetry):
                for row in block[generating].tolist():
                    depth = None if best is None else best[0] - 1
                    dist = levels(g, row, max_depth=depth)
                    if np.all(dist >= 0):
                        best = (int(dist.max()), g, row)
    finally:
        _release(groups)

    if best is None:
        raise NoValidSetError(f'No {k}-element connection set generates a group of order {m}.')

    diam, g, row = best
    if scope == ABELIAN and k == 2:
        assert diam >= min_diameter_bound_abelian(m), 'Diameter below the Abelian lower bound!'
    return diam, (g, GeneratingSet.from_indices(g, row))


def _best_average(g, k, symmetry=True):
    """ Least total distance over the generating k-sets of g, first in lex order. """
    best = None
    for block, generating in candidate_blocks(g, k, symmetry=symmetry):
        for row in block[generating].tolist():
            dist = levels(g, row)
            if np.any(dist < 0):
                continue
            total = int(dist.sum())
            if best is None or total < best[0]:
                best = (total, row)
    if best is None:
        return None
    return Fraction(best[0], g.order - 1), GeneratingSet.from_indices(g, best[1])


def avg_distance_frontier(m, k, symmetry=True):
    """ Compare the best average distance of circulants with that of all Abelian
        groups of order m; ties keep the cyclic witness.
    """
    if m < 2:
        raise UndefinedAverageError(f'Average distance needs at least two vertices, got m = {m}.')
    if k < 1:
        raise OutOfDomainError(f'Need k >= 1, got {k}.')
    if k > m - 1:
        raise NoValidSetError(f'Z_{m} has only {m - 1} non-identity elements; k = {k} is too large.')

    cyc_avg, cyc_set = _best_average(AbelianGroup.cyclic(m), k, symmetry=symmetry)
    ab_avg, ab_set = cyc_avg, cyc_set
    groups = _groups(m, k, ABELIAN)
    try:
        for g in groups:
            if g.is_cyclic:
                continue
            best = _best_average(g, k)
            if best is not None and best[0] < ab_avg:
                ab_avg, ab_set = best
    finally:
        _release(groups)

    return FrontierRow(m=m, k=k, cyclic_avg=cyc_avg, cyclic_set=cyc_set,
                       abelian_avg=ab_avg, abelian_set=ab_set)


def _frontier_task(task):
    return avg_distance_frontier(*task)


def frontier_table(ms, k, workers=1, debug=False):
    return _run(_frontier_task, [(m, k) for m in ms], workers=workers, debug=debug)
