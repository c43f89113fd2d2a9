#!/usr/bin/python
# -*- coding: utf-8 -*-
from fractions import Fraction
import numpy as np
import scipy.sparse as sps

from ..errors import InvalidInputError, NotStronglyConnectedError, UndefinedAverageError
from ..group import AbelianGroup
from ..support.cached_property import lazy_property
from .genset import GeneratingSet, as_generating_set

# Diameter of a connection set that does not generate the group
UNREACHABLE = None


def levels(group, indices, max_depth=None):
    """ Breadth-first distances from the identity along arcs v -> v + a.

        Returns a dense int64 array indexed like group.coords; unreached entries are
        -1. With max_depth the search stops after that many levels.
    """
    m = group.order
    dist = np.full(m, -1, dtype=np.int64)
    dist[0] = 0
    perms = [group.translation(i) for i in indices]

    frontier = np.zeros(1, dtype=np.intp)
    remaining = m - 1
    level = 0
    while frontier.size and remaining > 0:
        if max_depth is not None and level >= max_depth:
            break
        level += 1
        nxt = np.unique(np.concatenate([p[frontier] for p in perms]))
        nxt = nxt[dist[nxt] < 0]
        dist[nxt] = level
        remaining -= nxt.size
        frontier = nxt

    return dist


def diameter_within(group, indices, d):
    """ Diameter of Cay(group, indices) if it is at most d, otherwise None. """
    dist = levels(group, indices, max_depth=d)
    if np.any(dist < 0):
        return None
    return int(dist.max())


class DistanceProfile:
    """ All distances from the identity in Cay(Γ, A).

        By vertex-transitivity the identity-rooted profile determines the diameter
        and the average distance of the whole digraph.
    """
    def __init__(self, group, gens, dist):
        self.group = group
        self.gens = gens
        self.levels = np.asarray(dist, dtype=np.int64)
        assert self.levels.shape == (group.order,), 'Distance array must cover the group!'

    @property
    def order(self):
        return self.group.order

    @lazy_property
    def reached(self):
        return int(np.count_nonzero(self.levels >= 0))

    @property
    def is_generating(self):
        return self.reached == self.order

    @lazy_property
    def diameter(self):
        return int(self.levels.max()) if self.is_generating else UNREACHABLE

    @lazy_property
    def total_distance(self):
        return int(self.levels[self.levels >= 0].sum())

    @lazy_property
    def avg_distance(self):
        """ Exact mean distance to the m - 1 non-identity vertices. """
        if self.order < 2 or not self.is_generating:
            return None
        return Fraction(self.total_distance, self.order - 1)

    @lazy_property
    def dist(self):
        """ Map from reached element to its distance. """
        return {self.group.element_at(i): int(d) for i, d in enumerate(self.levels) if d >= 0}

    def distance(self, u):
        d = self.levels[self.group.index_of(u)]
        return int(d) if d >= 0 else None

    def farthest(self):
        if not self.is_generating:
            raise NotStronglyConnectedError(f'{self.gens} does not generate {self.group}.')
        return frozenset(self.group.element_at(i) for i in np.flatnonzero(self.levels == self.diameter))

    def distance_distribution(self):
        """ Number of vertices at each distance 0, 1, ..., max distance reached. """
        return np.bincount(self.levels[self.levels >= 0])

    def writeHDF5(self, fh):
        fh.attrs['moduli'] = np.asarray(self.group.moduli, dtype=np.int64)
        fh.attrs['gens'] = np.asarray(self.gens.indices, dtype=np.int64)
        fh.create_dataset('levels', data=self.levels)

    @classmethod
    def from_hdf5(cls, hdf5_file):
        group = AbelianGroup(int(m) for m in hdf5_file.attrs['moduli'])
        gens = GeneratingSet.from_indices(group, hdf5_file.attrs['gens'])
        return cls(group, gens, hdf5_file['levels'][:])

    def __repr__(self):
        return '{0:s}[{1!s}, A = {2!s}; diam = {3}, reached = {4:d}]'.format(
            type(self).__name__, self.group, self.gens, self.diameter, self.reached)


def _checked(g, A):
    if not isinstance(g, AbelianGroup):
        raise InvalidInputError(f'Expected an AbelianGroup, got {type(g).__name__}.')
    return as_generating_set(g, A)


def bfs_profile(g, A):
    A = _checked(g, A)
    return DistanceProfile(g, A, levels(g, A.indices))


def diameter(g, A):
    return bfs_profile(g, A).diameter


def is_generating(g, A):
    return bfs_profile(g, A).is_generating


def farthest_set(g, A):
    return bfs_profile(g, A).farthest()


def average_distance(g, A):
    if g.order == 1:
        raise UndefinedAverageError('Average distance is undefined on the trivial group.')
    profile = bfs_profile(g, A)
    if not profile.is_generating:
        raise NotStronglyConnectedError(f'{profile.gens} does not generate {g}.')
    return profile.avg_distance


def adjacency(g, A):
    """ Sparse adjacency matrix of Cay(g, A), row v having ones at v + a. """
    A = _checked(g, A)
    m = g.order
    rows = np.tile(np.arange(m), A.k)
    cols = np.concatenate([g.translation(i) for i in A.indices])
    return sps.csr_matrix((np.ones(rows.size, dtype=np.int64), (rows, cols)), shape=(m, m))
