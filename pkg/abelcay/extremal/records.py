#!/usr/bin/python
# -*- coding: utf-8 -*-
from dataclasses import dataclass, field
from fractions import Fraction
import numpy as np

from ..errors import CertificationFailure
from ..group import AbelianGroup
from ..literals import parse_group
from ..metrics.bfs import bfs_profile
from ..metrics.genset import GeneratingSet

CYCLIC = 'cyclic-only'
ABELIAN = 'all-abelian'
SCOPES = (CYCLIC, ABELIAN)


@dataclass(frozen=True)
class ExtremalRecord:
    """ Certified largest order m with a degree-k Cayley digraph of diameter <= d.

        Every order in (value, exhaustive_up_to] was refuted by exhaustive search;
        refutations lists (order, candidate sets examined) for those orders.
    """
    d: int
    k: int
    value: int
    witness_group: AbelianGroup
    witness_set: GeneratingSet
    witness_diameter: int
    exhaustive_up_to: int
    scope: str
    refutations: tuple = field(default=(), compare=False)

    def __post_init__(self):
        assert self.value <= self.exhaustive_up_to, 'Record value exceeds the scanned range!'
        assert self.scope in SCOPES, f'Unknown scope {self.scope}!'

    def verify(self):
        """ Re-run BFS on the witness; raises CertificationFailure on any mismatch. """
        profile = bfs_profile(self.witness_group, self.witness_set)
        if self.witness_group.order != self.value:
            raise CertificationFailure(f'Witness {self.witness_group} has order '
                                       f'{self.witness_group.order}, not {self.value}.')
        if profile.diameter is None or profile.diameter > self.d \
                or profile.diameter != self.witness_diameter:
            raise CertificationFailure(f'Witness {self.witness_set} in {self.witness_group} has '
                                       f'diameter {profile.diameter}, recorded {self.witness_diameter}.')
        return profile.diameter

    def refuted_at(self, m):
        return dict(self.refutations).get(m, 0)

    def to_json(self):
        return {'d': self.d, 'k': self.k, 'value': self.value,
                'witness_group': str(self.witness_group),
                'witness_set': self.witness_set.to_list(),
                'witness_diameter': self.witness_diameter,
                'exhaustive_up_to': self.exhaustive_up_to,
                'scope': self.scope}

    @classmethod
    def from_json(cls, obj):
        group, _ = parse_group(obj['witness_group'])
        gens = GeneratingSet(group, [tuple(u) for u in obj['witness_set']])
        record = cls(d=obj['d'], k=obj['k'], value=obj['value'], witness_group=group,
                     witness_set=gens, witness_diameter=obj['witness_diameter'],
                     exhaustive_up_to=obj['exhaustive_up_to'], scope=obj['scope'])
        record.verify()
        return record

    def writeHDF5(self, fh):
        for key in ['d', 'k', 'value', 'witness_diameter', 'exhaustive_up_to', 'scope']:
            fh.attrs[key] = getattr(self, key)
        fh.attrs['moduli'] = np.asarray(self.witness_group.moduli, dtype=np.int64)
        fh.create_dataset('witness_set', data=self.witness_set.coords)
        if self.refutations:
            fh.create_dataset('refutations', data=np.asarray(self.refutations, dtype=np.int64))

    @classmethod
    def from_hdf5(cls, hdf5_file):
        group = AbelianGroup(int(m) for m in hdf5_file.attrs['moduli'])
        gens = GeneratingSet(group, [tuple(int(x) for x in row) for row in hdf5_file['witness_set'][:]])
        refutations = ()
        if 'refutations' in hdf5_file:
            refutations = tuple((int(m), int(c)) for m, c in hdf5_file['refutations'][:])
        scope = hdf5_file.attrs['scope']
        return cls(d=int(hdf5_file.attrs['d']), k=int(hdf5_file.attrs['k']),
                   value=int(hdf5_file.attrs['value']), witness_group=group, witness_set=gens,
                   witness_diameter=int(hdf5_file.attrs['witness_diameter']),
                   exhaustive_up_to=int(hdf5_file.attrs['exhaustive_up_to']),
                   scope=scope.decode() if isinstance(scope, bytes) else str(scope),
                   refutations=refutations)


@dataclass(frozen=True)
class CounterexampleReport:
    """ Certified m*(d, 2) = m(d, 2) + 1 with a non-cyclic witness. """
    d: int
    k: int
    m_star: int
    m_cyc: int
    abelian_witness: tuple
    cyclic_refutation_count: int
    cyclic_refuted_at_m_star: int

    def to_json(self):
        group, gens, diam = self.abelian_witness
        return {'d': self.d, 'k': self.k, 'm_star': self.m_star, 'm_cyc': self.m_cyc,
                'abelian_witness': {'group': str(group), 'set': gens.to_list(), 'diameter': diam},
                'cyclic_refutation_count': self.cyclic_refutation_count,
                'cyclic_refuted_at_m_star': self.cyclic_refuted_at_m_star}


@dataclass(frozen=True)
class FrontierRow:
    """ Best average distance over circulants and over all Abelian groups of order m. """
    m: int
    k: int
    cyclic_avg: Fraction
    cyclic_set: GeneratingSet
    abelian_avg: Fraction
    abelian_set: GeneratingSet

    @property
    def improved(self):
        return self.abelian_avg < self.cyclic_avg

    def to_json(self):
        return {'m': self.m, 'k': self.k,
                'cyclic_avg_num': self.cyclic_avg.numerator,
                'cyclic_avg_den': self.cyclic_avg.denominator,
                'cyclic_group': str(self.cyclic_set.group),
                'cyclic_set': self.cyclic_set.to_list(),
                'abelian_avg_num': self.abelian_avg.numerator,
                'abelian_avg_den': self.abelian_avg.denominator,
                'abelian_group': str(self.abelian_set.group),
                'abelian_set': self.abelian_set.to_list(),
                'improved': self.improved}
