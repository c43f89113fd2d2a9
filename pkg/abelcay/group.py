#!/usr/bin/python
# -*- coding: utf-8 -*-
from collections import defaultdict
from math import gcd, lcm, prod
import numpy as np
from sympy import factorint
from sympy.ntheory.modular import crt

from .errors import InvalidSpecError, InvalidElementError
from .support.cached_property import lazy_property


class GroupElement(tuple):
    """ Residue vector (x_1, ..., x_r), one reduced coordinate per cyclic factor.

        Elements carry no reference to their group; equality, hashing and the
        lexicographic order are those of the coordinate tuple.
    """
    __slots__ = ()

    def __repr__(self):
        return '{0:s}{1:s}'.format(type(self).__name__, tuple.__repr__(self))

    def __str__(self):
        if len(self) == 1:
            return str(self[0])
        return '(' + ','.join(str(x) for x in self) + ')'


class GroupSpec:
    """ A direct product Z_{n_1} x ... x Z_{n_s} as written, before canonicalization. """
    def __init__(self, factors=()):
        self.factors = tuple(int(n) for n in factors)
        for n in self.factors:
            # Z_1 is accepted as a trivial factor and vanishes on canonicalization
            if n < 1:
                raise InvalidSpecError(f'Cyclic factor {n} must be positive.')

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self.factors == other.factors

    def __hash__(self):
        return hash(('spec', self.factors))

    def __repr__(self):
        return 'GroupSpec{0}'.format(self.factors)

    def __str__(self):
        return 'x'.join('Z%d' % n for n in self.factors) if self.factors else 'Z1'


class AbelianGroup:
    """ Finite Abelian group Z_{m_1} x ... x Z_{m_r} in invariant-factor form,
        m_1 | m_2 | ... | m_r. The trivial group has no moduli.

        Elements are densely indexed in mixed radix, x_1 + m_1 x_2 + m_1 m_2 x_3 + ...,
        so the identity has index 0. lex_order lists the indices in lexicographic
        coordinate order.
    """
    def __init__(self, moduli=()):
        self.moduli = tuple(int(m) for m in moduli)
        for j, m in enumerate(self.moduli):
            if m < 2:
                raise InvalidSpecError(f'Invariant factor {m} must be at least 2.')
            if j > 0 and m % self.moduli[j - 1] != 0:
                raise InvalidSpecError(f'Moduli {self.moduli} do not form a divisibility chain; '
                                       'use canonicalize() for arbitrary products.')
        self._translations = {}

    @classmethod
    def cyclic(cls, m):
        return cls(() if m == 1 else (m,))

    @property
    def order(self):
        return prod(self.moduli)

    @property
    def rank(self):
        return len(self.moduli)

    @property
    def is_cyclic(self):
        return self.rank <= 1

    @property
    def exponent(self):
        return self.moduli[-1] if self.moduli else 1

    @property
    def identity(self):
        return GroupElement((0,) * self.rank)

    def sort_key(self):
        """ Shortlex key: rank first, then the moduli lexicographically. """
        return (self.rank, self.moduli)

    @lazy_property
    def coords(self):
        """ (order, rank) array holding every element in index order. """
        if self.rank == 0:
            return np.zeros((1, 0), dtype=np.int64)
        idx = np.unravel_index(np.arange(self.order, dtype=np.int64), self.moduli, order='F')
        return np.stack(idx, axis=1).astype(np.int64)

    @lazy_property
    def strides(self):
        """ Index weights (1, m_1, m_1 m_2, ...), so index = coords @ strides. """
        return np.cumprod((1,) + self.moduli[:-1], dtype=np.int64) if self.rank else \
            np.zeros(0, dtype=np.int64)

    @lazy_property
    def lex_order(self):
        """ Dense indices sorted by coordinate tuple; the identity comes first. """
        if self.rank == 0:
            return np.zeros(1, dtype=np.int64)
        # lexsort keys run from least to most significant
        return np.lexsort(self.coords.T[::-1]).astype(np.int64)

    @lazy_property
    def element_orders(self):
        """ Additive order of every element, in index order. """
        orders = np.ones(self.order, dtype=np.int64)
        for j, m in enumerate(self.moduli):
            orders = np.lcm(orders, m // np.gcd(self.coords[:, j], m))
        return orders

    def _ravel(self, coords):
        if self.rank == 0:
            return np.zeros(coords.shape[0], dtype=np.intp)
        return np.ravel_multi_index(tuple(coords.T), self.moduli, order='F')

    def index_of(self, u):
        u = self.check(u)
        if self.rank == 0:
            return 0
        return int(np.ravel_multi_index(u, self.moduli, order='F'))

    def element_at(self, index):
        return GroupElement(int(x) for x in self.coords[index])

    def elements(self):
        return [self.element_at(i) for i in range(self.order)]

    def element(self, coords):
        """ Build an element from integer coordinates, reducing each modulo m_j. """
        if isinstance(coords, (int, np.integer)):
            coords = (coords,)
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.rank:
            raise InvalidElementError(f'Element {coords} has {len(coords)} coordinates; '
                                      f'{self} has rank {self.rank}.')
        return GroupElement(x % m for x, m in zip(coords, self.moduli))

    def check(self, u):
        """ Validate that u is a reduced element of this group. """
        if isinstance(u, (int, np.integer)):
            u = (int(u),)
        if len(u) != self.rank:
            raise InvalidElementError(f'Element {tuple(u)} does not match rank {self.rank} of {self}.')
        for x, m in zip(u, self.moduli):
            if not 0 <= x < m:
                raise InvalidElementError(f'Element {tuple(u)} is not reduced in {self}.')
        return u if isinstance(u, GroupElement) else GroupElement(int(x) for x in u)

    def __contains__(self, u):
        try:
            self.check(u)
        except InvalidElementError:
            return False
        return True

    def add(self, u, v):
        u, v = self.check(u), self.check(v)
        return GroupElement((a + b) % m for a, b, m in zip(u, v, self.moduli))

    def negate(self, u):
        u = self.check(u)
        return GroupElement((m - a) % m for a, m in zip(u, self.moduli))

    def order_of(self, u):
        u = self.check(u)
        return lcm(*(m // gcd(a, m) for a, m in zip(u, self.moduli))) if self.rank else 1

    def translation(self, index):
        """ Permutation array v -> v + a, with a given by its dense index. """
        perm = self._translations.get(index)
        if perm is None:
            shifted = (self.coords + self.coords[index]) % np.asarray(self.moduli, dtype=np.int64)
            perm = self._ravel(shifted)
            self._translations[index] = perm
        return perm

    def clear_translations(self):
        """ Drop cached translation permutations; groups outlive a single scan. """
        self._translations.clear()

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __getstate__(self):
        # Translation caches are rebuilt on demand in worker processes
        return {'moduli': self.moduli}

    def __setstate__(self, state):
        self.moduli = state['moduli']
        self._translations = {}

    def __repr__(self):
        return '{0:s}{1}'.format(type(self).__name__, self.moduli)

    def __str__(self):
        return 'x'.join('Z%d' % m for m in self.moduli) if self.moduli else 'Z1'


class CanonicalMap:
    """ Explicit isomorphism from a written product onto its invariant-factor form.

        Every factor Z_n splits into its prime-power components; for each prime the
        components are ranked by exponent (stable in the written order) and the t-th
        largest components of all primes are recombined by CRT into the t-th largest
        invariant factor.
    """
    def __init__(self, spec):
        self.spec = spec if isinstance(spec, GroupSpec) else GroupSpec(spec)

        components = defaultdict(list)
        for i, n in enumerate(self.spec.factors):
            for p, e in sorted(factorint(n).items()):
                components[int(p)].append((int(e), i))

        rank = max((len(c) for c in components.values()), default=0)

        # slots[t] lists (prime power, source factor) making up the t-th largest factor
        slots = [[] for _ in range(rank)]
        for p, comps in sorted(components.items()):
            for t, (e, i) in enumerate(sorted(comps, key=lambda c: -c[0])):
                slots[t].append((p ** e, i))

        self.slots = slots[::-1]
        self.group = AbelianGroup(prod(q for q, _ in slot) for slot in self.slots)
        # written coordinates are already canonical for a divisibility chain
        self.is_identity = self.spec.factors == self.group.moduli

    def __call__(self, coords):
        if isinstance(coords, (int, np.integer)):
            coords = (coords,)
        coords = tuple(int(x) for x in coords)
        if len(coords) != len(self.spec):
            raise InvalidElementError(f'Element {coords} does not match {self.spec}.')
        if self.is_identity:
            return self.group.element(coords)
        out = []
        for slot in self.slots:
            qs = [q for q, _ in slot]
            rs = [coords[i] % q for q, i in slot]
            out.append(int(crt(qs, rs)[0]) if len(slot) > 1 else rs[0])
        return GroupElement(out)

    def __repr__(self):
        return 'CanonicalMap[{0!s} -> {1!s}]'.format(self.spec, self.group)


def canonical_map(spec):
    if isinstance(spec, AbelianGroup):
        spec = spec.moduli
    return CanonicalMap(spec)


def canonicalize(spec):
    """ Invariant-factor form of a product of cyclic groups; idempotent. """
    return canonical_map(spec).group


def add(g, u, v):
    return g.add(u, v)


def negate(g, u):
    return g.negate(u)


def rank_of(g):
    return g.rank
