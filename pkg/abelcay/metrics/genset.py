#!/usr/bin/python
# -*- coding: utf-8 -*-
import numpy as np

from ..errors import InvalidInputError, InvalidElementError
from ..group import AbelianGroup, GroupElement


class GeneratingSet:
    """ Connection set A = {a_1, ..., a_k} of a Cayley digraph Cay(Γ, A).

        Elements are distinct, non-identity, and kept sorted lexicographically;
        whether A actually generates Γ is decided by is_generating.
    """
    def __init__(self, group, elements):
        if not isinstance(group, AbelianGroup):
            raise InvalidInputError(f'Expected an AbelianGroup, got {type(group).__name__}.')
        self.group = group

        try:
            elems = [group.check(u) for u in elements]
        except InvalidElementError as err:
            raise InvalidInputError(str(err))

        if len(elems) == 0:
            raise InvalidInputError('A connection set needs at least one element.')
        if len(set(elems)) != len(elems):
            raise InvalidInputError(f'Connection set elements must be distinct: {elems}.')
        if group.identity in elems:
            raise InvalidInputError('The identity cannot belong to a connection set.')

        self.elements = tuple(sorted(elems))
        self.indices = tuple(group.index_of(u) for u in self.elements)

    @classmethod
    def from_indices(cls, group, indices):
        """ Fast constructor for search candidates and stored profiles. """
        obj = cls.__new__(cls)
        obj.group = group
        pairs = sorted((group.element_at(int(i)), int(i)) for i in indices)
        obj.elements = tuple(u for u, _ in pairs)
        obj.indices = tuple(i for _, i in pairs)
        assert obj.indices and 0 not in obj.indices, 'Candidate sets exclude the identity!'
        return obj

    @property
    def k(self):
        return len(self.elements)

    @property
    def coords(self):
        return np.asarray([list(u) for u in self.elements], dtype=np.int64).reshape(self.k, self.group.rank)

    def to_list(self):
        return [list(u) for u in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return isinstance(other, GeneratingSet) and self.group == other.group \
                and self.elements == other.elements

    def __hash__(self):
        return hash((self.group, self.elements))

    def __lt__(self, other):
        return (self.group.sort_key(), self.elements) < (other.group.sort_key(), other.elements)

    def __repr__(self):
        return '{0:s}[{1!s}; {2:s}]'.format(type(self).__name__, self.group, str(self))

    def __str__(self):
        return '{' + ','.join(str(u) for u in self.elements) + '}'


def as_generating_set(group, A):
    """ Accept a GeneratingSet or any iterable of element literals of the group. """
    if isinstance(A, GeneratingSet):
        if A.group != group:
            raise InvalidInputError(f'Connection set lives in {A.group}, not in {group}.')
        return A
    try:
        elems = [u if isinstance(u, GroupElement) else group.element(u) for u in A]
    except InvalidElementError as err:
        raise InvalidInputError(str(err))
    return GeneratingSet(group, elems)
