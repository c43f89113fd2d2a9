#!/usr/bin/python
# -*- coding: utf-8 -*-
from functools import lru_cache
from itertools import product
from math import prod
from sympy import factorint
from sympy.functions.combinatorial.numbers import partition
from sympy.utilities.iterables import partitions

from .errors import InvalidOrderError
from .group import AbelianGroup


def _exponent_partitions(e):
    # sympy reuses the yielded dict, so copy it out immediately
    out = []
    for p in partitions(e):
        out.append(tuple(sorted((part for part, mult in p.items() for _ in range(mult)), reverse=True)))
    return out


def count_abelian_groups(m):
    """ Number of isomorphism classes of Abelian groups of order m, Π p(e_i). """
    if m < 1:
        raise InvalidOrderError(f'Group order must be positive, got {m}.')
    return prod(int(partition(e)) for e in factorint(m).values())


@lru_cache(maxsize=512)
def enumerate_abelian_groups(m):
    """ Every Abelian group of order m up to isomorphism, in invariant-factor form.

        Sorted shortlex by moduli: cyclic group first, highest rank last.
    """
    if m < 1:
        raise InvalidOrderError(f'Group order must be positive, got {m}.')

    primes = sorted(factorint(m).items())
    choices = [[(int(p), part) for part in _exponent_partitions(e)] for p, e in primes]

    groups = []
    for combo in product(*choices):
        rank = max((len(part) for _, part in combo), default=0)
        # t-th largest invariant factor collects the t-th largest prime powers
        moduli = [prod(p ** part[t] for p, part in combo if t < len(part)) for t in range(rank)]
        groups.append(AbelianGroup(moduli[::-1]))

    return tuple(sorted(groups, key=AbelianGroup.sort_key))
