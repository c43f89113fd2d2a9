#!/usr/bin/python
# -*- coding: utf-8 -*-
from math import isqrt
import numpy as np
from scipy.special import comb

from ..errors import LiteralParseError


def ball_bound(d, k):
    """ Number of commutative words of length <= d in k letters, C(d + k, k).

        Upper bound on the number of vertices within distance d of the identity
        in a Cayley digraph of an Abelian group with k generators.
    """
    return int(comb(d + k, k, exact=True))


def ceil_div(a, b):
    return -(-a // b)


def ceil_sqrt(n):
    """ Exact ⌈√n⌉ for n >= 0. """
    s = isqrt(n)
    return s if s * s == n else s + 1


def units(m):
    """ The residues u in [1, m) coprime to m, ascending. """
    if m == 1:
        return np.zeros(1, dtype=np.int64)
    r = np.arange(1, m, dtype=np.int64)
    return r[np.gcd(r, m) == 1]


def parse_range(text):
    """ Parse 'a:b' (inclusive) or a bare integer into a range. """
    try:
        if ':' in text:
            lo, hi = text.split(':', 1)
            return range(int(lo), int(hi) + 1)
        n = int(text)
    except ValueError:
        raise LiteralParseError(f'Invalid range {text!r}; expected "a:b" or an integer.')
    return range(n, n + 1)
