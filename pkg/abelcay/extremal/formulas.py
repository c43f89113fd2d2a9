#!/usr/bin/python
# -*- coding: utf-8 -*-
""" Closed forms for degree-two extremal orders of Abelian Cayley digraphs. """
from ..errors import OutOfDomainError
from ..support.tools import ceil_div, ceil_sqrt


def _check_diameter(d):
    if d < 2:
        raise OutOfDomainError(f'Diameter must be at least 2, got {d}.')


def m_cyclic_formula(d):
    """ Largest circulant order with two generators and diameter <= d: ⌊d(d+4)/3⌋ + 1. """
    _check_diameter(d)
    return d * (d + 4) // 3 + 1


def m_cyclic_formula_ceil(d):
    """ The same value written as ⌈(d+2)²/3⌉ - 1. """
    _check_diameter(d)
    return ceil_div((d + 2) ** 2, 3) - 1


def m_star_upper_bound(d):
    """ ⌊(d+2)²/3⌋, the most vertices any two-generated Abelian Cayley digraph
        of diameter d can have.
    """
    _check_diameter(d)
    return (d + 2) ** 2 // 3


def min_diameter_bound_abelian(m):
    """ ⌈√(3m)⌉ - 2, lower bound on the diameter of Cay(Γ, A) with |Γ| = m, |A| = 2. """
    if m < 2:
        raise OutOfDomainError(f'Order must be at least 2, got {m}.')
    return ceil_sqrt(3 * m) - 2


def m_star_proposition(d):
    """ m*(d, 2) exceeds m(d, 2) by one exactly when d ≡ 1 (mod 3). """
    _check_diameter(d)
    return m_cyclic_formula(d) + (1 if d % 3 == 1 else 0)


def min_diameter_cyclic_formula(m):
    """ Least d >= 2 with m(d, 2) >= m. """
    if m < 2:
        raise OutOfDomainError(f'Order must be at least 2, got {m}.')
    d = 2
    while m_cyclic_formula(d) < m:
        d += 1
    return d
