#!/usr/bin/python
# -*- coding: utf-8 -*-
from dataclasses import dataclass

from ..errors import OutOfDomainError
from ..group import AbelianGroup, canonical_map
from ..metrics.genset import GeneratingSet


def star_coordinates(x):
    """ Canonical group of Z_{3x} x Z_x and the map from its written coordinates.

        For x = 1 the second factor is trivial.
    """
    if x < 1:
        raise OutOfDomainError(f'x must be at least 1, got {x}.')
    cmap = canonical_map((3 * x, x))
    return cmap.group, cmap


def build_star_construction(x):
    """ Γ = Z_{3x} x Z_x with A = {(1,0), (-1,1)}: 3x² vertices, diameter 3x - 2.

        Returns (group, connection set, expected diameter), both in canonical form.
    """
    group, to_canonical = star_coordinates(x)
    gens = GeneratingSet(group, [to_canonical(u) for u in [(1, 0), (-1, 1)]])
    return group, gens, 3 * x - 2


def star_farthest(x):
    """ The two vertices (2x, x-1) and (x, x-1) at maximum distance, in canonical form. """
    _, to_canonical = star_coordinates(x)
    return frozenset(to_canonical(u) for u in [(2 * x, x - 1), (x, x - 1)])


@dataclass(frozen=True)
class FamilyRow:
    """ One optimal circulant family Z_m with A = {a, b}. """
    row: int
    x: int
    m: int
    d: int
    a: int
    b: int
    printed_b: int
    degenerate: bool

    def generating_set(self):
        return GeneratingSet(AbelianGroup.cyclic(self.m), [(self.a,), (self.b,)])


# (m, d, b) per row as polynomials in x; a = 1 throughout
_FAMILIES = [
    (lambda x: 3 * x**2,             lambda x: 3 * x - 1, lambda x: 3 * x - 1),
    (lambda x: 3 * x**2 + x,         lambda x: 3 * x - 1, lambda x: 3 * x),
    (lambda x: 3 * x**2 + 2 * x,     lambda x: 3 * x - 1, lambda x: -3 * x),
    (lambda x: 3 * x**2 + 2 * x + 1, lambda x: 3 * x,     lambda x: 3 * x + 1),
    (lambda x: 3 * x**2 + 3 * x + 1, lambda x: 3 * x,     lambda x: 3 * x + 2),
    (lambda x: 3 * x**2 + 4 * x + 1, lambda x: 3 * x,     lambda x: -3 * x - 2),
    (lambda x: 3 * x**2 + 4 * x + 2, lambda x: 3 * x + 1, lambda x: 3 * x + 3),
    (lambda x: 3 * x**2 + 5 * x + 2, lambda x: 3 * x + 1, lambda x: 3 * x + 4),
    (lambda x: 3 * x**2 + 6 * x + 2, lambda x: 3 * x + 1, lambda x: -3 * x + 4),
]


def alternate_last_b(x):
    """ Sign-corrected reading of the last row's generator, checked only as a diagnostic. """
    return -(3 * x + 4)


def _row(row, x, m, d, b_raw):
    a = 1 % m
    b = b_raw % m
    return FamilyRow(row=row, x=x, m=m, d=d, a=a, b=b, printed_b=b_raw,
                     degenerate=(a == 0 or b == 0 or a == b))


def table1_families(x):
    """ The nine optimal circulant families {1, b} with 3x² <= m <= 3x² + 6x + 2.

        Rows whose reduced generators coincide or vanish are kept and flagged.
    """
    if x < 1:
        raise OutOfDomainError(f'x must be at least 1, got {x}.')
    return [_row(i + 1, x, fm(x), fd(x), fb(x)) for i, (fm, fd, fb) in enumerate(_FAMILIES)]


def alternate_last_row(x):
    fm, fd, _ = _FAMILIES[-1]
    return _row(len(_FAMILIES), x, fm(x), fd(x), alternate_last_b(x))


# Cyclic witnesses of the degree-two gap table, b indexed by x
TABLE2_CYCLIC_B = {2: 3, 3: 8, 4: 11, 5: 14, 6: 17}


@dataclass(frozen=True)
class GapRow:
    """ Abelian construction of order 3x² against the best circulant of order 3x² - 1. """
    x: int
    d: int
    m_star: int
    m_cyc: int
    cyclic_b: int

    def cyclic_generating_set(self):
        return GeneratingSet(AbelianGroup.cyclic(self.m_cyc), [(1,), (self.cyclic_b,)])


def table2_rows(xs=range(2, 7)):
    return [GapRow(x=x, d=3 * x - 2, m_star=3 * x**2, m_cyc=3 * x**2 - 1, cyclic_b=TABLE2_CYCLIC_B[x])
            for x in xs if x in TABLE2_CYCLIC_B]
