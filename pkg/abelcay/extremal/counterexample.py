#!/usr/bin/python
# -*- coding: utf-8 -*-
from ..errors import CertificationFailure, NoGapExpectedError, OutOfDomainError
from .formulas import m_cyclic_formula, m_star_proposition
from .records import CounterexampleReport
from .search import search_m_cyclic, search_m_star


def certify_counterexample(d, **kwargs):
    """ Certify by exhaustive search that m*(d, 2) = m(d, 2) + 1 for d ≡ 1 (mod 3).

        Both searches must agree with the closed forms and the Abelian witness must
        be non-cyclic; otherwise CertificationFailure is raised.
    """
    if d < 2:
        raise OutOfDomainError(f'Diameter must be at least 2, got {d}.')
    if d % 3 != 1:
        raise NoGapExpectedError(f'm*(d,2) = m(d,2) is expected for d = {d} ≢ 1 (mod 3).')

    cyc = search_m_cyclic(d, 2, **kwargs)
    star = search_m_star(d, 2, **kwargs)

    if cyc.value != m_cyclic_formula(d):
        raise CertificationFailure(f'Cyclic search found m({d},2) = {cyc.value}, '
                                   f'closed form gives {m_cyclic_formula(d)}.')
    if star.value != m_star_proposition(d) or star.value != cyc.value + 1:
        raise CertificationFailure(f'Abelian search found m*({d},2) = {star.value}, '
                                   f'expected {m_star_proposition(d)}.')
    if star.witness_group.rank < 2:
        raise CertificationFailure(f'Witness {star.witness_group} for m*({d},2) is cyclic.')

    refuted_at_star = cyc.refuted_at(star.value)
    if refuted_at_star == 0:
        raise CertificationFailure(f'No cyclic candidates were refuted at m = {star.value}.')

    return CounterexampleReport(d=d, k=2, m_star=star.value, m_cyc=cyc.value,
                                abelian_witness=(star.witness_group, star.witness_set,
                                                 star.witness_diameter),
                                cyclic_refutation_count=sum(c for _, c in cyc.refutations),
                                cyclic_refuted_at_m_star=refuted_at_star)
