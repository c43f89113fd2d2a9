#!/usr/bin/python
# -*- coding: utf-8 -*-
from itertools import combinations
import numpy as np
from numpy.testing import assert_, assert_raises, assert_equal

from abelcay import AbelianGroup, enumerate_abelian_groups
from abelcay.metrics import (GeneratingSet, DistanceCertificate, Certifier, certify_distance,
                             certify_all, bfs_profile, levels)
from abelcay.errors import NoCertificateError, InvalidInputError


class TestCertificate:
    def test_z11(self):
        g = AbelianGroup((11,))
        cert = certify_distance(g, [1, 3], (9,))
        assert_equal(cert.coeffs, (0, 3))
        assert_equal(cert.distance, 3)
        assert_equal(certify_distance(g, [1, 3], (8,)).coeffs, (2, 2))
        assert_equal(certify_distance(g, [1, 3], (0,)).coeffs, (0, 0))

    def test_z2z6(self):
        g = AbelianGroup((2, 6))
        A = [(1, 0), (1, 5)]
        cert = certify_distance(g, A, (0, 5))
        assert_equal(cert.coeffs, (1, 1))
        assert_equal(cert.distance, bfs_profile(g, A).distance((0, 5)))
        assert_(cert.verify(g, A, (0, 5)))
        # congruences hold per coordinate, not over the integers
        assert_equal(cert.evaluate(g, A), (0, 5))

    def test_lexicographic_tie_break(self):
        # 4 = 1 + 3 in Z_11 is the only way to reach 4 in two steps
        g = AbelianGroup((11,))
        assert_equal(certify_distance(g, [1, 3], (4,)).coeffs, (1, 1))
        # in Z_8 with {1, 7}, 4 = 4·1 = 4·7, so the smaller first coefficient wins
        assert_equal(certify_distance(AbelianGroup((8,)), [1, 7], (4,)).coeffs, (0, 4))

    def test_unreachable(self):
        g = AbelianGroup((12,))
        assert_raises(NoCertificateError, certify_distance, g, [3, 6], (1,))
        assert_equal(len(certify_all(g, [3, 6])), 4)

    def test_invalid_target(self):
        g = AbelianGroup((2, 6))
        assert_raises(InvalidInputError, certify_distance, g, [(1, 0), (1, 5)], (1,))

    def test_certificate_type(self):
        cert = DistanceCertificate((2, 1))
        assert_equal(cert.distance, 3)
        assert_equal(cert.evaluate(AbelianGroup((11,)), [1, 3]), (5,))
        assert_(not cert.verify(AbelianGroup((11,)), [1, 3], (4,)))

    def test_exhaustive_soundness(self):
        """ Every 2-subset of every group of order <= 40, every reachable target. """
        for m in range(3, 41):
            for g in enumerate_abelian_groups(m):
                moduli = np.asarray(g.moduli, dtype=np.int64)
                for pair in combinations(range(1, m), 2):
                    A = GeneratingSet.from_indices(g, pair)
                    dist = levels(g, pair)
                    certs = Certifier(g, A).certify_all()
                    assert_equal(len(certs), np.count_nonzero(dist >= 0))
                    for target, cert in certs.items():
                        c = np.asarray(cert.coeffs, dtype=np.int64)
                        assert_(np.all(c >= 0))
                        assert_equal(cert.distance, dist[g.index_of(target)])
                        total = (c @ A.coords) % moduli
                        assert_(tuple(total.tolist()) == target)
