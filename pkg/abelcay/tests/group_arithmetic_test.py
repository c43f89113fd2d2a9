#!/usr/bin/python
# -*- coding: utf-8 -*-
import numpy as np
from numpy.testing import assert_, assert_raises, assert_equal

from abelcay import AbelianGroup, GroupElement, GroupSpec
from abelcay import canonicalize, canonical_map, add, negate, rank_of, enumerate_abelian_groups
from abelcay.errors import InvalidSpecError, InvalidElementError


class TestCanonicalize:
    def test_reorder(self):
        assert_equal(canonicalize((6, 2)).moduli, (2, 6))

    def test_cyclic(self):
        assert_equal(canonicalize((12,)).moduli, (12,))

    def test_regroup_primes(self):
        # 9 x 3 x 2 = (3^2) x (3) x (2) -> Z3 x Z18
        assert_equal(canonicalize((9, 3, 2)).moduli, (3, 18))

    def test_coprime_factors_merge(self):
        assert_equal(canonicalize((2, 3)).moduli, (6,))
        assert_equal(canonicalize((4, 6, 10)).moduli, (2, 2, 60))

    def test_trivial(self):
        g = canonicalize(())
        assert_equal(g.moduli, ())
        assert_equal(g.order, 1)
        assert_equal(g.rank, 0)

    def test_idempotent(self):
        for spec in [(6, 2), (9, 3, 2), (12,), (4, 6, 10), (8, 8, 3)]:
            g = canonicalize(spec)
            assert_(canonicalize(g) == g)
            assert_(canonicalize(g.moduli) == g)
            assert_equal(g.order, int(np.prod(spec)))

    def test_invalid_factor(self):
        assert_raises(InvalidSpecError, canonicalize, (0, 3))
        assert_raises(InvalidSpecError, canonicalize, (-4,))

    def test_three_x_by_x(self):
        for x in range(2, 7):
            assert_equal(canonicalize((3 * x, x)).rank, 2)
        assert_equal(canonicalize((3, 1)).rank, 1)

    def test_chain_validation(self):
        assert_raises(InvalidSpecError, AbelianGroup, (6, 2))
        assert_raises(InvalidSpecError, AbelianGroup, (1,))
        assert_(AbelianGroup((2, 6)).order == 12)


class TestCanonicalMap:
    def test_swap(self):
        cmap = canonical_map((6, 2))
        assert_(cmap.group == AbelianGroup((2, 6)))
        assert_equal(cmap((1, 0)), (0, 1))
        assert_equal(cmap((-1, 1)), (1, 5))

    def test_isomorphism(self):
        spec = GroupSpec((9, 3, 2))
        cmap = canonical_map(spec)
        g = cmap.group
        written = [(a, b, c) for a in range(9) for b in range(3) for c in range(2)]
        images = [cmap(u) for u in written]

        # bijective
        assert_equal(len(set(images)), g.order)

        # additive
        for u in written[::5]:
            for v in written[::7]:
                w = tuple((x + y) for x, y in zip(u, v))
                assert_(cmap(w) == g.add(cmap(u), cmap(v)))

    def test_trivial_factor_dropped(self):
        cmap = canonical_map((3, 1))
        assert_equal(cmap.group.moduli, (3,))
        assert_equal(cmap((-1, 1)), (2,))


class TestArithmetic:
    def test_add(self):
        g = AbelianGroup((2, 6))
        assert_equal(add(g, (1, 5), (1, 3)), (0, 2))
        assert_equal(add(g, (0, 0), (1, 4)), (1, 4))
        assert_equal(add(AbelianGroup((12,)), (11,), (3,)), (2,))
        assert_(isinstance(add(g, (1, 5), (1, 3)), GroupElement))

    def test_negate(self):
        g = AbelianGroup((2, 6))
        assert_equal(negate(g, (1, 1)), (1, 5))
        assert_equal(negate(g, (0, 0)), (0, 0))
        assert_equal(negate(AbelianGroup((11,)), (3,)), (8,))

    def test_rank_mismatch(self):
        g = AbelianGroup((2, 6))
        assert_raises(InvalidElementError, add, g, (1,), (1, 3))
        assert_raises(InvalidElementError, negate, g, (1, 2, 3))
        assert_raises(InvalidElementError, add, g, (2, 0), (0, 0))

    def test_element_reduces(self):
        g = AbelianGroup((2, 6))
        assert_equal(g.element((-1, 1)), (1, 1))
        assert_equal(g.element((3, -3)), (1, 3))

    def test_rank_of(self):
        assert_equal(rank_of(AbelianGroup((2, 6))), 2)
        assert_equal(rank_of(AbelianGroup((11,))), 1)
        assert_equal(rank_of(AbelianGroup()), 0)
        assert_(AbelianGroup((11,)).is_cyclic)
        assert_(AbelianGroup().is_cyclic)
        assert_(not AbelianGroup((2, 6)).is_cyclic)

    def test_dense_indexing(self):
        g = AbelianGroup((2, 6))
        assert_equal(g.index_of(g.identity), 0)
        elems = g.elements()
        for i, u in enumerate(elems):
            assert_equal(g.index_of(u), i)
            assert_equal(i, u[0] + 2 * u[1])
        assert_equal(g.strides.tolist(), [1, 2])
        assert_equal([g.element_at(i) for i in g.lex_order], sorted(elems))

        g = AbelianGroup((2, 4, 8))
        assert_equal(g.index_of((1, 3, 5)), 1 + 2 * 3 + 8 * 5)
        assert_equal((g.coords @ g.strides).tolist(), list(range(g.order)))
        assert_equal(AbelianGroup((11,)).lex_order.tolist(), list(range(11)))
        assert_equal(AbelianGroup().lex_order.tolist(), [0])

    def test_group_axioms_exhaustive(self):
        for m in range(1, 25):
            for g in enumerate_abelian_groups(m):
                elems = g.elements()
                ident = g.identity
                for u in elems:
                    assert_(negate(g, add(g, u, negate(g, u))) == ident)
                    for v in elems:
                        assert_(add(g, u, v) == add(g, v, u))

                # associativity through translation permutations: (v + a) + b = v + (a + b)
                for a in range(g.order):
                    for b in range(g.order):
                        ab = g.index_of(add(g, elems[a], elems[b]))
                        assert_(np.array_equal(g.translation(b)[g.translation(a)], g.translation(ab)))

    def test_element_orders(self):
        g = AbelianGroup((2, 6))
        for i, u in enumerate(g.elements()):
            assert_equal(g.element_orders[i], g.order_of(u))
        assert_equal(g.order_of((1, 5)), 6)
        assert_equal(g.exponent, 6)
