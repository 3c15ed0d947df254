# MIT License
#
# Copyright (c) 2020 Christopher Henderson, chris@chenderson.org
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.


import os
import unittest
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from bolsect import LieAlgebra, Sl2Class, Subspace, classify_sl2_element, direct_sum, killing_form, read_algebra, \
    sl2_form, span_closure
from bolsect._algebra.liealg import rational
from bolsect._catalog.catalog import DATA_DIR
from bolsect.errors import AlgebraMismatchError, JacobiError
from tests.utils import expect


def algebra(tag):
    return read_algebra(os.path.join(DATA_DIR, 'algebras', '{}.alg'.format(tag)))


SL2R = algebra('sl2r')
SO3 = algebra('so3')
SL2C = algebra('sl2c')
SL3R = algebra('sl3r')
SU21 = algebra('su21')

coefficient = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def elements(g):
    return st.lists(coefficient, min_size=g.dim, max_size=g.dim).map(g.element)


class TestLieAlgebra(unittest.TestCase):

    def test_sl2r_brackets(self):
        e1, e2, e3 = SL2R['e1'], SL2R['e2'], SL2R['e3']
        self.assertEqual(e1.bracket(e2), 2 * e3)
        self.assertEqual(e1.bracket(e3), 2 * e2)
        self.assertEqual(e2.bracket(e3), -2 * e1)
        self.assertEqual(e3.bracket(e1), -2 * e2)

    def test_jacobi_catalog_algebras(self):
        for g in (SL2R, SO3, SL2C, SL3R, SU21):
            self.assertEqual(g.verify_jacobi(), [], g.name)
        self.assertEqual(direct_sum(SL2R, SL2R, SO3).verify_jacobi(), [])

    def test_dimensions(self):
        self.assertEqual([g.dim for g in (SL2R, SO3, SL2C, SL3R, SU21)], [3, 3, 6, 8, 8])

    def test_broken_jacobi(self):
        bad = LieAlgebra('bad', ['a', 'b', 'c'], {(1, 2): {3: 1}, (1, 3): {1: 1}})
        self.assertEqual(bad.verify_jacobi(), [('a', 'b', 'c')])

    @expect(JacobiError)
    def test_require_jacobi(self):
        LieAlgebra('bad', ['a', 'b', 'c'], {(1, 2): {3: 1}, (1, 3): {1: 1}}).require_jacobi()

    @expect(ValueError)
    def test_bad_index(self):
        LieAlgebra('bad', ['a', 'b'], {(2, 1): {1: 1}})

    @expect(ValueError)
    def test_bad_target(self):
        LieAlgebra('bad', ['a', 'b'], {(1, 2): {3: 1}})

    @expect(ValueError)
    def test_duplicate_labels(self):
        LieAlgebra('bad', ['a', 'a'], {})

    @expect(KeyError)
    def test_unknown_label(self):
        SL2R['e4']

    @expect(AlgebraMismatchError)
    def test_mismatch(self):
        SL2R['e1'].bracket(SO3['e3'])

    def test_killing_sl2r(self):
        self.assertEqual(SL2R.killing_matrix(), sympy.diag(8, 8, -8))

    def test_killing_form(self):
        self.assertEqual(killing_form(SL2R['e3'], SL2R['e3']), -8)
        self.assertEqual(killing_form(SL2R['e1'], SL2R['e2']), 0)

    @expect(AlgebraMismatchError)
    def test_killing_form_mixed(self):
        killing_form(SL2R['e1'], SO3['e3'])

    def test_killing_so3_negative_definite(self):
        self.assertTrue(all(v < 0 for v in SO3.killing_matrix().eigenvals()))

    def test_rational(self):
        self.assertEqual(rational('3/6'), sympy.Rational(1, 2))
        self.assertEqual(rational(Fraction(2, 4)), sympy.Rational(1, 2))
        self.assertEqual(rational(3), sympy.Integer(3))

    @expect(ValueError)
    def test_rational_rejects_surds(self):
        rational(sympy.sqrt(2))

    @given(elements(SL2C), elements(SL2C))
    def test_antisymmetry(self, x, y):
        self.assertEqual(x.bracket(y), -y.bracket(x))

    @settings(max_examples=25, deadline=None)
    @given(elements(SL3R), elements(SL3R), elements(SL3R))
    def test_jacobi_identity(self, x, y, z):
        total = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
        self.assertTrue(total.is_zero)

    @settings(max_examples=25, deadline=None)
    @given(elements(SU21), elements(SU21))
    def test_ad_is_homomorphism(self, x, y):
        ad = SU21.ad
        self.assertEqual(ad(x.bracket(y)), ad(x) * ad(y) - ad(y) * ad(x))

    @settings(max_examples=25, deadline=None)
    @given(elements(SL2C), elements(SL2C), elements(SL2C))
    def test_killing_invariance(self, x, y, z):
        self.assertEqual(x.bracket(y).killing(z), x.killing(y.bracket(z)))

    @given(elements(SL2R), coefficient)
    def test_bilinear(self, x, c):
        y = SL2R['e2'] + SL2R['e3']
        self.assertEqual((c * x).bracket(y), c * x.bracket(y))


class TestSl2Classes(unittest.TestCase):

    def test_classes(self):
        self.assertEqual(classify_sl2_element(SL2R['e3']), Sl2Class.ELLIPTIC)
        self.assertEqual(classify_sl2_element(SL2R['e1']), Sl2Class.HYPERBOLIC)
        self.assertEqual(classify_sl2_element(SL2R['e2'] + SL2R['e3']), Sl2Class.PARABOLIC)
        self.assertEqual(classify_sl2_element(SL2R.zero()), Sl2Class.ZERO)

    def test_form(self):
        x = SL2R.element([1, 2, 3])
        self.assertEqual(sl2_form(x), 1 + 4 - 9)

    @expect(AlgebraMismatchError)
    def test_wrong_algebra(self):
        classify_sl2_element(SO3['e3'])


class TestSubspace(unittest.TestCase):

    def test_rref_equality(self):
        a = Subspace.span([SL2R['e1'] + SL2R['e2'], SL2R['e2']])
        b = Subspace.span([SL2R['e1'], 3 * SL2R['e2']])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))

    def test_membership(self):
        plane = Subspace.span([SL2R['e1'], SL2R['e2']])
        self.assertIn(SL2R.element([2, -1, 0]), plane)
        self.assertNotIn(SL2R['e3'], plane)

    def test_subalgebra(self):
        self.assertTrue(Subspace.span([SL2R['e1'], SL2R['e2'] + SL2R['e3']]).is_subalgebra())
        self.assertFalse(Subspace.span([SL2R['e1'], SL2R['e2']]).is_subalgebra())

    def test_escaping_bracket(self):
        plane = Subspace.span([SL2R['e1'], SL2R['e2']])
        self.assertEqual(plane.escaping_bracket(), (SL2R['e1'], SL2R['e2']))
        self.assertIsNone(Subspace.span([SL2R['e3']]).escaping_bracket())

    def test_intersect(self):
        a = Subspace.span([SL2R['e1'], SL2R['e2']])
        b = Subspace.span([SL2R['e2'], SL2R['e3']])
        self.assertEqual(a.intersect(b), Subspace.span([SL2R['e2']]))
        self.assertTrue(a.intersect(Subspace.span([SL2R['e3']])).is_zero)

    def test_sum_and_order(self):
        a = Subspace.span([SL2R['e1']])
        b = Subspace.span([SL2R['e2']])
        self.assertEqual((a + b).rank, 2)
        self.assertTrue(a <= a + b)
        self.assertFalse(a + b <= a)

    def test_closure(self):
        self.assertEqual(span_closure([SL2R['e1'], SL2R['e2']]), Subspace.whole(SL2R))
        self.assertEqual(Subspace.span([SL2R['e3']]).closure().rank, 1)

    def test_ideal(self):
        g = direct_sum(SL2R, SO3)
        first = Subspace.span([g.embed(0, x) for x in SL2R.basis()])
        self.assertTrue(first.is_ideal())
        self.assertFalse(Subspace.span([g.embed(0, SL2R['e1'])]).is_ideal())

    def test_decompose(self):
        k = Subspace.span([SL2R['e3']])
        m = Subspace.span([SL2R['e1'], SL2R['e2']])
        a, b = k.decompose(SL2R.element([1, 2, 3]), m)
        self.assertEqual(a, 3 * SL2R['e3'])
        self.assertEqual(b, SL2R.element([1, 2, 0]))

    @expect(ValueError)
    def test_decompose_not_complementary(self):
        k = Subspace.span([SL2R['e1']])
        k.decompose(SL2R['e1'], Subspace.span([SL2R['e1'], SL2R['e2']]))

    @expect(ValueError)
    def test_empty_span_needs_algebra(self):
        Subspace.span([])

    def test_zero(self):
        self.assertTrue(Subspace.zero(SL2R).is_zero)
        self.assertEqual(Subspace.zero(SL2R).matrix().shape, (0, 3))


class TestDirectSum(unittest.TestCase):

    def test_labels_and_summands(self):
        g = direct_sum(SL2R, SO3)
        self.assertEqual(g.dim, 6)
        self.assertEqual(g.labels[0], '1:e1')
        self.assertEqual(g.labels[3], '2:i e1')
        self.assertEqual(g.summands, (SL2R, SO3))
        self.assertEqual(g.name, 'sl2r+so3')

    def test_flattening(self):
        g = direct_sum(direct_sum(SL2R, SL2R), SO3)
        self.assertEqual(len(g.summands), 3)
        self.assertEqual(g.offset(2), 6)

    def test_cross_brackets_vanish(self):
        g = direct_sum(SL2R, SL2R)
        self.assertTrue(g.embed(0, SL2R['e1']).bracket(g.embed(1, SL2R['e2'])).is_zero)
        self.assertEqual(g.embed(1, SL2R['e1']).bracket(g.embed(1, SL2R['e2'])), g.embed(1, 2 * SL2R['e3']))

    def test_component_and_project(self):
        g = direct_sum(SL2R, SO3)
        x = g.embed(0, SL2R['e1']) + g.embed(1, SO3['e3'])
        self.assertEqual(x.component(0), SL2R['e1'])
        self.assertEqual(x.component(1), SO3['e3'])
        self.assertEqual(Subspace.span([x]).project(1), Subspace.span([SO3['e3']]))

    @expect(AlgebraMismatchError)
    def test_embed_wrong_summand(self):
        direct_sum(SL2R, SO3).embed(1, SL2R['e1'])


if __name__ == '__main__':
    unittest.main()
