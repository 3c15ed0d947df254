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


import math
import os
import unittest

import numpy as np
import sympy

from bolsect import ExclusionWitness, GroupElement, Involution, MatrixRep, Subspace, WitnessKind, \
    bol_triple_check, check_exclusion, check_involution, direct_intersection, direct_sum, eigensplit, \
    is_lie_triple_system, product_involution, read_algebra
from bolsect._catalog.catalog import DATA_DIR
from bolsect.errors import InvolutionError, SubalgebraError
from tests.utils import expect

SL2R = read_algebra(os.path.join(DATA_DIR, 'algebras', 'sl2r.alg'))
SO3 = read_algebra(os.path.join(DATA_DIR, 'algebras', 'so3.alg'))
REP = MatrixRep(SL2R, [[[1, 0], [0, -1]], [[0, 1], [1, 0]], [[0, 1], [-1, 0]]], 'sl2r')

E1, E2, E3 = SL2R['e1'], SL2R['e2'], SL2R['e3']
CARTAN = sympy.diag(-1, -1, 1)
SECOND = sympy.diag(-1, 1, -1)
HALF = sympy.Rational(1, 2)


def span(*xs):
    return Subspace.span(list(xs))


class TestInvolution(unittest.TestCase):

    def test_cartan(self):
        tau = check_involution(SL2R, CARTAN, 'C2')
        self.assertEqual(tau(E1), -E1)
        self.assertEqual(tau(E3), E3)
        self.assertEqual(tau.name, 'C2')

    def test_eigensplit(self):
        split = eigensplit(check_involution(SL2R, CARTAN))
        self.assertEqual(split.plus, span(E3))
        self.assertEqual(split.minus, span(E1, E2))
        self.assertEqual(split.h, split.plus)
        self.assertTrue(split.graded())

    def test_second_class(self):
        split = check_involution(SL2R, SECOND).eigensplit()
        self.assertEqual(split.plus, span(E2))
        self.assertEqual(split.minus, span(E1, E3))

    def test_identity(self):
        split = Involution.identity(SL2R).eigensplit()
        self.assertEqual(split.plus.rank, 3)
        self.assertTrue(split.minus.is_zero)

    @expect(InvolutionError)
    def test_not_involutive(self):
        check_involution(SL2R, [[0, 1, 0], [-1, 0, 0], [0, 0, 1]])

    @expect(InvolutionError)
    def test_not_automorphism(self):
        check_involution(SL2R, sympy.diag(1, 1, -1))

    @expect(InvolutionError)
    def test_wrong_shape(self):
        check_involution(SL2R, sympy.eye(2))

    def test_product(self):
        g = direct_sum(SL2R, SO3)
        tau = product_involution(g, [check_involution(SL2R, CARTAN, 'C2'), Involution.identity(SO3)])
        self.assertEqual(tau.name, 'C2×id')
        split = tau.eigensplit()
        self.assertEqual(split.plus.rank, 4)
        self.assertEqual(split.minus, Subspace.span([g.embed(0, E1), g.embed(0, E2)]))

    @expect(InvolutionError)
    def test_product_arity(self):
        product_involution(direct_sum(SL2R, SO3), [check_involution(SL2R, CARTAN)])

    @expect(InvolutionError)
    def test_product_wrong_factor(self):
        product_involution(direct_sum(SL2R, SO3), [Involution.identity(SO3), Involution.identity(SL2R)])


class TestBolTriple(unittest.TestCase):

    def test_symmetric_pair(self):
        result = bol_triple_check(span(E3), span(E1, E2), check_involution(SL2R, CARTAN))
        self.assertTrue(result.ok)
        self.assertTrue(result.reductive)
        self.assertEqual(result.failures(), [])

    def test_without_involution(self):
        result = bol_triple_check(span(E2 + E3), span(E1, E2))
        self.assertTrue(result.ok)
        self.assertIsNone(result.reductive)

    def test_not_complement(self):
        result = bol_triple_check(span(E1), span(E1, E2))
        self.assertFalse(result.ok)
        self.assertIn('complement', result.failures())

    def test_not_generating(self):
        result = bol_triple_check(span(E1, E2 + E3), span(E3))
        self.assertEqual(result.failures(), ['generates'])

    @expect(SubalgebraError)
    def test_h_not_subalgebra(self):
        bol_triple_check(span(E1, E2), span(E3))

    @expect(InvolutionError)
    def test_wrong_eigensplit(self):
        bol_triple_check(span(E1), span(E2, E3), check_involution(SL2R, CARTAN))

    def test_triple_systems(self):
        self.assertTrue(is_lie_triple_system(span(E1, E2)))
        self.assertTrue(is_lie_triple_system(span(E3)))


class TestExclusion(unittest.TestCase):

    def test_direct_intersection(self):
        witness = direct_intersection(span(E2 + E3), span(E1, E2 + E3))
        self.assertIsNotNone(witness)
        self.assertIs(witness.kind, WitnessKind.DIRECT_INTERSECTION)
        report = check_exclusion(witness, span(E2 + E3), span(E1, E2 + E3))
        self.assertTrue(report)
        self.assertIn('h ∩ m', report.summary())

    def test_no_direct_intersection(self):
        self.assertIsNone(direct_intersection(span(E3), span(E1, E2)))

    def test_exact_conjugacy(self):
        g = GroupElement.from_exact(REP, [[HALF, HALF], [-1, 1]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, E1, 'left', 'rotate')
        report = check_exclusion(witness, span(E2), span(E1, E3))
        self.assertTrue(report)
        self.assertTrue(report.exact)
        self.assertEqual(report.image, E1)
        self.assertEqual(report.scale, 1)

    def test_right_side(self):
        g = GroupElement.from_exact(REP, [[1, -HALF], [1, HALF]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, E1, 'right', 'rotate')
        self.assertTrue(check_exclusion(witness, span(E2), span(E1, E3)))

    def test_multiple_of_target(self):
        g = GroupElement.from_exact(REP, [[HALF, HALF], [-1, 1]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, 3 * E1, 'left', 'rotate')
        report = check_exclusion(witness, span(E2), span(E1, E3))
        self.assertTrue(report)
        self.assertEqual(report.scale, sympy.Rational(1, 3))

    def test_strict_rejects_multiple(self):
        g = GroupElement.from_exact(REP, [[HALF, HALF], [-1, 1]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, 3 * E1, 'left', 'rotate')
        report = check_exclusion(witness, span(E2), span(E1, E3), projective=False)
        self.assertFalse(report)
        self.assertEqual(report.scale, sympy.Rational(1, 3))

    def test_strict_accepts_exact_image(self):
        g = GroupElement.from_exact(REP, [[HALF, HALF], [-1, 1]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, E1, 'left', 'rotate')
        self.assertTrue(check_exclusion(witness, span(E2), span(E1, E3), projective=False))

    def test_numeric_conjugacy(self):
        c = math.cos(math.pi / 4)
        g = GroupElement(REP, np.array([[c, -c], [c, c]]))
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E1, g, E2, 'left', 'quarter')
        report = check_exclusion(witness, span(E1), span(E2, E3))
        self.assertTrue(report)
        self.assertFalse(report.exact)
        self.assertLess(report.residual, 1e-12)

    def test_wrong_target(self):
        g = GroupElement.from_exact(REP, [[HALF, HALF], [-1, 1]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, E3, 'left', 'rotate')
        report = check_exclusion(witness, span(E2), span(E1, E3))
        self.assertFalse(report)
        self.assertIn('rejected', report.summary())

    def test_element_outside_h(self):
        witness = ExclusionWitness(WitnessKind.DIRECT_INTERSECTION, E1)
        self.assertFalse(check_exclusion(witness, span(E3), span(E1, E2)))

    def test_zero_element(self):
        witness = ExclusionWitness(WitnessKind.DIRECT_INTERSECTION, SL2R.zero())
        self.assertFalse(check_exclusion(witness, span(E3), span(E1, E2)))

    def test_target_outside_m(self):
        g = GroupElement.from_exact(REP, [[HALF, HALF], [-1, 1]])
        witness = ExclusionWitness(WitnessKind.CONJUGACY, E2, g, E1, 'left', 'rotate')
        self.assertFalse(check_exclusion(witness, span(E2), span(E3)))

    @expect(ValueError)
    def test_group_element_determinant(self):
        GroupElement.from_exact(REP, [[2, 0], [0, 1]])


if __name__ == '__main__':
    unittest.main()
