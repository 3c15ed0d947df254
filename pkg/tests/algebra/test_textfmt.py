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

import sympy

from bolsect import direct_sum, format_algebra, parse_algebra, parse_element, parse_matrix, parse_subspace, \
    read_algebra
from bolsect._algebra.textfmt import identifier
from bolsect._catalog.catalog import DATA_DIR
from tests.utils import expect

SL2R_TEXT = """
# sl2(R)
name sl2r
dim 3
labels e1, e2, e3
1 2 3 2
1 3 2 2   # [e1, e3] = 2 e2
2 3 1 -2
"""


class TestAlgebraFormat(unittest.TestCase):

    def test_parse(self):
        g = parse_algebra(SL2R_TEXT)
        self.assertEqual(g.name, 'sl2r')
        self.assertEqual(g.labels, ('e1', 'e2', 'e3'))
        self.assertEqual(g['e1'].bracket(g['e3']), 2 * g['e2'])

    def test_matches_shipped_file(self):
        self.assertEqual(parse_algebra(SL2R_TEXT), read_algebra(os.path.join(DATA_DIR, 'algebras', 'sl2r.alg')))

    def test_format(self):
        g = read_algebra(os.path.join(DATA_DIR, 'algebras', 'sl3r.alg'))
        self.assertEqual(parse_algebra(format_algebra(g)), g)

    @expect(ValueError)
    def test_short_line(self):
        parse_algebra('name x\nlabels a, b\n1 2 1\n')

    @expect(ValueError)
    def test_duplicate_entry(self):
        parse_algebra('name x\nlabels a, b\n1 2 1 1\n1 2 1 3\n')

    @expect(ValueError)
    def test_missing_header(self):
        parse_algebra('labels a, b\n')

    @expect(ValueError)
    def test_dim_mismatch(self):
        parse_algebra('name x\ndim 3\nlabels a, b\n')


class TestExpressions(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.sl2r = parse_algebra(SL2R_TEXT)
        cls.sl2c = read_algebra(os.path.join(DATA_DIR, 'algebras', 'sl2c.alg'))

    def test_identifier(self):
        self.assertEqual(identifier('i e1'), 'ie1')

    def test_element(self):
        x = parse_element(self.sl2r, 'e2 - 3*e1 + e3/2')
        self.assertEqual(x.coeffs, (-3, 1, sympy.Rational(1, 2)))

    def test_complex_labels(self):
        x = parse_element(self.sl2c, 'ie2 + ie3')
        self.assertEqual(x, self.sl2c['i e2'] + self.sl2c['i e3'])

    def test_parameters(self):
        x = parse_element(self.sl2r, 'a*e1 + e2', {'a': '2/3'})
        self.assertEqual(x, sympy.Rational(2, 3) * self.sl2r['e1'] + self.sl2r['e2'])

    @expect(ValueError)
    def test_unbound_parameter(self):
        parse_element(self.sl2r, 'a*e1')

    @expect(ValueError)
    def test_nonlinear(self):
        parse_element(self.sl2r, 'e1*e2')

    @expect(ValueError)
    def test_garbage(self):
        parse_element(self.sl2r, 'e1 +* )')

    def test_direct_sum_tuple(self):
        g = direct_sum(self.sl2r, self.sl2c)
        x = parse_element(g, '(e1, ie3)')
        self.assertEqual(x, g.embed(0, self.sl2r['e1']) + g.embed(1, self.sl2c['i e3']))

    def test_direct_sum_zero_component(self):
        g = direct_sum(self.sl2r, self.sl2r)
        self.assertEqual(parse_element(g, '(0, e2)'), g.embed(1, self.sl2r['e2']))

    def test_direct_sum_plain_tuple(self):
        g = direct_sum(self.sl2r, self.sl2r)
        self.assertEqual(parse_element(g, '(e3, 0)'), g.embed(0, self.sl2r['e3']))
        x = parse_element(g, '(a*e1, e2 - e3)', {'a': 2})
        self.assertEqual(x, g.embed(0, self.sl2r['e1'] * 2) + g.embed(1, self.sl2r['e2'] - self.sl2r['e3']))

    @expect(ValueError)
    def test_direct_sum_arity(self):
        parse_element(direct_sum(self.sl2r, self.sl2r), 'e1')

    def test_subspace(self):
        h = parse_subspace(self.sl2r, ['e1 + e2', 'e2'])
        self.assertEqual(h.rank, 2)
        self.assertIn(self.sl2r['e1'], h)

    def test_matrix(self):
        m = parse_matrix([['1', 'I/2'], ['-1/sqrt(2)', 0]])
        self.assertEqual(m[0, 1], sympy.I / 2)
        self.assertEqual(m[1, 0], -1 / sympy.sqrt(2))
        self.assertEqual(m[1, 1], 0)


if __name__ == '__main__':
    unittest.main()
