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


import json
import os
import shutil
import tempfile
import unittest

from bolsect.cli import FAILED, OK, USAGE, main
from bolsect._catalog.catalog import DATA_DIR


class TestCli(unittest.TestCase):

    def setUp(self):
        self.root = tempfile.mkdtemp()
        self.out = os.path.join(self.root, 'report')

    def tearDown(self):
        shutil.rmtree(self.root)

    def run_json(self, *argv):
        code = main(list(argv) + ['--format', 'json', '--out', self.out])
        with open(self.out) as fh:
            return code, json.load(fh)

    def test_verify_tables(self):
        code, report = self.run_json('verify-tables')
        self.assertEqual(code, OK)
        self.assertEqual(report['failed'], 0)
        self.assertTrue(any(c['check'] == 'jacobi' and c['entry'] == 'sl3r' for c in report['checks']))

    def test_verify_tables_text(self):
        self.assertEqual(main(['verify-tables', '--group', 'sl2r', '--out', self.out]), OK)
        with open(self.out) as fh:
            self.assertTrue(fh.read().rstrip().endswith('0 failed'))

    def test_broken_catalog(self):
        catalog = os.path.join(self.root, 'catalog')
        shutil.copytree(DATA_DIR, catalog)
        with open(os.path.join(catalog, 'algebras', 'sl2r.alg'), 'a') as fh:
            fh.write('1 2 1 1\n')
        self.assertEqual(main(['verify-tables', '--catalog', catalog, '--out', self.out]), FAILED)
        self.assertEqual(main(['classify', '--catalog', catalog, '--out', self.out]), USAGE)

    def test_unknown_group(self):
        self.assertEqual(main(['verify-tables', '--group', 'e8', '--out', self.out]), USAGE)

    def test_missing_catalog(self):
        self.assertEqual(main(['verify-tables', '--catalog', os.path.join(self.root, 'nothing')]), USAGE)

    def test_bad_options(self):
        self.assertEqual(main(['classify', '--samples', '0']), USAGE)
        self.assertEqual(main(['classify', '--max-dim', '10']), USAGE)
        self.assertEqual(main(['reproduce', 'prop12', '--d', '1']), USAGE)
        self.assertEqual(main(['show']), USAGE)

    def test_unknown_reproducer(self):
        with self.assertRaises(SystemExit) as context:
            main(['reproduce', 'theorem1'])
        self.assertEqual(context.exception.code, 2)

    def test_reproduce_lemma7(self):
        code, report = self.run_json('reproduce', 'lemma7')
        self.assertEqual(code, OK)
        self.assertTrue(report['verdict'])
        self.assertEqual(report['reproducer'], 'lemma7')

    def test_reproduce_prop12(self):
        code, report = self.run_json('reproduce', 'prop12', '--d', '3')
        self.assertEqual(code, OK)
        self.assertEqual(report['parameters'], {'d': 3.0})

    def test_reproduce_prop19(self):
        code, report = self.run_json('reproduce', 'prop19', '--r', '-3', '0.5')
        self.assertEqual(code, OK)
        self.assertIn('H5_r=-3', report['checks'])
        self.assertEqual(report['parameters']['r'], [-3.0, 0.5])

    def test_reproduce_text(self):
        self.assertEqual(main(['reproduce', 'lemma7', '--out', self.out]), OK)
        with open(self.out) as fh:
            self.assertIn('verdict: reproduced', fh.read())

    def test_classify_nothing(self):
        code, report = self.run_json('classify', '--max-dim', '0')
        self.assertEqual(code, OK)
        self.assertEqual(report, {'verdicts': []})

    def test_classify_group(self):
        code, report = self.run_json('classify', '--group', 'sl2r', '--samples', '30')
        self.assertEqual(code, OK)
        self.assertEqual(len(report['verdicts']), 6)
        self.assertEqual({r['group'] for r in report['verdicts']}, {'sl2r'})

    def test_classify_deterministic(self):
        first = self.run_json('classify', '--group', 'so3+so3', '--samples', '30')
        second = self.run_json('classify', '--group', 'so3+so3', '--samples', '30')
        self.assertEqual(first, second)

    def test_show(self):
        code, record = self.run_json('show', '--group', 'sl3r')
        self.assertEqual(code, OK)
        self.assertEqual(record['dim'], 8)
        self.assertIn('w3', record['witnesses'])
        self.assertEqual(record['subspaces']['h10']['params'].keys(), {'b'})

    def test_show_text(self):
        self.assertEqual(main(['show', '--group', 'su21', '--out', self.out]), OK)
        with open(self.out) as fh:
            self.assertIn('flagged subalgebra', fh.read())

    def test_loop_suite(self):
        code, report = self.run_json('loop-suite', '--group', 'sl2r', '--samples', '20')
        self.assertEqual(code, OK)
        self.assertEqual([loop['loop'] for loop in report['loops']], ['H2'])
        self.assertTrue(all(s['verdict'] for s in report['loops'][0]['suites']))


if __name__ == '__main__':
    unittest.main()
