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
from unittest import mock

from bolsect import check_exclusion, direct_intersection, eigensplit, is_lie_triple_system, \
    load_catalog, load_expected, parse_subspace, verify_tables
from bolsect._catalog.catalog import DATA_DIR, catalog_dir
from bolsect.config import CATALOG_ENV, MAX_CATALOG_DIM
from bolsect.errors import CatalogError
from tests.utils import expect

ENTRIES = load_catalog(validate=False)
BY_TAG = {entry.tag: entry for entry in ENTRIES}
EXPECTED = load_expected()

TAGS = ['sl2c', 'sl2c+sl2r', 'sl2c+so3', 'sl2r', 'sl2r+sl2r', 'sl2r+sl2r+sl2r', 'sl2r+sl2r+so3', 'sl2r+so3',
        'sl2r+so3+so3', 'sl3r', 'so3', 'so3+so3', 'so3+so3+so3', 'su21']


def copy_catalog():
    root = tempfile.mkdtemp()
    target = os.path.join(root, 'catalog')
    shutil.copytree(DATA_DIR, target)
    return root, target


class TestLoad(unittest.TestCase):

    def test_sorted_by_tag(self):
        self.assertEqual([e.tag for e in ENTRIES], TAGS)

    def test_dimensions(self):
        dims = {e.tag: e.dim for e in ENTRIES}
        self.assertEqual(dims['sl2r'], 3)
        self.assertEqual(dims['sl2c'], 6)
        self.assertEqual(dims['sl3r'], 8)
        self.assertEqual(dims['su21'], 8)
        self.assertEqual(dims['sl2c+sl2r'], 9)
        self.assertTrue(all(d <= MAX_CATALOG_DIM for d in dims.values()))

    def test_validating_load(self):
        self.assertEqual([e.tag for e in load_catalog()], TAGS)

    def test_expected_report(self):
        self.assertEqual(len(EXPECTED['verdicts']), 111)
        ids = {(e.tag, t.id) for e in ENTRIES for t in e.triples}
        self.assertEqual({(r['group'], r['triple']) for r in EXPECTED['verdicts']}, ids)

    def test_unknown_triple(self):
        with self.assertRaises(KeyError):
            BY_TAG['sl2r'].triple('nope')


class TestVerifyTables(unittest.TestCase):

    CHECKS = verify_tables(ENTRIES)

    def test_all_pass(self):
        failed = [c.to_dict() for c in self.CHECKS if not c.ok]
        self.assertEqual(failed, [])

    def test_named_checks(self):
        names = {(c.entry, c.check) for c in self.CHECKS}
        for expected in [('sl2r', 'jacobi'), ('sl2r', 'rep'), ('sl2c+sl2r', 'cartan:sl2r'), ('su21', 'hermitian:su21'),
                         ('su21', 'iwasawa'), ('sl3r', 'involution:tau1'), ('sl3r', 'subspace:h10'),
                         ('sl2c', 'witness:g2'), ('sl3r', 'triple ids'), ('sl3r', 'triple:gl2/m3')]:
            self.assertIn(expected, names)

    def test_unused_subspaces_have_roles(self):
        checks = {(c.entry, c.check): c.ok for c in self.CHECKS}
        for key in [('su21', 'subspace:a'), ('su21', 'subspace:n'), ('sl3r', 'subspace:k2'),
                    ('sl2r+sl2r', 'subspace:k_C2C3'), ('sl2c+sl2r', 'subspace:m4')]:
            self.assertTrue(checks[key], key)

    def test_simple_factor_checked_once(self):
        cartan = [c.entry for c in self.CHECKS if c.check == 'cartan:sl2r']
        self.assertEqual(cartan, ['sl2c+sl2r'])

    def test_every_involution_and_witness_is_checked(self):
        names = {(c.entry, c.check) for c in self.CHECKS}
        for entry in ENTRIES:
            for name in entry.involution_specs:
                self.assertIn((entry.tag, 'involution:' + name), names)
            for name in entry.witness_specs:
                self.assertIn((entry.tag, 'witness:' + name), names)
            for triple in entry.triples:
                self.assertIn((entry.tag, 'triple:' + triple.id), names)


class TestEigensplits(unittest.TestCase):

    def test_sl3r_tau1(self):
        entry = BY_TAG['sl3r']
        split = eigensplit(entry.involution('tau1'))
        self.assertEqual(split.h, parse_subspace(entry.algebra, ['e1 - e3', 'e2 - e4', 'e7 - e6']))
        self.assertEqual(split.m, parse_subspace(entry.algebra, ['e5', 'e8', 'e1 + e3', 'e2 + e4', 'e6 + e7']))
        self.assertTrue(split.graded())

    def test_sl3r_tau3(self):
        entry = BY_TAG['sl3r']
        split = eigensplit(entry.involution('tau3'))
        self.assertEqual(split.h, parse_subspace(entry.algebra, ['e5', 'e6', 'e7', 'e8']))
        self.assertEqual(split.m, parse_subspace(entry.algebra, ['e1', 'e2', 'e3', 'e4']))

    def test_sl2c_tau(self):
        entry = BY_TAG['sl2c']
        split = eigensplit(entry.involution('tau'))
        self.assertEqual(split.h, parse_subspace(entry.algebra, ['e3', 'ie3']))
        self.assertEqual(split.m, parse_subspace(entry.algebra, ['e1', 'e2', 'ie1', 'ie2']))

    def test_stored_spaces(self):
        for entry in ENTRIES:
            for name, spec in entry.involution_specs.items():
                split = eigensplit(entry.involution(name))
                self.assertEqual(split.h, entry.subspace(spec['plus']), '{} {}'.format(entry.tag, name))
                self.assertEqual(split.m, entry.subspace(spec['minus']), '{} {}'.format(entry.tag, name))


class TestWitnesses(unittest.TestCase):

    def verify(self, tag, triple_id, witness):
        entry = BY_TAG[tag]
        triple = entry.triple(triple_id)
        reports = []
        for params in entry.parameter_samples(triple.h, triple.m):
            h, m = entry.subspace(triple.h, params), entry.subspace(triple.m, params)
            report = check_exclusion(entry.witness(witness), h, m)
            # an intersecting sample is excluded before the witness is consulted
            self.assertTrue(report or direct_intersection(h, m) is not None, report.summary())
            reports.append(report)
        return reports

    def test_exact_sl2c(self):
        for triple in ('sl2r/isl2r', 'h1/m_tau'):
            self.assertTrue(all(r.exact for r in self.verify('sl2c', triple, 'g3')))

    def test_numeric_sl2c(self):
        self.assertFalse(any(r.exact for r in self.verify('sl2c', 'h3/m_tau', 'g2')))

    def test_exact_sl3r(self):
        for triple, witness in [('h3/m2', 'w3'), ('h5/m1', 'w5'), ('h5/m2', 'w5'), ('h6/m1', 'w6'),
                                ('h6/m2', 'w6')]:
            self.assertTrue(all(r.exact for r in self.verify('sl3r', triple, witness)))

    def test_sl2r(self):
        self.verify('sl2r', 'hyperbolic/m_C3', 'C3')
        self.verify('sl2r', 'parabolic/m_C3', 'parabolic')

    def test_su21(self):
        self.verify('su21', 't21/mcc', 'compact')
        for triple in ('t4/mcc', 't5/mcc', 't6/mcc'):
            self.verify('su21', triple, 'hyperbolic')

    def test_wrong_pair_rejected(self):
        entry = BY_TAG['sl2c']
        report = check_exclusion(entry.witness('g3'), entry.subspace('su2'), entry.subspace('m_cartan'))
        self.assertFalse(report)


class TestIntersections(unittest.TestCase):

    def pairs(self, record):
        entry = BY_TAG[record['group']]
        triple = entry.triple(record['triple'])
        for params in entry.parameter_samples(triple.h, triple.m):
            yield entry.subspace(triple.h, params), entry.subspace(triple.m, params)

    def test_intersection_records(self):
        records = [r for r in EXPECTED['verdicts'] if r['status'] == 'ExcludedByIntersection']
        self.assertEqual(len(records), 44)
        for record in records:
            for h, m in self.pairs(record):
                self.assertIsNotNone(direct_intersection(h, m), record['triple'])

    def test_other_records_meet_trivially_somewhere(self):
        for record in EXPECTED['verdicts']:
            if record['status'] == 'ExcludedByIntersection':
                continue
            self.assertTrue(any(direct_intersection(h, m) is None for h, m in self.pairs(record)),
                            '{} {}'.format(record['group'], record['triple']))


class TestFlagged(unittest.TestCase):

    def test_su21(self):
        entry = BY_TAG['su21']
        self.assertEqual(entry.subspaces['h2'].flagged, 'subalgebra')
        self.assertFalse(entry.subspace('h2').is_subalgebra())
        self.assertFalse(is_lie_triple_system(entry.subspace('m2')))

    def test_parameter_samples(self):
        entry = BY_TAG['su21']
        self.assertEqual(len(entry.parameter_samples('t5')), len(entry.subspaces['t5'].samples()))
        self.assertEqual(entry.subspaces['h2'].samples(), [{}])


class TestSurvivors(unittest.TestCase):

    def test_loop_names(self):
        loops = {r['loop'] for r in EXPECTED['verdicts'] if r['status'] == 'GlobalBruckLoop'}
        self.assertEqual(loops, {'H2', 'H3', 'CH2', 'SL3R/SO3', 'H2 x H2', 'H3 x H2', 'H2 x H2 x H2',
                                 'Scheerer(SL2R; H2)', 'Scheerer(SL2R; H3)', 'Scheerer(SL2C; H2)',
                                 'Scheerer(SO3; H3)', 'Scheerer(SO3; H2)', 'Scheerer(SO3 x SO3; H2)',
                                 'Scheerer(SL2R x SL2R; H2)', 'Scheerer(SL2R; H2 x H2)',
                                 'Scheerer(SL2R x SO3; H2)', 'Scheerer(SO3; H2 x H2)'})

    def test_compact_groups_have_no_survivors(self):
        for record in EXPECTED['verdicts']:
            if record['group'].startswith('so3'):
                self.assertNotEqual(record['status'], 'GlobalBruckLoop')


class TestCorrupted(unittest.TestCase):

    def setUp(self):
        self.root, self.path = copy_catalog()

    def tearDown(self):
        shutil.rmtree(self.root)

    def break_sl2r(self):
        with open(os.path.join(self.path, 'algebras', 'sl2r.alg'), 'a') as fh:
            fh.write('1 2 1 1\n')

    def test_jacobi_failure_reported(self):
        self.break_sl2r()
        checks = verify_tables(load_catalog(self.path, validate=False))
        failed = {(c.entry, c.check) for c in checks if not c.ok}
        self.assertIn(('sl2r', 'jacobi'), failed)
        self.assertNotIn(('sl3r', 'jacobi'), failed)

    def test_validating_load_raises(self):
        self.break_sl2r()
        with self.assertRaises(CatalogError) as context:
            load_catalog(self.path)
        self.assertEqual(context.exception.check, 'jacobi')

    def test_bad_json(self):
        with open(os.path.join(self.path, 'groups', 'sl2r.json'), 'w') as fh:
            fh.write('{')
        with self.assertRaises(CatalogError) as context:
            load_catalog(self.path)
        self.assertEqual(context.exception.check, 'parse')

    def test_dangling_witness(self):
        name = os.path.join(self.path, 'groups', 'sl2r.json')
        with open(name) as fh:
            data = json.load(fh)
        del data['witnesses']['C3']
        with open(name, 'w') as fh:
            json.dump(data, fh)
        failed = {(c.entry, c.check) for c in verify_tables(load_catalog(self.path, validate=False)) if not c.ok}
        self.assertEqual(failed, {('sl2r', 'triple:hyperbolic/m_C3')})

    def edit_group(self, tag, change):
        name = os.path.join(self.path, 'groups', '{}.json'.format(tag))
        with open(name) as fh:
            data = json.load(fh)
        change(data)
        with open(name, 'w') as fh:
            json.dump(data, fh)

    def test_unused_subspace_is_checked(self):
        self.edit_group('sl2r', lambda data: data['subspaces'].update(stray={'basis': ['e1', 'e2']}))
        checks = verify_tables(load_catalog(self.path, validate=False))
        failed = [c for c in checks if not c.ok]
        self.assertEqual([(c.entry, c.check) for c in failed], [('sl2r', 'subspace:stray')])
        with self.assertRaises(CatalogError) as context:
            load_catalog(self.path)
        self.assertEqual(context.exception.check, 'subspace:stray')

    def test_overlapping_iwasawa_parts(self):
        self.edit_group('su21', lambda data: data['subspaces']['n'].update(basis=data['subspaces']['a']['basis']))
        failed = {(c.entry, c.check) for c in verify_tables(load_catalog(self.path, validate=False)) if not c.ok}
        self.assertIn(('su21', 'iwasawa'), failed)

    @expect(CatalogError)
    def test_empty_groups(self):
        shutil.rmtree(os.path.join(self.path, 'groups'))
        os.mkdir(os.path.join(self.path, 'groups'))
        load_catalog(self.path)

    def test_missing_expected(self):
        os.remove(os.path.join(self.path, 'expected.json'))
        self.assertIsNone(load_expected(self.path))


class TestLocation(unittest.TestCase):

    @expect(CatalogError)
    def test_missing_directory(self):
        catalog_dir('/nonexistent/catalog')

    def test_default(self):
        with mock.patch.dict(os.environ, clear=False) as environ:
            environ.pop(CATALOG_ENV, None)
            self.assertEqual(catalog_dir(), DATA_DIR)

    def test_environment_override(self):
        with mock.patch.dict(os.environ, {CATALOG_ENV: '/nonexistent/catalog'}):
            with self.assertRaises(CatalogError):
                load_catalog()
            self.assertEqual(catalog_dir(DATA_DIR), DATA_DIR)


if __name__ == '__main__':
    unittest.main()
