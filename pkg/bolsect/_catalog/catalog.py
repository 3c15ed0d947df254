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



"""
The machine-readable classification catalog.

A catalog directory holds:

* ``algebras/<tag>.alg``: structure constants of each simple algebra;
* ``reps.json``: one matrix representation per simple algebra, with its Cartan splitting;
* ``metadata.json``: the cited facts that the classification consumes as axioms;
* ``groups/<tag>.json``: one file per group with its involutions, named subspaces, conjugacy
  witnesses and the ``(h, m)`` triples to classify;
* ``expected.json``: the expected classification report.

Subspaces are lists of element expressions (see :mod:`bolsect._algebra.textfmt`) and may carry
parameters with the sample values at which they are checked.
"""

import itertools
import json
import logging
import os
from dataclasses import dataclass, field

import numpy as np
import sympy

from bolsect._algebra.involution import ExclusionWitness, WitnessKind, check_involution, eigensplit, \
    is_lie_triple_system, product_involution
from bolsect._algebra.liealg import Subspace, direct_sum
from bolsect._algebra.textfmt import parse_element, parse_matrix, parse_subspace, read_algebra
from bolsect._groups.matrixrep import GroupElement, MatrixRep, hermitian_form, rep_verify
from bolsect.config import CATALOG_ENV, MAX_CATALOG_DIM
from bolsect.errors import CatalogError, JacobiError

log = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')
EXPECTED_FILE = 'expected.json'


def catalog_dir(path=None):
    """
    Resolves the catalog directory: an explicit path, then ``$BOLSECT_CATALOG``, then the
    packaged data.

    :Raises: :class:`errors.CatalogError` if the directory does not exist.
    """
    path = path or os.environ.get(CATALOG_ENV) or DATA_DIR
    if not os.path.isdir(path):
        raise CatalogError(path, 'location', 'no such catalog directory')
    return path


def _read_json(path, entry):
    try:
        with open(path, 'r') as fh:
            return json.load(fh)
    except OSError as error:
        raise CatalogError(entry, 'read', str(error))
    except ValueError as error:
        raise CatalogError(entry, 'parse', '{}: {}'.format(path, error))


@dataclass(frozen=True)
class SimpleFactor(object):
    """
    A simple summand together with its matrix representation.

    :param space: display name of the symmetric space loop of the Cartan splitting, e.g. ``H2``.
    """
    tag: str
    title: str
    algebra: object
    rep: MatrixRep
    compact: bool
    space: str = None
    cartan_k: Subspace = None
    cartan_m: Subspace = None
    hermitian_signature: tuple = None


@dataclass(frozen=True)
class SubspaceSpec(object):
    name: str
    basis: tuple
    params: dict = field(default_factory=dict)
    flagged: str = None

    def samples(self):
        """
        Every assignment of the sample values to the parameters, ``[{}]`` without parameters.
        """
        names = sorted(self.params)
        return [dict(zip(names, values)) for values in itertools.product(*(self.params[n] for n in names))]


@dataclass(frozen=True)
class TripleSpec(object):
    """
    A pair ``(h, m)`` of named subspaces to classify.

    :param evidence: exclusion evidence records, tried in order within each kind.
    :param loop: model of the loop for surviving pairs.
    """
    id: str
    h: str
    m: str
    citation: str
    evidence: tuple = ()
    involution: str = None
    loop: dict = None


@dataclass(frozen=True)
class Fact(object):
    name: str
    citation: str
    statement: str


class CatalogEntry(object):
    """
    One group of the catalog: its algebra and representation, named involutions and subspaces,
    conjugacy witnesses and the triples to classify. Involutions are built on first use so that
    a broken table shows up in :func:`verify_tables` instead of at load time.
    """

    def __init__(self, tag, title, factors, involutions, subspaces, witnesses, triples, checks=None,
                 facts=None, factor_involutions=None):
        self.tag = tag
        self.title = title
        self.factors = tuple(factors)
        if len(self.factors) == 1:
            self.algebra = self.factors[0].algebra
            self.rep = self.factors[0].rep
        else:
            self.algebra = direct_sum(*[f.algebra for f in self.factors])
            self.rep = MatrixRep.direct_sum(self.algebra, [f.rep for f in self.factors])
        self.involution_specs = dict(involutions)
        self.subspaces = dict(subspaces)
        self.witness_specs = dict(witnesses)
        self.triples = tuple(triples)
        self.checks = dict(checks or {})
        self.facts = dict(facts or {})
        self._factor_involutions = dict(factor_involutions or {})
        self._involutions = {}

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def summand_tags(self):
        return tuple(f.tag for f in self.factors)

    def involution(self, name):
        """
        :Returns: :class:`Involution`

        :Raises: :class:`errors.InvolutionError` if the stored matrix is not an involutive automorphism.
        """
        if name not in self._involutions:
            spec = self.involution_specs[name]
            if 'factors' in spec:
                pieces = [self._factor_involutions[ref] for ref in spec['factors']]
                tau = product_involution(self.algebra, pieces, name)
            else:
                tau = check_involution(self.algebra, spec['matrix'], name)
            self._involutions[name] = tau
        return self._involutions[name]

    def subspace(self, name, params=None):
        spec = self.subspaces[name]
        return parse_subspace(self.algebra, spec.basis, params)

    def parameter_samples(self, *names):
        """
        The joint parameter samples of the named subspaces.
        """
        params = {}
        for name in names:
            params.update(self.subspaces[name].params)
        keys = sorted(params)
        return [dict(zip(keys, values)) for values in itertools.product(*(params[k] for k in keys))]

    def group_element(self, spec):
        """
        Builds a :class:`GroupElement` from a ``group`` matrix or from per-summand ``blocks``, where
        ``"I"`` stands for the identity block.
        """
        if 'group' in spec:
            rows = parse_matrix(spec['group'])
        else:
            if len(spec['blocks']) != len(self.factors):
                raise ValueError('expected {} blocks, got {}'.format(len(self.factors), len(spec['blocks'])))
            rows = sympy.diag(*[sympy.eye(f.rep.matrix_dim) if block == 'I' else parse_matrix(block)
                                for f, block in zip(self.factors, spec['blocks'])])
        return GroupElement.from_exact(self.rep, rows)

    def witness(self, name):
        """
        :Returns: the conjugacy :class:`ExclusionWitness` stored under ``name``.
        """
        spec = self.witness_specs[name]
        return ExclusionWitness(WitnessKind.CONJUGACY,
                                parse_element(self.algebra, spec['element']),
                                self.group_element(spec),
                                parse_element(self.algebra, spec['target']),
                                spec.get('side', 'left'),
                                name)

    def triple(self, triple_id):
        for triple in self.triples:
            if triple.id == triple_id:
                return triple
        raise KeyError('{} has no triple {}'.format(self.tag, triple_id))

    def __repr__(self):
        return 'CatalogEntry({}, dim {})'.format(self.tag, self.dim)


def _load_factors(directory):
    reps = _read_json(os.path.join(directory, 'reps.json'), 'reps.json')
    factors = {}
    for tag, spec in sorted(reps.items()):
        try:
            algebra = read_algebra(os.path.join(directory, 'algebras', spec['algebra']))
            rep = MatrixRep(algebra, [parse_matrix(m) for m in spec['matrices']], tag,
                            projective=[spec.get('projective', True)])
            cartan_k = cartan_m = None
            if 'cartan' in spec:
                cartan_k = parse_subspace(algebra, spec['cartan']['k'])
                cartan_m = parse_subspace(algebra, spec['cartan']['m'])
        except (OSError, KeyError, ValueError) as error:
            raise CatalogError(tag, 'algebra', str(error))
        signature = tuple(spec['hermitian_signature']) if 'hermitian_signature' in spec else None
        factors[tag] = SimpleFactor(tag, spec.get('title', tag), algebra, rep, bool(spec.get('compact')),
                                    spec.get('space'), cartan_k, cartan_m, signature)
    return factors


def _load_facts(directory):
    data = _read_json(os.path.join(directory, 'metadata.json'), 'metadata.json')
    return {name: Fact(name, spec['citation'], spec['statement']) for name, spec in data.get('facts', {}).items()}


def _entry(data, factors, facts, factor_involutions):
    tag = data['tag']
    try:
        pieces = [factors[t] for t in data['summands']]
    except KeyError as error:
        raise CatalogError(tag, 'summands', 'unknown simple algebra {}'.format(error))
    subspaces = {name: SubspaceSpec(name, tuple(spec['basis']), dict(spec.get('params', {})), spec.get('flagged'))
                 for name, spec in data.get('subspaces', {}).items()}
    triples = [TripleSpec(t['id'], t['h'], t['m'], t.get('citation', ''), tuple(t.get('evidence', ())),
                          t.get('involution'), t.get('loop')) for t in data.get('triples', ())]
    return CatalogEntry(tag, data.get('title', tag), pieces, data.get('involutions', {}), subspaces,
                        data.get('witnesses', {}), triples, data.get('checks'), facts, factor_involutions)


def load_catalog(path=None, validate=True):
    """
    Loads every group of the catalog, sorted by tag.

    :param path: catalog directory; see :func:`catalog_dir`.
    :param validate: run :func:`verify_tables` and raise on the first failed check.

    :Returns: :class:`list` of :class:`CatalogEntry`

    :Raises: :class:`errors.CatalogError` naming the entry and the check that failed.
    """
    directory = catalog_dir(path)
    groups = os.path.join(directory, 'groups')
    names = sorted(n for n in os.listdir(groups) if n.endswith('.json')) if os.path.isdir(groups) else []
    if not names:
        raise CatalogError(directory, 'location', 'no group files under groups/')
    factors = _load_factors(directory)
    facts = _load_facts(directory)
    raw = [_read_json(os.path.join(groups, n), n) for n in names]
    # product involutions refer to the involutions of the simple groups by "<tag>/<name>"
    factor_involutions = {}
    for data in raw:
        if len(data.get('summands', ())) != 1:
            continue
        factor = factors.get(data['summands'][0])
        if factor is None:
            continue
        for name, spec in data.get('involutions', {}).items():
            if 'matrix' in spec:
                try:
                    factor_involutions['{}/{}'.format(data['tag'], name)] = \
                        check_involution(factor.algebra, spec['matrix'], name)
                except ValueError as error:
                    log.warning('involution %s/%s is invalid: %s', data['tag'], name, error)
    entries = []
    for name, data in zip(names, raw):
        try:
            entries.append(_entry(data, factors, facts, factor_involutions))
        except CatalogError:
            raise
        except (KeyError, TypeError, ValueError) as error:
            raise CatalogError(name, 'parse', 'bad group record: {}'.format(error))
    entries.sort(key=lambda e: e.tag)
    if validate:
        for check in verify_tables(entries):
            if not check.ok:
                raise CatalogError(check.entry, check.check, check.detail)
    log.info('loaded %d catalog entries from %s', len(entries), directory)
    return entries


def load_expected(path=None):
    """
    The expected classification report shipped with the catalog, or ``None`` if there is none.
    """
    expected = os.path.join(catalog_dir(path), EXPECTED_FILE)
    if not os.path.isfile(expected):
        return None
    return _read_json(expected, EXPECTED_FILE)


@dataclass(frozen=True)
class TableCheck(object):
    entry: str
    check: str
    ok: bool
    detail: str = ''

    def to_dict(self):
        return {'entry': self.entry, 'check': self.check, 'ok': self.ok, 'detail': self.detail}


def _run(results, entry, check, fn):
    try:
        outcome = fn()
    except (ValueError, KeyError) as error:
        outcome = (False, str(error))
    ok, detail = outcome if isinstance(outcome, tuple) else (bool(outcome), '')
    results.append(TableCheck(entry.tag, check, ok, '' if ok else detail))
    if not ok:
        log.warning('%s: %s failed %s', entry.tag, check, detail)


def _jacobi(algebra):
    violations = algebra.verify_jacobi()
    return not violations, str(JacobiError(algebra.name, violations)) if violations else ''


def _rep(rep):
    report = rep_verify(rep)
    if report.ok:
        return True, ''
    if not report.injective:
        return False, 'rank {} < dim {}'.format(report.rank, report.dim)
    return False, 'bracket not preserved on {}'.format(', '.join('[{}, {}]'.format(*p) for p in report.failures))


def _signature(factor):
    form = hermitian_form(factor.rep)
    if form is None:
        return False, 'no unique invariant Hermitian form'
    eigenvalues = np.linalg.eigvalsh(form)
    got = (int(np.sum(eigenvalues > 1e-9)), int(np.sum(eigenvalues < -1e-9)))
    return got == factor.hermitian_signature, 'signature {}'.format(got)


def _cartan(factor):
    k, m = factor.cartan_k, factor.cartan_m
    if k.rank + m.rank != factor.algebra.dim or not k.intersect(m).is_zero:
        return False, 'k and m are not complementary'
    if not k.is_subalgebra():
        return False, 'k is not a subalgebra'
    return is_lie_triple_system(m), 'm is not a Lie triple system'


def _involution(entry, name):
    spec = entry.involution_specs[name]
    split = eigensplit(entry.involution(name))
    if split.plus != entry.subspace(spec['plus']):
        return False, 'fixed space {} differs from {}'.format(split.plus, spec['plus'])
    if split.minus != entry.subspace(spec['minus']):
        return False, '-1 eigenspace {} differs from {}'.format(split.minus, spec['minus'])
    return split.graded(), 'the eigensplit is not graded'


def _roles(entry):
    """
    The roles of the named subspaces: ``h`` for the ``h`` of a triple, the fixed space of an
    involution and the Iwasawa parts, ``m`` for the ``m`` of a triple and the -1 eigenspace of an
    involution.
    """
    roles = {}
    for triple in entry.triples:
        roles.setdefault(triple.h, set()).add('h')
        roles.setdefault(triple.m, set()).add('m')
    for spec in entry.involution_specs.values():
        for key, role in (('plus', 'h'), ('minus', 'm')):
            if key in spec:
                roles.setdefault(spec[key], set()).add(role)
    for name in entry.checks.get('iwasawa', {}).values():
        roles.setdefault(name, set()).add('h')
    return roles


def _subspace(entry, spec, roles):
    """
    Checks a named subspace at every parameter sample. Subspaces used as ``h`` must be subalgebras
    and those used as ``m`` Lie triple systems; a flagged entry must fail the flagged check.
    """
    wants_subalgebra = 'h' in roles or spec.flagged == 'subalgebra'
    wants_triple = 'm' in roles or spec.flagged == 'triple_system'
    if not (wants_subalgebra or wants_triple):
        return False, 'no triple, involution or Iwasawa check gives it an h or m role'
    for params in spec.samples():
        sub = entry.subspace(spec.name, params)
        where = ' at {}'.format(params) if params else ''
        if sub.is_zero:
            return False, 'zero subspace{}'.format(where)
        if wants_subalgebra and sub.is_subalgebra() != (spec.flagged != 'subalgebra'):
            return False, ('flagged as not a subalgebra but closed{}' if spec.flagged == 'subalgebra'
                           else 'not a subalgebra{}').format(where)
        if wants_triple and is_lie_triple_system(sub) != (spec.flagged != 'triple_system'):
            return False, ('flagged as not a Lie triple system but closed{}' if spec.flagged == 'triple_system'
                           else 'not a Lie triple system{}').format(where)
    return True, ''


def _iwasawa(entry, parts):
    k, a, n = (entry.subspace(parts[p]) for p in ('k', 'a', 'n'))
    algebra = entry.algebra
    if k.rank + a.rank + n.rank != algebra.dim or (k + a + n).rank != algebra.dim:
        return False, 'k + a + n is not a direct sum spanning the algebra'
    if any(not x.bracket(y).is_zero for x, y in itertools.combinations(a.basis, 2)):
        return False, 'a is not abelian'
    if any(not (algebra.ad(x) ** algebra.dim).is_zero_matrix for x in n.basis):
        return False, 'n is not ad-nilpotent'
    if n.escaping_bracket() is not None:
        return False, 'n is not a subalgebra'
    gram = k.matrix() * algebra.killing_matrix() * k.matrix().T
    return (-gram).is_positive_definite, 'the Killing form is not negative definite on k'


def _references(entry, triple):
    missing = [name for name in (triple.h, triple.m) if name not in entry.subspaces]
    if triple.involution is not None and triple.involution not in entry.involution_specs:
        missing.append(triple.involution)
    for evidence in triple.evidence:
        if evidence['kind'] == 'witness' and evidence['name'] not in entry.witness_specs:
            missing.append(evidence['name'])
        if evidence['kind'] == 'fact' and evidence['name'] not in entry.facts:
            missing.append(evidence['name'])
    if triple.loop is not None:
        indices = [i for key in ('summands', 'base', 'fiber') for i in triple.loop.get(key, ())]
        missing.extend('summand {}'.format(i) for i in indices if not 0 <= i < len(entry.factors))
    return not missing, 'unresolved references: {}'.format(', '.join(missing)) if missing else ''


def verify_tables(entries):
    """
    Runs the exact table checks over the catalog: Jacobi identities, representation homomorphisms,
    invariant Hermitian forms, Cartan splittings, involutions against their stored eigenspaces,
    subalgebra and Lie triple system checks at every parameter sample, witness group elements,
    the Iwasawa parts and the references of every triple.

    :Returns: :class:`list` of :class:`TableCheck`, in catalog order.
    """
    results = []
    seen = set()
    for entry in entries:
        _run(results, entry, 'dim', lambda: (entry.dim <= MAX_CATALOG_DIM, 'dimension {}'.format(entry.dim)))
        _run(results, entry, 'jacobi', lambda: _jacobi(entry.algebra))
        _run(results, entry, 'rep', lambda: _rep(entry.rep))
        for factor in entry.factors:
            if factor.tag in seen:
                continue
            seen.add(factor.tag)
            if factor.cartan_k is not None:
                _run(results, entry, 'cartan:' + factor.tag, lambda: _cartan(factor))
            if factor.hermitian_signature is not None:
                _run(results, entry, 'hermitian:' + factor.tag, lambda: _signature(factor))
        for name in sorted(entry.involution_specs):
            _run(results, entry, 'involution:' + name, lambda: _involution(entry, name))
        roles = _roles(entry)
        for name in sorted(entry.subspaces):
            _run(results, entry, 'subspace:' + name, lambda: _subspace(entry, entry.subspaces[name],
                                                                         roles.get(name, set())))
        for name in sorted(entry.witness_specs):
            _run(results, entry, 'witness:' + name, lambda: entry.witness(name) is not None)
        if 'iwasawa' in entry.checks:
            _run(results, entry, 'iwasawa', lambda: _iwasawa(entry, entry.checks['iwasawa']))
        ids = [t.id for t in entry.triples]
        _run(results, entry, 'triple ids', lambda: (len(ids) == len(set(ids)), 'duplicate triple ids'))
        for triple in entry.triples:
            _run(results, entry, 'triple:' + triple.id, lambda: _references(entry, triple))
        log.info('checked catalog entry %s', entry.tag)
    return results
