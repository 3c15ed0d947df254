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
The classification driver. Every catalog triple ``(g, h, m)`` is checked against its exclusion
evidence in a fixed order of precedence::

    intersection > conjugacy witness > coset doubling > divergence > cited fact

and a triple with no exclusion and a loop model is accepted only after the Bol triple check, a
comparison of the model's tangent data with ``(h, m)`` and the loop property suites.
"""

import enum
import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from bolsect._algebra.involution import bol_triple_check, check_exclusion, direct_intersection
from bolsect._algebra.liealg import Subspace, direct_sum
from bolsect._algebra.textfmt import parse_subspace
from bolsect._catalog.catalog import load_catalog
from bolsect._groups.loopcore import Hom, ScheererExtensionSpec, SymmetricSpaceLoop, direct_product, run_suites, \
    scheerer_extension
from bolsect._groups.matrixrep import MatrixRep, adjoint, mat_exp
from bolsect._groups.reproducers import REPRODUCERS
from bolsect._groups.stabilizers import Spiral, TriangularTimesRotation, Unitriangular
from bolsect.config import DEFAULT_TOLERANCES, MAX_CATALOG_DIM
from bolsect.errors import ReproductionError, SectionError

log = logging.getLogger(__name__)


class Status(enum.Enum):
    GLOBAL_BRUCK_LOOP = 'GlobalBruckLoop'
    EXCLUDED_BY_INTERSECTION = 'ExcludedByIntersection'
    EXCLUDED_BY_CONJUGACY = 'ExcludedByConjugacy'
    EXCLUDED_BY_COSET_DOUBLING = 'ExcludedByCosetDoubling'
    EXCLUDED_BY_DIVERGENCE = 'ExcludedByDivergence'
    EXCLUDED_BY_METADATA_FACT = 'ExcludedByMetadataFact'
    UNRESOLVED = 'Unresolved'


PRECEDENCE = ('intersection', 'witness', 'coset', 'divergence', 'fact')

EXCLUSIONS = {
    'intersection': Status.EXCLUDED_BY_INTERSECTION,
    'witness': Status.EXCLUDED_BY_CONJUGACY,
    'coset': Status.EXCLUDED_BY_COSET_DOUBLING,
    'divergence': Status.EXCLUDED_BY_DIVERGENCE,
    'fact': Status.EXCLUDED_BY_METADATA_FACT,
}


@dataclass(frozen=True)
class Evidence(object):
    kind: str
    ref: str
    summary: str = ''


@dataclass
class ClassificationVerdict(object):
    """
    The outcome for one triple. ``reports`` holds the loop suite reports of accepted loops and
    ``notes`` explains an unresolved triple.
    """
    group: str
    triple: str
    status: Status
    citation: str
    evidence: Evidence = None
    loop: str = None
    reports: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def excluded(self):
        return self.status not in (Status.GLOBAL_BRUCK_LOOP, Status.UNRESOLVED)

    def to_record(self):
        """
        The deterministic JSON record; residuals and timings are left out.
        """
        evidence = {'kind': self.evidence.kind, 'ref': self.evidence.ref} if self.evidence else None
        return {'group': self.group, 'triple': self.triple, 'status': self.status.value,
                'citation': self.citation, 'evidence': evidence, 'loop': self.loop}

    def summary(self):
        if self.evidence is not None:
            detail = self.evidence.summary or self.evidence.ref
        else:
            detail = '; '.join(self.notes)
        return '{:<16} {:<24} {:<26} [{}] {}'.format(self.group, self.triple, self.status.value,
                                                     self.citation, detail)


def _summand_space(entry, k):
    return Subspace.span([entry.algebra.embed(k, x) for x in entry.factors[k].algebra.basis()], entry.algebra)


def _fact_lemma2(entry, triple, h, m):
    parts = [h.intersect(_summand_space(entry, k)) for k in range(len(entry.factors))]
    total = Subspace.zero(entry.algebra)
    for part in parts:
        total = total + part
    return total == h and any(f.tag == 'so3' and not p.is_zero for f, p in zip(entry.factors, parts))


def _fact_lemma3(entry, triple, h, m):
    compact = [k for k, f in enumerate(entry.factors) if f.tag == 'so3']
    embed = entry.algebra.embed
    for i in compact:
        for j in compact:
            if i < j:
                basis = entry.factors[i].algebra.basis()
                if Subspace.span([embed(i, x) + embed(j, x) for x in basis]) <= h:
                    return True
    return False


def _fact_prop4(entry, triple, h, m):
    return all(f.compact for f in entry.factors)


def _fact_swap(entry, triple, h, m):
    if triple.involution is None or len(entry.factors) < 2 or entry.factors[0].tag != entry.factors[1].tag:
        return False
    tau = entry.involution(triple.involution)
    embed = entry.algebra.embed
    return all(tau(embed(0, x)) == embed(1, x) for x in entry.factors[0].algebra.basis())


def _fact_axiom(entry, triple, h, m):
    return True


FACT_CHECKS = {
    'lemma2': _fact_lemma2,
    'lemma3': _fact_lemma3,
    'prop4': _fact_prop4,
    'swap': _fact_swap,
    'lemma5': _fact_axiom,
}


def _evidence_ref(record):
    kind = record['kind']
    if kind in ('witness', 'fact'):
        return record['name']
    family = record.get('family')
    if family is None:
        return record['reproducer']
    return '{}:{}'.format(record['reproducer'], 'H{}'.format(family) if isinstance(family, int) else family)


def _self_adjoint(rep, m):
    return all(float(np.max(np.abs(x - adjoint(x)))) <= 1e-12 for x in (rep(y) for y in m.basis))


def _exp_inside(rep, h, family, tolerance):
    return all(family.contains(mat_exp(rep(x)), tolerance) for x in h.basis)


def _symmetric(entry, indices, name=None):
    factors = [entry.factors[i] for i in indices]
    for f in factors:
        if f.cartan_m is None:
            raise SectionError(f.tag, 'no Cartan splitting is recorded')
    if len(factors) == 1:
        f = factors[0]
        return SymmetricSpaceLoop(name or f.space, f.rep, f.cartan_m, f.cartan_k)
    algebra = direct_sum(*[f.algebra for f in factors])
    rep = MatrixRep.direct_sum(algebra, [f.rep for f in factors])
    m = Subspace.span([algebra.embed(p, x) for p, f in enumerate(factors) for x in f.cartan_m.basis])
    k = Subspace.span([algebra.embed(p, x) for p, f in enumerate(factors) for x in f.cartan_k.basis])
    return SymmetricSpaceLoop(name or ' × '.join(f.space for f in factors), rep, m, k)


def _group_rep(entry, indices):
    factors = [entry.factors[i] for i in indices]
    if len(factors) == 1:
        return factors[0].rep
    algebra = direct_sum(*[f.algebra for f in factors])
    return MatrixRep.direct_sum(algebra, [f.rep for f in factors])


def build_loop(entry, spec, seed=0):
    """
    Builds the loop model of a catalog triple: a symmetric space loop, a direct product of them or
    a Scheerer extension with a symmetric space base.

    :Raises: :class:`errors.SectionError` or :class:`errors.HomomorphismError` if the model is invalid.
    """
    kind = spec['kind']
    if kind == 'symmetric':
        return _symmetric(entry, spec['summands'], spec.get('name'))
    if kind == 'product':
        return direct_product(*[_symmetric(entry, [i]) for i in spec['summands']])
    if kind == 'scheerer':
        hom = Hom(**spec.get('hom', {}))
        extension = ScheererExtensionSpec(_symmetric(entry, spec['base']), _group_rep(entry, spec['fiber']), hom,
                                          spec.get('name'))
        return scheerer_extension(extension, np.random.default_rng(seed))
    raise ValueError('unknown loop kind {!r}'.format(kind))


def loop_tangent(entry, spec):
    """
    The pair ``(h, m)`` a loop model is expected to realize. A Scheerer extension has
    ``m = m1 ⊕ g2`` and ``h`` the graph of the differential of its homomorphism on ``k1``.

    :Returns: :class:`tuple` of two :class:`Subspace`
    """
    algebra, factors = entry.algebra, entry.factors
    embed = algebra.embed
    if spec['kind'] in ('symmetric', 'product'):
        indices = spec['summands']
        h = Subspace.span([embed(i, x) for i in indices for x in factors[i].cartan_k.basis], algebra)
        m = Subspace.span([embed(i, x) for i in indices for x in factors[i].cartan_m.basis], algebra)
        return h, m
    base, fiber, hom = spec['base'], spec['fiber'], spec.get('hom', {})
    source, targets, power = hom.get('source', 0), hom.get('targets', ()), hom.get('power', 1)
    m = Subspace.span([embed(b, x) for b in base for x in factors[b].cartan_m.basis]
                      + [embed(f, y) for f in fiber for y in factors[f].algebra.basis()], algebra)
    vectors = []
    for p, b in enumerate(base):
        for x in factors[b].cartan_k.basis:
            v = embed(b, x)
            if p == source:
                for t in targets:
                    image = factors[fiber[t]].rep.element(factors[b].rep(x))
                    v = v + embed(fiber[t], image * power)
            vectors.append(v)
    return Subspace.span(vectors, algebra), m


class Classifier(object):
    """
    Classifies catalog triples. Reproducer runs are cached per parameter set.

    :param samples: samples per loop property suite.
    :param tolerance: residual bound of the loop suites.
    :param d: spiral parameter used by the unitriangular divergence evidence.
    """

    def __init__(self, samples=1000, tolerance=1e-8, seed=0, d=2.0, tolerances=DEFAULT_TOLERANCES):
        self.samples = samples
        self.tolerance = tolerance
        self.seed = seed
        self.d = d
        self.tolerances = tolerances
        self._reproductions = {}

    def reproduce(self, name, **params):
        key = (name, tuple(sorted(params.items())))
        if key not in self._reproductions:
            try:
                verdict = REPRODUCERS[name](**params).verdict
            except ReproductionError as error:
                log.warning('%s', error)
                verdict = False
            self._reproductions[key] = verdict
        return self._reproductions[key]

    def _coset(self, entry, record, h, m, params):
        rep, tolerance = entry.rep, self.tolerances.membership
        if not _self_adjoint(rep, m):
            return False, 'm is not self-adjoint'
        if record['reproducer'] == 'prop12':
            d = math.exp(float(params[record['parameter']]))
            if not _exp_inside(rep, h, Spiral(d), tolerance):
                return False, 'exp h is not the spiral family with d = {:g}'.format(d)
            return self.reproduce('prop12', d=d), 'two representatives of one coset, spiral d = {:g}'.format(d)
        if record['reproducer'] == 'prop19':
            r = float(params[record['parameter']]) if 'parameter' in record else 0.0
            family = TriangularTimesRotation(record['family'], r)
            if not _exp_inside(rep, h, family, tolerance):
                return False, 'exp h is not {}'.format(family)
            ok = self.reproduce('prop19', r_values=(r,), kinds=(record['family'],))
            return ok, 'two representatives of one coset of {}'.format(family)
        return False, 'unknown coset reproducer {}'.format(record['reproducer'])

    def _divergence(self, entry, record, h, m):
        if record['reproducer'] == 'lemma7':
            k = record['component']
            factor = entry.factors[k]
            if factor.tag != 'sl2r':
                return False, 'component {} is not sl2r'.format(k)
            piece = factor.algebra
            borel = (parse_subspace(piece, ['e2 + e3']), parse_subspace(piece, ['e1', 'e2 + e3']))
            if h.project(k) not in borel or m.project(k) != parse_subspace(piece, ['e1', 'e2']):
                return False, 'the projections to component {} do not match'.format(k)
            return self.reproduce('lemma7'), 'escaping representatives in component {}'.format(k)
        if record['reproducer'] == 'prop12' and record.get('family') == 'unitriangular':
            rep = entry.rep
            if h.rank != 3 or not _exp_inside(rep, h, Unitriangular(3), self.tolerances.membership):
                return False, 'exp h is not the unitriangular group'
            if not _self_adjoint(rep, m):
                return False, 'm is not self-adjoint'
            return self.reproduce('prop12', d=self.d), 'escaping unitriangular representatives'
        return False, 'unknown divergence reproducer {}'.format(record['reproducer'])

    def _holds(self, entry, triple, kind, record, h, m, params):
        if kind == 'intersection':
            witness = direct_intersection(h, m)
            return witness is not None, 'h ∩ m contains {}'.format(witness.element) if witness else ''
        if kind == 'witness':
            report = check_exclusion(entry.witness(record['name']), h, m, self.tolerances)
            return bool(report), report.summary()
        if kind == 'coset':
            return self._coset(entry, record, h, m, params)
        if kind == 'divergence':
            return self._divergence(entry, record, h, m)
        if kind == 'fact':
            fact = entry.facts[record['name']]
            return FACT_CHECKS[record['name']](entry, triple, h, m), '{}: {}'.format(fact.citation, fact.statement)
        raise ValueError('unknown evidence kind {!r}'.format(kind))

    def _exclusion(self, entry, triple):
        candidates = [('intersection', 'intersection', None)]
        candidates += [(r['kind'], _evidence_ref(r), r) for r in triple.evidence]
        samples = entry.parameter_samples(triple.h, triple.m)
        table = [[] for _ in candidates]
        for params in samples:
            h, m = entry.subspace(triple.h, params), entry.subspace(triple.m, params)
            for i, (kind, _, record) in enumerate(candidates):
                try:
                    table[i].append(self._holds(entry, triple, kind, record, h, m, params))
                except (ValueError, KeyError) as error:
                    table[i].append((False, str(error)))

        def rank(i):
            return PRECEDENCE.index(candidates[i][0]), i
        order = sorted(range(len(candidates)), key=rank)
        chosen = next((i for i in order if all(ok for ok, _ in table[i])), None)
        if chosen is None:
            picks = []
            for s in range(len(samples)):
                holding = [i for i in order if table[i][s][0]]
                if not holding:
                    return None
                picks.append(holding[0])
            chosen = max(picks, key=rank)
        kind, ref, _ = candidates[chosen]
        summary = next(detail for ok, detail in table[chosen] if ok)
        if len(samples) > 1:
            summary = '{} ({} parameter samples)'.format(summary, len(samples))
        return Evidence(kind, ref, summary)

    def _survivor(self, entry, triple, verdict):
        h, m = entry.subspace(triple.h), entry.subspace(triple.m)
        involution = entry.involution(triple.involution) if triple.involution else None
        bol = bol_triple_check(h, m, involution)
        if not bol.ok:
            verdict.notes.append('Bol triple conditions fail: {}'.format(', '.join(bol.failures())))
            return verdict
        loop = build_loop(entry, triple.loop, self.seed)
        if loop_tangent(entry, triple.loop) != (h, m):
            verdict.notes.append('the loop model does not realize ({}, {})'.format(triple.h, triple.m))
            return verdict
        if loop.stabilizer.dimension != h.rank:
            verdict.notes.append('stabilizer dimension {} differs from dim h = {}'.format(
                loop.stabilizer.dimension, h.rank))
            return verdict
        verdict.reports = run_suites(loop, self.samples, self.tolerance, self.seed)
        failed = [r.suite for r in verdict.reports if not r.verdict]
        if failed:
            verdict.notes.append('loop suites failed: {}'.format(', '.join(failed)))
            return verdict
        worst = max(r.max_residual for r in verdict.reports)
        verdict.status = Status.GLOBAL_BRUCK_LOOP
        verdict.evidence = Evidence('loop', triple.loop['name'], '{}: {} suites passed, max residual {:.1e}'.format(
            loop.name, len(verdict.reports), worst))
        return verdict

    def classify(self, entry, triple):
        """
        :Returns: :class:`ClassificationVerdict`
        """
        verdict = ClassificationVerdict(entry.tag, triple.id, Status.UNRESOLVED, triple.citation,
                                        loop=triple.loop['name'] if triple.loop else None)
        evidence = self._exclusion(entry, triple)
        if evidence is not None:
            verdict.status = EXCLUSIONS[evidence.kind]
            verdict.evidence = evidence
        elif triple.loop is not None:
            try:
                self._survivor(entry, triple, verdict)
            except ValueError as error:
                verdict.notes.append(str(error))
        else:
            verdict.notes.append('no exclusion evidence holds and no loop model is recorded')
        log.info('%s %s: %s', entry.tag, triple.id, verdict.status.value)
        return verdict


def run_classification(max_dim=MAX_CATALOG_DIM, entries=None, catalog=None, samples=1000, tolerance=1e-8, seed=0,
                       d=2.0):
    """
    Classifies every triple of every catalog group with ``dim g <= max_dim``.

    :param entries: preloaded catalog entries; loaded from ``catalog`` when omitted.

    :Returns: :class:`list` of :class:`ClassificationVerdict` ordered by group tag and triple id.

    :Raises: :class:`ValueError` if ``max_dim`` is outside ``0..9``.
    """
    if not 0 <= max_dim <= MAX_CATALOG_DIM:
        raise ValueError('max_dim must lie in 0..{}, got {}'.format(MAX_CATALOG_DIM, max_dim))
    if entries is None:
        entries = load_catalog(catalog)
    classifier = Classifier(samples, tolerance, seed, d)
    verdicts = [classifier.classify(entry, triple)
                for entry in entries if entry.dim <= max_dim
                for triple in entry.triples]
    return sorted(verdicts, key=lambda v: (v.group, v.triple))


def survivors_by_dim(verdicts, entries):
    dims = {entry.tag: entry.dim for entry in entries}
    table = {}
    for v in verdicts:
        if v.status is Status.GLOBAL_BRUCK_LOOP:
            table.setdefault(dims[v.group], []).append(v)
    return table


def emit_report(verdicts, format='text', entries=None):
    """
    Renders verdicts ordered by group tag and triple id. JSON output holds only deterministic fields,
    so reruns with the same configuration are byte-identical. The text table ends with the
    surviving loops grouped by the dimension of the group when ``entries`` is given.

    :Raises: :class:`ValueError` on an unknown format.
    """
    verdicts = sorted(verdicts, key=lambda v: (v.group, v.triple))
    if format == 'json':
        return json.dumps({'verdicts': [v.to_record() for v in verdicts]}, indent=2, sort_keys=True) + '\n'
    if format != 'text':
        raise ValueError('unknown report format {!r}, expected text or json'.format(format))
    lines = [v.summary() for v in verdicts]
    counts = {}
    for v in verdicts:
        counts[v.status.value] = counts.get(v.status.value, 0) + 1
    lines.append('')
    lines.append('{} triples: {}'.format(len(verdicts), ', '.join(
        '{} {}'.format(n, status) for status, n in sorted(counts.items()))))
    if entries is not None:
        lines.append('surviving loops by dim G:')
        for dim, group in sorted(survivors_by_dim(verdicts, entries).items()):
            lines.append('  dim {}: {}'.format(dim, ', '.join('{} on {}'.format(v.loop, v.group) for v in group)))
    return '\n'.join(lines) + '\n'


def golden_mismatches(verdicts, expected, groups):
    """
    Compares verdict records with the expected report restricted to ``groups``.

    :Returns: :class:`list` of ``(group, triple, expected record, actual record)``; empty on a match.
    """
    want = {(r['group'], r['triple']): r for r in expected.get('verdicts', ()) if r['group'] in groups}
    got = {(v.group, v.triple): v.to_record() for v in verdicts}
    return [(key[0], key[1], want.get(key), got.get(key))
            for key in sorted(set(want) | set(got)) if want.get(key) != got.get(key)]
