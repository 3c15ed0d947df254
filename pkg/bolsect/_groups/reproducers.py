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
Reproducers for the coset computations that rule out loops: a family of symmetric matrices that
escapes to infinity inside converging cosets, and pairs of distinct positive definite
representatives of one coset.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from bolsect._groups.matrixrep import format_matrix
from bolsect._groups.stabilizers import Borel, Spiral, TriangularTimesRotation, Unitriangular
from bolsect.config import DEFAULT_TOLERANCES
from bolsect.errors import ReproductionError

log = logging.getLogger(__name__)

LEMMA7_GRID = (0.0, 1.0) + tuple(-1 + 10.0 ** -k for k in range(1, 9))
PROP19_R = (0.0, 1.0, -1.0, 2.0)


@dataclass
class ReproductionReport(object):
    name: str
    parameters: dict
    rows: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return bool(self.checks) and all(self.checks.values())

    def to_dict(self):
        return {'reproducer': self.name, 'parameters': dict(self.parameters), 'rows': list(self.rows),
                'checks': dict(self.checks), 'verdict': self.verdict}


def in_positive_cone(x, tolerance=DEFAULT_TOLERANCES.membership):
    """
    Whether ``x`` is self-adjoint positive definite with determinant 1, i.e. lies in ``exp m`` for
    the Cartan involution ``x -> (x*)⁻¹``. Definiteness is read off the leading principal minors.
    """
    x = np.asarray(x)
    scale = max(1.0, float(np.max(np.abs(x))))
    if float(np.max(np.abs(x - x.conj().T))) > tolerance * scale:
        return False
    if abs(np.linalg.det(x) - 1) > tolerance * scale ** x.shape[0]:
        return False
    return all(np.linalg.det(x[:k, :k]).real > 0 for k in range(1, x.shape[0] + 1))


def lemma7_g(c):
    return np.array([[1 + c, 1.0], [c, 1.0]])


def lemma7_s(c):
    return np.array([[1 + c, c], [c, (c * c + 1) / (1 + c)]])


def _divergence(name, grid, g_of, s_of, family, tolerance):
    report = ReproductionReport(name, {'grid': list(grid)})
    norms, gs = [], []
    for c in grid:
        g, s = g_of(c), s_of(c)
        if not in_positive_cone(s, tolerance):
            raise ReproductionError(name, 's({}) outside the positive cone'.format(c))
        if not family.contains(np.linalg.solve(g, s), tolerance):
            raise ReproductionError(name, 's({}) outside the coset g({})H'.format(c, c))
        norm = float(np.max(np.abs(s)))
        report.rows.append({'c': c, 'g': format_matrix(g), 's': format_matrix(s), 'norm_s': '{:.12g}'.format(norm)})
        if c < 0:
            norms.append(norm)
            gs.append(g)
    report.checks['norms_increase'] = all(a < b for a, b in zip(norms, norms[1:]))
    report.checks['norm_exceeds_1e6'] = norms[-1] > 1e6
    report.checks['g_converges'] = float(np.max(np.abs(gs[-1] - gs[-2]))) < 1e-4
    log.info('%s: final norm %.3e, verdict %s', name, norms[-1], report.verdict)
    return report


def reproduce_lemma7(tolerance=DEFAULT_TOLERANCES.membership):
    """
    Walks ``c`` towards ``-1`` and checks that ``s(c) = (1+c, c; c, (c²+1)/(1+c))`` is a positive
    definite representative of the coset ``g(c)H`` with ``g(c) = (1+c, 1; c, 1)`` and ``H`` upper
    triangular. ``s(c)`` must blow up while ``g(c)`` converges.

    :Returns: :class:`ReproductionReport`

    :Raises: :class:`errors.ReproductionError` if a membership fails.
    """
    return _divergence('lemma7', LEMMA7_GRID, lemma7_g, lemma7_s, Borel(), tolerance)


def prop12_m2(d):
    u, w = d ** (-4 * math.pi), d ** (2 * math.pi)
    return np.array([[2 * u, u, 0.0], [u, (u + w) / 2, 0.0], [0.0, 0.0, w]])


PROP12_M1 = np.array([[2.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])


def reproduce_prop12(d=2.0, tolerance=DEFAULT_TOLERANCES.membership):
    """
    Shows that the coset ``g1 H2`` of the spiral family with parameter ``d`` contains the two
    distinct positive definite matrices ``m1 = g1`` and ``m2``, reached at ``t = 0`` and ``t = 2π``,
    and that the unitriangular family admits the escaping representatives ``s3(c) = (s(c), 1)``.

    :Returns: :class:`ReproductionReport`

    :Raises: :class:`errors.ReproductionError` if a membership or definiteness check fails.
    """
    family = Spiral(d)
    g1, m1, m2 = PROP12_M1, PROP12_M1, prop12_m2(d)
    ts = []
    for label, m in (('m1', m1), ('m2', m2)):
        if not in_positive_cone(m, tolerance):
            raise ReproductionError('prop12', '{} outside the positive cone'.format(label))
        t = family.solve_t(np.linalg.solve(g1, m), tolerance)
        if t is None:
            raise ReproductionError('prop12', '{} outside the coset g1 H2'.format(label))
        ts.append(t)
    spiral = ReproductionReport('prop12', {'d': d})
    spiral.rows.append({'m1': format_matrix(m1), 'm2': format_matrix(m2), 'g1': format_matrix(g1),
                        't': ['{:.12g}'.format(t) for t in ts]})
    spiral.checks['distinct_t'] = len({round(t, 6) for t in ts}) >= 2
    spiral.checks['distinct_representatives'] = float(np.max(np.abs(m1 - m2))) > 0.1

    def g3(c):
        return scipy.linalg.block_diag(lemma7_g(c), 1.0)

    def s3(c):
        return scipy.linalg.block_diag(lemma7_s(c), 1.0)
    unipotent = _divergence('prop12', LEMMA7_GRID, g3, s3, Unitriangular(3), tolerance)
    spiral.rows.extend(unipotent.rows)
    spiral.checks.update(unipotent.checks)
    log.info('prop12 d=%g: t values %s, verdict %s', d, ts, spiral.verdict)
    return spiral


PROP19_G = np.array([[5.0, 1.0], [4.0, 1.0]])
PROP19_M1 = np.array([[5 / 4, 1.0], [1.0, 8 / 5]])
PROP19_M2 = np.array([[5.0, 4.0], [4.0, 17 / 5]])


def _pair(first):
    return scipy.linalg.block_diag(np.asarray(first, dtype=complex), np.eye(2))


def reproduce_prop19(r_values=PROP19_R, kinds=(5, 6, 8), tolerance=DEFAULT_TOLERANCES.membership):
    """
    Checks that ``(m1, 1)`` and ``(m2, 1)`` lie in the positive cone of ``SL2(C) × SL2(R)`` and in the
    coset ``(g, 1)H`` for each triangular-times-rotation family and each ``r``.

    :Returns: :class:`ReproductionReport`

    :Raises: :class:`errors.ReproductionError` if a cone membership fails.
    """
    report = ReproductionReport('prop19', {'r': list(r_values), 'families': ['H{}'.format(k) for k in kinds]})
    m1, m2, g = _pair(PROP19_M1), _pair(PROP19_M2), _pair(PROP19_G)
    for label, m in (('m1', m1), ('m2', m2)):
        if not (in_positive_cone(m[:2, :2], tolerance) and in_positive_cone(m[2:, 2:], tolerance)):
            raise ReproductionError('prop19', '{} outside the positive cone'.format(label))
    report.checks['distinct_representatives'] = bool(np.max(np.abs(m1 - m2)) > 1)
    for kind in kinds:
        for r in r_values:
            family = TriangularTimesRotation(kind, r)
            got = [bool(family.contains(np.linalg.solve(g, m), tolerance)) for m in (m1, m2)]
            key = 'H{}_r={:g}'.format(kind, r)
            report.rows.append({'family': 'H{}'.format(kind), 'r': r, 'm1_in_coset': got[0], 'm2_in_coset': got[1]})
            report.checks[key] = all(got)
    report.rows.insert(0, {'g': format_matrix(PROP19_G), 'm1': format_matrix(PROP19_M1),
                           'm2': format_matrix(PROP19_M2)})
    log.info('prop19: verdict %s', report.verdict)
    return report


REPRODUCERS = {
    'lemma7': reproduce_lemma7,
    'prop12': reproduce_prop12,
    'prop19': reproduce_prop19,
}
