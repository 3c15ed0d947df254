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
Stabilizer families: subgroups of a matrix group given by explicit matrix shapes, each with a
hand-written membership predicate and a sampler of genuine members.
"""

import math

import numpy as np

from bolsect._groups.matrixrep import adjoint, mat_exp
from bolsect.config import DEFAULT_TOLERANCES


def _scale(g):
    return max(1.0, float(np.max(np.abs(g))))


class StabilizerFamily(object):
    """
    Base class of the stabilizer families.

    :param tag: short identifier used in reports.
    :param dimension: dimension of the subgroup.
    :param parameters: named real parameters of the family.
    """

    def __init__(self, tag, dimension, parameters=None):
        self.tag = tag
        self.dimension = dimension
        self.parameters = dict(parameters or {})

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        raise NotImplementedError

    def sample(self, rng):
        raise NotImplementedError

    def __repr__(self):
        if self.parameters:
            shown = ', '.join('{}={:g}'.format(k, v) for k, v in sorted(self.parameters.items()))
            return '{}({})'.format(self.tag, shown)
        return self.tag


class MaximalCompact(StabilizerFamily):
    """
    The unitary elements of a group whose Cartan involution is ``x -> (x*)⁻¹``: ``SO(n)`` inside
    ``SL(n, R)``, ``SU(2)`` inside ``SL(2, C)`` and ``S(U(2) × U(1))`` inside the matrix model of
    ``SU(2, 1)``. Samples are products of exponentials of the compact subalgebra.

    :param rep: representation of the ambient algebra.
    :param k: the compact subalgebra, a :class:`Subspace` of ``rep.algebra``.
    """

    def __init__(self, rep, k, tag=None):
        super(MaximalCompact, self).__init__(tag or 'K({})'.format(rep.group_tag), k.rank)
        self._generators = [rep(x) for x in k.basis]
        self._n = rep.matrix_dim

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g = np.asarray(g)
        return float(np.max(np.abs(g @ adjoint(g) - np.eye(self._n)))) <= tolerance * _scale(g) ** 2

    def sample(self, rng):
        result = np.eye(self._n)
        for _ in range(2):
            weights = rng.uniform(-math.pi, math.pi, len(self._generators))
            result = result @ mat_exp(sum(w * x for w, x in zip(weights, self._generators)))
        return result


class Borel(StabilizerFamily):
    """
    ``{(l, b; 0, 1/l)}`` inside ``PSL2(R)``, either with ``0 < l`` or with ``l = 1`` for all ``b``.
    Members are compared up to sign.
    """

    def __init__(self, unipotent=False):
        super(Borel, self).__init__('unipotent' if unipotent else 'borel', 1 if unipotent else 2)
        self.unipotent = unipotent

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g = np.asarray(g)
        if g.shape != (2, 2) or np.any(np.abs(np.imag(g)) > tolerance):
            return False
        g = np.real(g)
        if g[0, 0] < 0:
            g = -g
        scale = _scale(g)
        if abs(g[1, 0]) > tolerance * scale or g[0, 0] <= tolerance:
            return False
        if abs(g[0, 0] * g[1, 1] - 1) > tolerance * scale ** 2:
            return False
        return not self.unipotent or bool(abs(g[0, 0] - 1) <= tolerance * scale)

    def sample(self, rng):
        l = 1.0 if self.unipotent else math.exp(rng.uniform(-2, 2))
        return np.array([[l, rng.uniform(-2, 2)], [0.0, 1 / l]])


def rotation(angle):
    return np.array([[math.cos(angle), math.sin(angle)], [-math.sin(angle), math.cos(angle)]])


class Spiral(StabilizerFamily):
    """
    The subgroup of ``SL3(R)`` generated by ``a(e5+e8) + e6 − e7``, ``e1`` and ``e2`` with ``d = exp a``::

        ( d^-2t   x          y         )
        ( 0       d^t cos t  d^t sin t )
        ( 0      -d^t sin t  d^t cos t )

    Membership reads ``t`` off the determinant of the lower right block, then checks that the
    rotation angle agrees with ``t`` modulo ``2π`` and that the top left entry is ``d^-2t``.
    """

    def __init__(self, d):
        if not d > 1:
            raise ValueError('the spiral family needs d > 1, got {}'.format(d))
        super(Spiral, self).__init__('spiral', 3, {'d': d})
        self.d = d

    def solve_t(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        """
        :Returns: the parameter ``t`` of a member, or ``None`` when ``g`` is not a member.
        """
        g = np.asarray(g)
        if g.shape != (3, 3) or np.any(np.abs(np.imag(g)) > tolerance):
            return None
        g = np.real(g)
        scale = _scale(g)
        if max(abs(g[1, 0]), abs(g[2, 0])) > tolerance * scale:
            return None
        block = g[1:, 1:]
        det = np.linalg.det(block)
        if det <= 0:
            return None
        t = math.log(det) / (2 * math.log(self.d))
        expected = self.d ** t * rotation(t)
        if float(np.max(np.abs(block - expected))) > tolerance * scale:
            return None
        if abs(g[0, 0] - self.d ** (-2 * t)) > tolerance * scale:
            return None
        return t

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        return self.solve_t(g, tolerance) is not None

    def member(self, t, x=0.0, y=0.0):
        g = np.zeros((3, 3))
        g[0] = [self.d ** (-2 * t), x, y]
        g[1:, 1:] = self.d ** t * rotation(t)
        return g

    def sample(self, rng):
        return self.member(rng.uniform(-3, 3), rng.uniform(-2, 2), rng.uniform(-2, 2))


class Unitriangular(StabilizerFamily):
    """
    Upper unitriangular ``n x n`` real matrices.
    """

    def __init__(self, n=3):
        super(Unitriangular, self).__init__('unitriangular', n * (n - 1) // 2)
        self._n = n

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g = np.asarray(g)
        if g.shape != (self._n, self._n) or np.any(np.abs(np.imag(g)) > tolerance):
            return False
        scale = _scale(g)
        lower = np.tril(np.real(g), -1)
        return (float(np.max(np.abs(lower), initial=0.0)) <= tolerance * scale
                and float(np.max(np.abs(np.diag(g) - 1))) <= tolerance * scale)

    def sample(self, rng):
        g = np.eye(self._n)
        g[np.triu_indices(self._n, 1)] = rng.uniform(-2, 2, self.dimension)
        return g


class TriangularTimesRotation(StabilizerFamily):
    """
    Families inside ``SL2(C) × SL2(R)`` whose first component is ``(exp v, z; 0, exp −v)`` with ``v``
    ranging over a real plane ``{x·α + y·β}`` of ``C`` and whose second component is a rotation.
    Membership is tested on the two projections separately.

    This is a predicate on the first component, not the subgroup itself. The subgroups ``H5``, ``H6``
    and ``H8`` are 4-dimensional: their rotation angle is tied to the ``y`` coordinate of ``v``. The
    predicate accepts a strictly larger 5-dimensional set containing each of them, and the declared
    dimension ``5`` is that of the set. Elements with an untied rotation pass as well.

    ``kind`` selects the plane: ``5`` is ``α = ri − 1, β = 1``, ``6`` is ``α = ri − 1, β = i`` and
    ``8`` is ``α = i, β = 1``.
    """

    PLANES = {
        5: lambda r: (complex(-1, r), 1),
        6: lambda r: (complex(-1, r), 1j),
        8: lambda r: (1j, 1),
    }

    def __init__(self, kind, r=0.0):
        if kind not in self.PLANES:
            raise ValueError('unknown family H{}, expected one of {}'.format(kind, sorted(self.PLANES)))
        super(TriangularTimesRotation, self).__init__('H{}'.format(kind), 5, {'r': r})
        self.kind = kind
        self.r = r
        self._alpha, self._beta = self.PLANES[kind](r)

    def _plane_contains(self, v, tolerance):
        alpha, beta = complex(self._alpha), complex(self._beta)
        det = alpha.real * beta.imag - alpha.imag * beta.real
        if abs(det) > 1e-12:
            return True
        # degenerate plane: both directions real, so exp v must be real
        for shift in (0, 1):
            if abs(v.imag - math.pi * shift) <= tolerance or abs(v.imag + math.pi * shift) <= tolerance:
                return True
        return False

    def solve_v(self, first, tolerance=DEFAULT_TOLERANCES.membership):
        """
        :Returns: ``(v, z)`` for a first component of the family's shape, else ``None``.
        """
        first = np.asarray(first, dtype=complex)
        scale = _scale(first)
        if abs(first[1, 0]) > tolerance * scale or abs(first[0, 0]) <= tolerance:
            return None
        if abs(first[0, 0] * first[1, 1] - 1) > tolerance * scale ** 2:
            return None
        v = complex(np.log(first[0, 0]))
        if not self._plane_contains(v, tolerance):
            return None
        return v, complex(first[0, 1])

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g = np.asarray(g)
        if g.shape != (4, 4):
            return False
        if self.solve_v(g[:2, :2], tolerance) is None:
            return False
        second = g[2:, 2:]
        if np.any(np.abs(np.imag(second)) > tolerance):
            return False
        second = np.real(second)
        orthogonal = float(np.max(np.abs(second @ second.T - np.eye(2)))) <= tolerance
        return bool(orthogonal and np.linalg.det(second) > 0)

    def member(self, x, y, z, angle):
        v = x * self._alpha + y * self._beta
        g = np.zeros((4, 4), dtype=complex)
        g[:2, :2] = [[np.exp(v), z], [0, np.exp(-v)]]
        g[2:, 2:] = rotation(angle)
        return g

    def sample(self, rng):
        x, y = rng.uniform(-2, 2, 2)
        z = complex(*rng.uniform(-2, 2, 2))
        return self.member(x, y, z, y)
