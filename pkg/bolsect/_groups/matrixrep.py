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
Matrix realizations of catalog algebras: exponentials, positive definite logarithms and square
roots, the adjoint action, polar sections and coset comparison.

Group elements are dense numpy matrices. Products of groups are block diagonal and the centers
that matter here are ``±I``, so projective quotients are handled by normalizing the sign of each
block.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import scipy.linalg
import sympy

from bolsect._algebra.liealg import Element, rational
from bolsect.config import DEFAULT_TOLERANCES
from bolsect.errors import AlgebraMismatchError, LogDomainError, PullbackError

log = logging.getLogger(__name__)


def as_array(matrix):
    """
    Converts a sympy or nested-list matrix to a numpy array, real when every entry is real.
    """
    array = np.array(np.asarray(matrix.tolist() if hasattr(matrix, 'tolist') else matrix), dtype=complex)
    if not np.any(array.imag):
        return array.real.copy()
    return array


def is_gaussian_rational(matrix):
    """
    Whether every entry of a sympy matrix has rational real and imaginary parts.
    """
    for entry in matrix:
        real, imag = sympy.nsimplify(entry).as_real_imag()
        if not (real.is_Rational and imag.is_Rational):
            return False
    return True


def adjoint(matrix):
    return matrix.conj().T


class MatrixRep(object):
    """
    A faithful matrix representation of a :class:`LieAlgebra`, given by one matrix per basis element.

    :param algebra: the represented algebra.
    :param matrices: exact sympy matrices in basis order.
    :param group_tag: identifier of the matrix group, e.g. ``sl3r``; products join tags with ``+``.
    :param blocks: sizes of the diagonal blocks, one per factor group.
    :param projective: per-block flags, true when the block is a class modulo ``±I``.
    """

    def __init__(self, algebra, matrices, group_tag, blocks=None, projective=None):
        matrices = [sympy.Matrix(m) for m in matrices]
        if len(matrices) != algebra.dim:
            raise ValueError('{} needs {} matrices, got {}'.format(group_tag, algebra.dim, len(matrices)))
        n = matrices[0].rows
        if any(m.shape != (n, n) for m in matrices):
            raise ValueError('{} matrices must all be {}x{}'.format(group_tag, n, n))
        self._algebra = algebra
        self._exact = matrices
        self._n = n
        self._tag = group_tag
        self._blocks = tuple(blocks) if blocks else (n,)
        if sum(self._blocks) != n:
            raise ValueError('block sizes {} do not add up to {}'.format(self._blocks, n))
        flags = projective if projective is not None else [True] * len(self._blocks)
        self._projective = tuple(bool(f) for f in flags)
        self._numeric = np.array([np.asarray(m.tolist(), dtype=complex) for m in matrices])
        self._real = not np.any(self._numeric.imag)
        flat = self._numeric.reshape(algebra.dim, n * n).T
        self._system = np.vstack([flat.real, flat.imag])
        self._pinv = scipy.linalg.pinv(self._system)

    @classmethod
    def direct_sum(cls, algebra, reps):
        """
        The block diagonal representation of a direct sum from representations of its summands.
        """
        if tuple(r.algebra for r in reps) != tuple(algebra.summands):
            raise AlgebraMismatchError(cls.direct_sum, algebra.name, '+'.join(r.algebra.name for r in reps))
        matrices = []
        for k, rep in enumerate(reps):
            for m in rep._exact:
                blocks = [sympy.zeros(r.matrix_dim, r.matrix_dim) for r in reps]
                blocks[k] = m
                matrices.append(sympy.diag(*blocks))
        blocks = [size for r in reps for size in r.blocks]
        projective = [flag for r in reps for flag in r.projective]
        return cls(algebra, matrices, '+'.join(r.group_tag for r in reps), blocks, projective)

    @property
    def algebra(self):
        return self._algebra

    @property
    def matrix_dim(self):
        return self._n

    @property
    def group_tag(self):
        return self._tag

    @property
    def blocks(self):
        return self._blocks

    @property
    def projective(self):
        return self._projective

    @property
    def is_real(self):
        return self._real

    def exact(self, x):
        self._check(x)
        result = sympy.zeros(self._n, self._n)
        for c, m in zip(x.coeffs, self._exact):
            if c:
                result += c * m
        return result

    def __call__(self, x):
        self._check(x)
        return self.from_coeffs(np.array([float(c) for c in x.coeffs]))

    def from_coeffs(self, coeffs):
        matrix = np.tensordot(np.asarray(coeffs, dtype=float), self._numeric, axes=1)
        return matrix.real.copy() if self._real else matrix

    def pullback(self, matrix):
        """
        Least squares coordinates of a matrix in the image of the representation.

        :Returns: :class:`tuple` ``(coeffs, residual)`` with the residual as a max-abs entry deviation.
        """
        matrix = np.asarray(matrix, dtype=complex).reshape(self._n * self._n)
        target = np.concatenate([matrix.real, matrix.imag])
        coeffs = self._pinv @ target
        residual = float(np.max(np.abs(self._system @ coeffs - target))) if target.size else 0.0
        return coeffs, residual

    def element(self, matrix, tolerances=DEFAULT_TOLERANCES):
        """
        Pulls a matrix back to an exact :class:`Element` by snapping each coordinate to the nearest
        rational with bounded denominator.

        :Raises: :class:`errors.PullbackError` if the matrix is not in the image of the representation.
        """
        coeffs, residual = self.pullback(matrix)
        if residual > tolerances.pullback * max(1.0, float(np.max(np.abs(matrix)))):
            raise PullbackError(self._tag, residual, tolerances.pullback)
        return Element(self._algebra, [snap(c, tolerances.snap_denominator) for c in coeffs])

    def exp(self, x):
        return mat_exp(self(x))

    def identity(self):
        return np.eye(self._n)

    def block_slices(self):
        start = 0
        for size in self._blocks:
            yield slice(start, start + size)
            start += size

    def _check(self, x):
        if x.algebra != self._algebra:
            raise AlgebraMismatchError(self.exact, x.algebra.name, self._algebra.name)

    def __repr__(self):
        return 'MatrixRep({}, {}x{})'.format(self._tag, self._n, self._n)


def snap(value, denominator=DEFAULT_TOLERANCES.snap_denominator):
    return rational(Fraction(float(value)).limit_denominator(denominator))


@dataclass
class RepReport(object):
    group_tag: str
    rank: int
    dim: int
    residual: float
    exact: bool
    failures: list = field(default_factory=list)

    @property
    def injective(self):
        return self.rank == self.dim

    @property
    def ok(self):
        return self.injective and not self.failures

    def to_dict(self):
        return {'group': self.group_tag, 'rank': self.rank, 'dim': self.dim, 'residual': self.residual,
                'exact': self.exact, 'injective': self.injective,
                'failures': ['[{}, {}]'.format(*pair) for pair in self.failures], 'verdict': self.ok}


def rep_verify(rep, tolerance=1e-12):
    """
    Checks that the representation is an injective homomorphism: for every basis pair,
    ``rep([x, y]) == rep(x) rep(y) - rep(y) rep(x)``. Rational and Gaussian rational tables are
    compared exactly, so the reported residual is 0 on success.

    :Returns: :class:`RepReport`
    """
    algebra = rep.algebra
    basis = algebra.basis()
    exact = all(is_gaussian_rational(m) for m in rep._exact)
    failures = []
    residual = 0.0
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            x, y = rep.exact(basis[i]), rep.exact(basis[j])
            difference = rep.exact(basis[i].bracket(basis[j])) - (x * y - y * x)
            difference = difference.applyfunc(sympy.expand)
            size = float(max(abs(complex(entry)) for entry in difference)) if difference else 0.0
            residual = max(residual, size)
            if (exact and any(entry != 0 for entry in difference)) or size > tolerance:
                failures.append((algebra.labels[i], algebra.labels[j]))
    real = [[sympy.re(entry) for entry in m] + [sympy.im(entry) for entry in m] for m in rep._exact]
    rank = sympy.Matrix(real).rank()
    report = RepReport(rep.group_tag, rank, algebra.dim, residual, exact, failures)
    log.info('rep %s: rank %d/%d, residual %g', rep.group_tag, rank, algebra.dim, residual)
    return report


def mat_exp(matrix):
    """
    Matrix exponential by scaling and squaring with a Padé approximant.
    """
    return scipy.linalg.expm(matrix)


def _self_adjoint_eig(matrix, tolerance):
    matrix = np.asarray(matrix)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    if np.max(np.abs(matrix - adjoint(matrix))) > 1e-9 * scale:
        raise LogDomainError(float('nan'))
    values, vectors = scipy.linalg.eigh((matrix + adjoint(matrix)) / 2)
    if values[0] <= tolerance:
        raise LogDomainError(float(values[0]))
    return values, vectors


def mat_log_pd(matrix, tolerance=1e-12):
    """
    Logarithm of a positive definite self-adjoint matrix via its eigendecomposition.

    :Raises: :class:`errors.LogDomainError` if the matrix is not self-adjoint positive definite.
    """
    values, vectors = _self_adjoint_eig(matrix, tolerance)
    return (vectors * np.log(values)) @ adjoint(vectors)


def mat_sqrt_pd(matrix, tolerance=1e-12):
    values, vectors = _self_adjoint_eig(matrix, tolerance)
    return (vectors * np.sqrt(values)) @ adjoint(vectors)


def mat_inv_sqrt_pd(matrix, tolerance=1e-12):
    values, vectors = _self_adjoint_eig(matrix, tolerance)
    return (vectors / np.sqrt(values)) @ adjoint(vectors)


def sign_normalize(matrix, blocks=None, projective=None):
    """
    Chooses the representative of ``±M`` in each projective block whose first nonzero entry in the
    first row has positive real part, or positive imaginary part when the real part vanishes.

    :Example:
    >>> m = np.array([[-1.0, 2.0], [0.0, -1.0]])
    >>> assert np.allclose(sign_normalize(-m), sign_normalize(m))
    """
    result = np.array(matrix, copy=True)
    blocks = blocks or (result.shape[0],)
    projective = projective or (True,) * len(blocks)
    start = 0
    for size, flag in zip(blocks, projective):
        part = result[start:start + size, start:start + size]
        if flag:
            row = part[0]
            nonzero = np.flatnonzero(np.abs(row) > 1e-12)
            if nonzero.size:
                entry = complex(row[nonzero[0]])
                if entry.real < -1e-12 or (abs(entry.real) <= 1e-12 and entry.imag < 0):
                    result[start:start + size, start:start + size] = -part
        start += size
    return result


class GroupElement(object):
    """
    An element of the matrix group of a :class:`MatrixRep`, optionally carrying its exact entries.

    :Raises: :class:`ValueError` if a diagonal block does not have determinant 1 within 1e-10.
    """

    def __init__(self, rep, matrix, exact=None):
        self._rep = rep
        self._exact = sympy.Matrix(exact) if exact is not None else None
        matrix = as_array(self._exact) if self._exact is not None else np.asarray(matrix)
        if matrix.shape != (rep.matrix_dim, rep.matrix_dim):
            raise ValueError('{} elements are {}x{} matrices'.format(rep.group_tag, rep.matrix_dim, rep.matrix_dim))
        for piece in rep.block_slices():
            det = np.linalg.det(matrix[piece, piece])
            if abs(det - 1) > 1e-10 * max(1.0, float(np.max(np.abs(matrix[piece, piece]))) ** 2):
                raise ValueError('{} element block has determinant {}, expected 1'.format(rep.group_tag, det))
        self._matrix = matrix

    @classmethod
    def from_exact(cls, rep, rows):
        return cls(rep, None, exact=sympy.Matrix(rows))

    @property
    def rep(self):
        return self._rep

    @property
    def matrix(self):
        return self._matrix

    @property
    def exact(self):
        return self._exact

    @property
    def is_exact(self):
        return self._exact is not None and is_gaussian_rational(self._exact)

    def inverse(self):
        if self._exact is not None:
            return GroupElement(self._rep, None, exact=self._exact.inv())
        return GroupElement(self._rep, np.linalg.inv(self._matrix))

    def normalized(self):
        return sign_normalize(self._matrix, self._rep.blocks, self._rep.projective)

    def __matmul__(self, other):
        if self._exact is not None and other._exact is not None:
            return GroupElement(self._rep, None, exact=self._exact * other._exact)
        return GroupElement(self._rep, self._matrix @ other._matrix)

    def __repr__(self):
        return 'GroupElement({}, {})'.format(self._rep.group_tag, format_matrix(self._matrix))


def ad_conjugate(g, x, side='left', tolerances=DEFAULT_TOLERANCES):
    """
    The adjoint action pulled back to the algebra: ``g x g⁻¹`` for ``side='left'`` and ``g⁻¹ x g``
    for ``side='right'``.

    :Returns: :class:`Element`, snapped to rationals.

    :Raises: :class:`errors.PullbackError` if the conjugate leaves the image of the representation.
    """
    return g.rep.element(conjugate_matrix(g, x, side), tolerances)


def conjugate_matrix(g, x, side='left'):
    matrix = g.rep(x)
    inverse = np.linalg.inv(g.matrix)
    if side == 'left':
        return g.matrix @ matrix @ inverse
    if side == 'right':
        return inverse @ matrix @ g.matrix
    raise ValueError('side must be left or right, got {!r}'.format(side))


def hermitian_form(rep):
    """
    Recovers the Hermitian form ``J`` preserved by a representation, i.e. the solutions of
    ``X* J + J X = 0`` for every basis matrix ``X`` with ``J = J*``. The form is scaled so that its
    first nonzero diagonal entry is 1.

    :Returns: :class:`numpy.ndarray`, or ``None`` when the solution space is not one dimensional.
    """
    n = rep.matrix_dim
    units = []
    for k in range(n * n):
        for scale in (1.0, 1j):
            unit = np.zeros(n * n, dtype=complex)
            unit[k] = scale
            units.append(unit.reshape(n, n))
    rows = []
    for j in units:
        constraints = [adjoint(x) @ j + j @ x for x in rep._numeric]
        constraints.append(j - adjoint(j))
        stacked = np.concatenate([c.reshape(-1) for c in constraints])
        rows.append(np.concatenate([stacked.real, stacked.imag]))
    kernel = scipy.linalg.null_space(np.array(rows).T)
    if kernel.shape[1] != 1:
        return None
    form = sum(w * u for w, u in zip(kernel[:, 0], units))
    diagonal = np.diag(form)
    nonzero = np.flatnonzero(np.abs(diagonal) > 1e-9)
    if nonzero.size:
        first = diagonal[nonzero[0]]
    else:
        # i times a symplectic form, as for the real model of sl2
        flat = form.reshape(-1)
        first = flat[np.flatnonzero(np.abs(flat) > 1e-9)[0]] / 1j
    form = form / first
    return form.real.copy() if not np.any(np.abs(form.imag) > 1e-12) else form


class GroupInvolution(object):
    """
    An involution of a matrix group, used to characterize the section image ``exp m`` as the set
    of ``p`` with ``τ(p) = p⁻¹``.
    """

    def __init__(self, name, function):
        self.name = name
        self._function = function

    def __call__(self, matrix):
        return self._function(matrix)

    def __repr__(self):
        return 'GroupInvolution({})'.format(self.name)


CARTAN = GroupInvolution('x -> (x*)^-1', lambda x: np.linalg.inv(adjoint(x)))


def polar_section(x, involution=CARTAN):
    """
    Factors ``x = p k`` with ``p = exp(½ log(x τ(x)⁻¹))`` and ``τ(k) = k``. For the Cartan
    involution ``τ(x) = (x*)⁻¹`` this is the polar decomposition, computed from an SVD, with ``p``
    the positive definite square root of ``x x*``.

    :Returns: :class:`tuple` ``(p, k)``

    :Raises: :class:`errors.LogDomainError` if ``x τ(x)⁻¹`` is not positive definite.
    """
    x = np.asarray(x)
    if involution is CARTAN:
        k, p = scipy.linalg.polar(x, side='left')
        return (p + adjoint(p)) / 2, k
    p = mat_sqrt_pd(x @ np.linalg.inv(involution(x)))
    k = np.linalg.solve(p, x)
    return p, k


def coset_equal(x, y, family, tolerance=DEFAULT_TOLERANCES.membership):
    """
    Whether ``x`` and ``y`` lie in the same left coset of the stabilizer family, i.e. ``y⁻¹ x ∈ H``.
    """
    return family.contains(np.linalg.solve(np.asarray(y), np.asarray(x)), tolerance)


def format_matrix(matrix, digits=12):
    """
    Fixed decimal rendering with ``digits`` significant digits, used by every report.
    """
    def entry(value):
        value = complex(value)
        if abs(value.imag) < 1e-300:
            return '{:.{}g}'.format(value.real, digits)
        return '{:.{}g}{:+.{}g}i'.format(value.real, digits, value.imag, digits)
    return [[entry(v) for v in row] for row in np.asarray(matrix)]
