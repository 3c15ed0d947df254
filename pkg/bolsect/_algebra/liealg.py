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
Exact structure-constant arithmetic for real Lie algebras.

Complex algebras are stored as real algebras over an explicit real basis, for
example ``e1, e2, e3, i e1, i e2, i e3`` for sl2(C). All coefficients are sympy
rationals, so nothing in this module depends on a tolerance.
"""

import enum
import itertools
import logging
from fractions import Fraction

import sympy

from bolsect._algebra.util import same_algebra
from bolsect.errors import AlgebraMismatchError, JacobiError

log = logging.getLogger(__name__)

ZERO = sympy.Integer(0)


def rational(value):
    """
    Coerces an int, a ``"p/q"`` string, a :class:`fractions.Fraction` or a rational sympy number
    to a sympy :class:`~sympy.Rational`.

    :Raises: :class:`ValueError` if the value is not rational.

    :Example:
    >>> assert rational('3/6') == sympy.Rational(1, 2)
    """
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if not isinstance(value, sympy.Basic):
        value = sympy.Rational(value)
    if not value.is_Rational:
        raise ValueError('expected an exact rational, got {}'.format(value))
    return value


class Sl2Class(enum.Enum):
    ZERO = 'zero'
    ELLIPTIC = 'elliptic'
    PARABOLIC = 'parabolic'
    HYPERBOLIC = 'hyperbolic'


class LieAlgebra(object):
    """
    A finite dimensional real Lie algebra given by basis labels and structure constants.

    Only brackets ``[e_i, e_j]`` with ``i < j`` are supplied; antisymmetry fills in the rest and
    ``[e_i, e_i]`` is zero by construction.

    :Example:
    >>> sl2 = LieAlgebra('sl2r', ['e1', 'e2', 'e3'], {(1, 2): {3: 2}, (1, 3): {2: 2}, (2, 3): {1: -2}})
    >>> assert sl2['e1'].bracket(sl2['e2']) == 2 * sl2['e3']
    """

    def __init__(self, name, labels, structure, summands=None):
        """
        :param name: identifier of the algebra, e.g. ``sl3r``.
        :param labels: basis labels in coefficient order.
        :param structure: mapping ``(i, j) -> {k: c}`` with 1-based indices, ``i < j``, meaning that
                          ``[e_i, e_j]`` has coefficient ``c`` on ``e_k``.
        :param summands: the simple pieces when the algebra is a direct sum.

        :Raises: :class:`ValueError` on an index outside ``1..dim`` or a pair with ``i >= j``.
        """
        self._name = name
        self._labels = tuple(labels)
        self._summands = tuple(summands) if summands else None
        dim = len(self._labels)
        if dim == 0:
            raise ValueError('a Lie algebra needs at least one basis element')
        if len(set(self._labels)) != dim:
            raise ValueError('duplicate basis labels in {}'.format(name))
        zero = tuple([ZERO] * dim)
        self._table = [[zero] * dim for _ in range(dim)]
        canonical = {}
        for (i, j), coeffs in structure.items():
            if not 1 <= i < j <= dim:
                raise ValueError('structure constant index ({}, {}) of {} must satisfy 1 <= i < j <= {}'
                                 .format(i, j, name, dim))
            vector = [ZERO] * dim
            for k, c in coeffs.items():
                if not 1 <= k <= dim:
                    raise ValueError('structure constant target {} of {} out of range'.format(k, name))
                vector[k - 1] += rational(c)
            if any(vector):
                canonical[(i, j)] = tuple(vector)
                self._table[i - 1][j - 1] = tuple(vector)
                self._table[j - 1][i - 1] = tuple(-c for c in vector)
        self._structure = canonical

    @property
    def name(self):
        return self._name

    @property
    def dim(self):
        return len(self._labels)

    @property
    def labels(self):
        return self._labels

    @property
    def structure(self):
        """
        The nonzero brackets as ``{(i, j): coefficient tuple}`` with 1-based ``i < j``.
        """
        return dict(self._structure)

    @property
    def summands(self):
        """
        The simple pieces of a direct sum, or ``(self,)`` for an algebra built directly.
        """
        return self._summands if self._summands else (self,)

    def offset(self, k):
        """
        Coefficient offset of the ``k``-th (0-based) summand.
        """
        return sum(s.dim for s in self.summands[:k])

    def element(self, coeffs):
        return Element(self, coeffs)

    def zero(self):
        return Element(self, [ZERO] * self.dim)

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def basis_element(self, index):
        coeffs = [ZERO] * self.dim
        coeffs[index] = sympy.Integer(1)
        return Element(self, coeffs)

    def __getitem__(self, label):
        try:
            return self.basis_element(self._labels.index(label))
        except ValueError:
            raise KeyError('{} has no basis element {}'.format(self._name, label))

    def bracket_of_basis(self, i, j):
        """
        Coefficients of ``[e_i, e_j]`` for 0-based indices.
        """
        return self._table[i][j]

    def embed(self, k, x):
        """
        Embeds an element of the ``k``-th summand into this direct sum.
        """
        summand = self.summands[k]
        if x.algebra != summand:
            raise AlgebraMismatchError(self.embed, x.algebra.name, summand.name)
        coeffs = [ZERO] * self.dim
        start = self.offset(k)
        coeffs[start:start + summand.dim] = x.coeffs
        return Element(self, coeffs)

    def verify_jacobi(self):
        """
        Checks the Jacobi identity exactly on every basis triple.

        :Returns: :class:`list` of label triples on which the identity fails; empty iff the table is valid.
        """
        violations = []
        basis = self.basis()
        for i, j, k in itertools.combinations(range(self.dim), 3):
            x, y, z = basis[i], basis[j], basis[k]
            total = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
            if not total.is_zero:
                violations.append((self._labels[i], self._labels[j], self._labels[k]))
        if violations:
            log.debug('%s violates Jacobi on %d triples', self._name, len(violations))
        return violations

    def require_jacobi(self):
        violations = self.verify_jacobi()
        if violations:
            raise JacobiError(self._name, violations)
        return self

    def killing_matrix(self):
        """
        Gram matrix of the trace form ``tr(ad x ad y)`` on the basis.
        """
        ads = [self.ad(e) for e in self.basis()]
        return sympy.Matrix(self.dim, self.dim, lambda i, j: (ads[i] * ads[j]).trace())

    def ad(self, x):
        """
        Matrix of ``ad x`` acting on coefficient columns.
        """
        if x.algebra != self:
            raise AlgebraMismatchError(self.ad, x.algebra.name, self._name)
        columns = [x.bracket(e).coeffs for e in self.basis()]
        return sympy.Matrix(columns).T

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self is other or
                (self._name == other._name and self._labels == other._labels and
                 self._structure == other._structure))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._name, self._labels))

    def __repr__(self):
        return 'LieAlgebra({}, dim={})'.format(self._name, self.dim)


class Element(object):
    """
    An element ``X = sum(c_i e_i)`` of a :class:`LieAlgebra` with exact rational coefficients.
    """

    __slots__ = ('_algebra', '_coeffs')

    def __init__(self, algebra, coeffs):
        coeffs = tuple(rational(c) for c in coeffs)
        if len(coeffs) != algebra.dim:
            raise ValueError('{} needs {} coefficients, got {}'.format(algebra.name, algebra.dim, len(coeffs)))
        self._algebra = algebra
        self._coeffs = coeffs

    @property
    def algebra(self):
        return self._algebra

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def is_zero(self):
        return not any(self._coeffs)

    def vector(self):
        return sympy.Matrix(self._coeffs)

    @same_algebra
    def bracket(self, other):
        """
        The Lie bracket ``[self, other]``, bilinear and antisymmetric per the structure constants.

        :Raises: :class:`errors.AlgebraMismatchError` if the operands live in different algebras.

        :Example:
        >>> assert sl2['e1'].bracket(sl2['e2']) == 2 * sl2['e3']  # doctest: +SKIP
        """
        algebra = self._algebra
        result = [ZERO] * algebra.dim
        left = [(i, c) for i, c in enumerate(self._coeffs) if c]
        right = [(j, c) for j, c in enumerate(other._coeffs) if c]
        for i, a in left:
            for j, b in right:
                if i == j:
                    continue
                row = algebra.bracket_of_basis(i, j)
                scale = a * b
                for k, c in enumerate(row):
                    if c:
                        result[k] += scale * c
        return Element(algebra, result)

    @same_algebra
    def killing(self, other):
        """
        The trace form ``tr(ad self . ad other)``.
        """
        return (self._algebra.ad(self) * self._algebra.ad(other)).trace()

    def component(self, k):
        """
        The part of this element lying in the ``k``-th summand of a direct sum.
        """
        summand = self._algebra.summands[k]
        start = self._algebra.offset(k)
        return Element(summand, self._coeffs[start:start + summand.dim])

    @same_algebra
    def __add__(self, other):
        return Element(self._algebra, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    @same_algebra
    def __sub__(self, other):
        return Element(self._algebra, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return Element(self._algebra, [-a for a in self._coeffs])

    def __mul__(self, scalar):
        scalar = rational(scalar)
        return Element(self._algebra, [scalar * a for a in self._coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._algebra == other._algebra and self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._algebra.name, self._coeffs))

    def __repr__(self):
        terms = []
        for label, c in zip(self._algebra.labels, self._coeffs):
            if not c:
                continue
            if c == 1:
                terms.append(label)
            elif c == -1:
                terms.append('-' + label)
            else:
                terms.append('{}*{}'.format(c, label))
        return ' + '.join(terms).replace('+ -', '- ') if terms else '0'


class Subspace(object):
    """
    A subspace of a :class:`LieAlgebra`, stored in reduced row echelon form so that two
    subspaces are equal exactly when their stored rows are equal.
    """

    def __init__(self, algebra, vectors=()):
        self._algebra = algebra
        rows = [[rational(c) for c in v] for v in vectors]
        rows = [r for r in rows if any(r)]
        for r in rows:
            if len(r) != algebra.dim:
                raise ValueError('vector of length {} in a subspace of {}'.format(len(r), algebra.name))
        if rows:
            reduced, pivots = sympy.Matrix(rows).rref()
            self._rows = tuple(tuple(reduced.row(i)) for i in range(len(pivots)))
            self._pivots = tuple(pivots)
        else:
            self._rows = ()
            self._pivots = ()

    @classmethod
    def span(cls, elements, algebra=None):
        """
        The span of a list of elements. ``algebra`` is required only when the list is empty.

        :Raises: :class:`errors.AlgebraMismatchError` if the elements come from different algebras.
        """
        elements = list(elements)
        if algebra is None:
            if not elements:
                raise ValueError('the span of no elements needs an explicit algebra')
            algebra = elements[0].algebra
        for x in elements:
            if x.algebra != algebra:
                raise AlgebraMismatchError(cls.span, x.algebra.name, algebra.name)
        return cls(algebra, [x.coeffs for x in elements])

    @classmethod
    def whole(cls, algebra):
        return cls(algebra, [e.coeffs for e in algebra.basis()])

    @classmethod
    def zero(cls, algebra):
        return cls(algebra)

    @property
    def algebra(self):
        return self._algebra

    @property
    def rank(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    @property
    def basis(self):
        return [Element(self._algebra, r) for r in self._rows]

    @property
    def is_zero(self):
        return not self._rows

    def matrix(self):
        return sympy.Matrix(self._rows) if self._rows else sympy.zeros(0, self._algebra.dim)

    def reduce(self, x):
        """
        The remainder of ``x`` after eliminating the pivot columns; zero exactly when ``x`` lies in
        the subspace.
        """
        vector = list(x.coeffs)
        for row, pivot in zip(self._rows, self._pivots):
            c = vector[pivot]
            if c:
                vector = [v - c * r for v, r in zip(vector, row)]
        return Element(self._algebra, vector)

    def __contains__(self, x):
        if x.algebra != self._algebra:
            return False
        return self.reduce(x).is_zero

    @same_algebra
    def __add__(self, other):
        return Subspace(self._algebra, self._rows + other._rows)

    @same_algebra
    def __le__(self, other):
        return all(x in other for x in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._algebra == other._algebra and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._algebra.name, self._rows))

    @same_algebra
    def intersect(self, other):
        """
        Exact intersection, read off the nullspace of the stacked bases.

        :Example:
        >>> h = Subspace.span([sl2c['e3'], sl2c['i e3']])  # doctest: +SKIP
        >>> assert h.intersect(m).is_zero  # doctest: +SKIP
        """
        if self.is_zero or other.is_zero:
            return Subspace.zero(self._algebra)
        a, b = self.matrix(), other.matrix()
        kernel = sympy.Matrix.vstack(a, -b).T.nullspace()
        vectors = [(v[:self.rank, :].T * a) for v in kernel]
        return Subspace(self._algebra, [tuple(v) for v in vectors])

    def escaping_bracket(self, other=None):
        """
        The first basis pair ``(x, y)`` of ``self`` x ``other`` whose bracket leaves ``self``, or ``None``.
        """
        other = self if other is None else other
        for x in self.basis:
            for y in other.basis:
                if x.bracket(y) not in self:
                    return x, y
        return None

    def is_subalgebra(self):
        basis = self.basis
        for i, j in itertools.combinations(range(len(basis)), 2):
            if basis[i].bracket(basis[j]) not in self:
                return False
        return True

    def is_ideal(self, ambient=None):
        """
        Whether ``[ambient, self] ⊆ self``. The ambient subspace defaults to the whole algebra and
        must contain ``self``.
        """
        ambient = Subspace.whole(self._algebra) if ambient is None else ambient
        if not self <= ambient:
            return False
        return self.escaping_bracket(ambient) is None

    def closure(self):
        """
        The smallest subalgebra containing this subspace.
        """
        if self.is_zero:
            return self
        return span_closure(self.basis)

    @same_algebra
    def decompose(self, x, complement):
        """
        Splits ``x`` as ``a + b`` with ``a`` in ``self`` and ``b`` in ``complement``. The two
        subspaces must be complementary.

        :Returns: :class:`tuple` ``(a, b)``

        :Raises: :class:`ValueError` if the subspaces are not complementary.
        """
        if self.rank + complement.rank != self._algebra.dim or not self.intersect(complement).is_zero:
            raise ValueError('decompose needs complementary subspaces')
        stacked = sympy.Matrix.vstack(self.matrix(), complement.matrix())
        weights = stacked.T.solve(x.vector())
        a = weights[:self.rank, :].T * self.matrix() if self.rank else sympy.zeros(1, self._algebra.dim)
        b = x.vector().T - a
        return Element(self._algebra, tuple(a)), Element(self._algebra, tuple(b))

    def project(self, k):
        """
        Image of this subspace under the projection onto the ``k``-th summand.
        """
        summand = self._algebra.summands[k]
        return Subspace(summand, [x.component(k).coeffs for x in self.basis])

    def __repr__(self):
        return '<{}>'.format(', '.join(repr(x) for x in self.basis))


def killing_form(x, y):
    """
    :Returns: the exact Killing form ``tr(ad x . ad y)``.

    :Raises: :class:`errors.AlgebraMismatchError` if ``x`` and ``y`` live in different algebras.
    """
    return x.killing(y)


def span_closure(generators):
    """
    The smallest subalgebra containing the generators, computed by bracketing and spanning until
    the rank stops growing.

    :param generators: a nonempty list of elements of one algebra.

    :Returns: :class:`Subspace`

    :Example:
    >>> assert span_closure([sl2['e1'], sl2['e2']]).rank == 3  # doctest: +SKIP
    """
    generators = list(generators)
    if not generators:
        raise ValueError('span_closure needs at least one generator')
    space = Subspace.span(generators)
    while True:
        basis = space.basis
        brackets = [x.bracket(y) for x, y in itertools.combinations(basis, 2)]
        grown = space + Subspace.span(brackets, space.algebra)
        if grown.rank == space.rank:
            return space
        space = grown


def direct_sum(*algebras):
    """
    The direct sum of one or more algebras. Cross brackets vanish and labels are prefixed with the
    1-based position of their summand, e.g. ``2:i e1``. Sums of sums are flattened.

    :Example:
    >>> g = direct_sum(sl2, sl2)  # doctest: +SKIP
    >>> assert g.dim == 6  # doctest: +SKIP
    """
    pieces = []
    for a in algebras:
        pieces.extend(a.summands)
    if not pieces:
        raise ValueError('direct_sum needs at least one algebra')
    labels = []
    structure = {}
    offset = 0
    for position, piece in enumerate(pieces, 1):
        labels.extend('{}:{}'.format(position, label) for label in piece.labels)
        for (i, j), vector in piece.structure.items():
            structure[(i + offset, j + offset)] = {k + offset + 1: c for k, c in enumerate(vector) if c}
        offset += piece.dim
    name = '+'.join(p.name for p in pieces)
    return LieAlgebra(name, labels, structure, summands=pieces)


def sl2_form(x):
    """
    The quadratic form ``λ1² + λ2² − λ3²`` on sl2(R), i.e. the Killing form scaled by 1/8.
    """
    if x.algebra.name != 'sl2r':
        raise AlgebraMismatchError(sl2_form, x.algebra.name, 'sl2r')
    return x.killing(x) / 8


def classify_sl2_element(x):
    """
    Elliptic, parabolic or hyperbolic according to the sign of :func:`sl2_form`.

    :Returns: :class:`Sl2Class`

    :Raises: :class:`errors.AlgebraMismatchError` unless ``x`` lies in sl2(R).
    """
    if x.algebra.name != 'sl2r':
        raise AlgebraMismatchError(classify_sl2_element, x.algebra.name, 'sl2r')
    if x.is_zero:
        return Sl2Class.ZERO
    value = sl2_form(x)
    if value < 0:
        return Sl2Class.ELLIPTIC
    if value == 0:
        return Sl2Class.PARABOLIC
    return Sl2Class.HYPERBOLIC
