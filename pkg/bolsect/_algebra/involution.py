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
Involutive automorphisms, their eigenspace splittings, Bol triple checks and exclusion witnesses.

A triple ``(g, h, m)`` is a Bol triple when ``h`` is a subalgebra, ``m`` is a complement of ``h``,
``m`` is a Lie triple system and ``m`` generates ``g``. An :class:`ExclusionWitness` rules a triple
out either by a nonzero element of ``h ∩ m`` or by a group element conjugating an element of ``h``
into ``m``.
"""

import enum
import itertools
import logging
from dataclasses import dataclass, field

import numpy as np
import sympy

from bolsect._algebra.liealg import Element, Subspace, rational
from bolsect.config import DEFAULT_TOLERANCES
from bolsect.errors import InvolutionError, PullbackError, SubalgebraError

log = logging.getLogger(__name__)


class Involution(object):
    """
    An automorphism ``τ`` of a Lie algebra with ``τ² = id``, given by its exact matrix in the
    basis of the algebra: column ``j`` holds the coordinates of ``τ(e_j)``.

    Instances are built by :func:`check_involution`, which validates both conditions.
    """

    def __init__(self, algebra, matrix, name=None):
        self._algebra = algebra
        self._matrix = sympy.Matrix(matrix)
        self._name = name or 'τ'

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, sympy.eye(algebra.dim), 'id')

    @property
    def algebra(self):
        return self._algebra

    @property
    def matrix(self):
        return self._matrix

    @property
    def name(self):
        return self._name

    def apply(self, x):
        return Element(self._algebra, tuple(self._matrix * x.vector()))

    def __call__(self, x):
        return self.apply(x)

    def eigensplit(self):
        return eigensplit(self)

    def __repr__(self):
        return 'Involution({}, {})'.format(self._algebra.name, self._name)


def check_involution(algebra, matrix, name=None):
    """
    Validates an involutive automorphism exactly.

    :param matrix: square matrix of size ``algebra.dim`` with rational entries.

    :Returns: :class:`Involution`

    :Raises: :class:`errors.InvolutionError` naming the condition that failed.
    """
    matrix = sympy.Matrix(matrix).applyfunc(rational)
    if matrix.shape != (algebra.dim, algebra.dim):
        raise InvolutionError(algebra.name, 'expected a {0}x{0} matrix, got {1}x{2}'.format(
            algebra.dim, *matrix.shape))
    if matrix * matrix != sympy.eye(algebra.dim):
        raise InvolutionError(algebra.name, 'its square is not the identity')
    tau = Involution(algebra, matrix, name)
    basis = algebra.basis()
    for i, j in itertools.combinations(range(algebra.dim), 2):
        if tau(basis[i].bracket(basis[j])) != tau(basis[i]).bracket(tau(basis[j])):
            raise InvolutionError(algebra.name, 'it does not preserve [{}, {}]'.format(
                algebra.labels[i], algebra.labels[j]))
    return tau


def product_involution(algebra, involutions, name=None):
    """
    The block diagonal involution of a direct sum acting by ``involutions[k]`` on the ``k``-th summand.
    """
    if len(involutions) != len(algebra.summands):
        raise InvolutionError(algebra.name, 'expected {} factor involutions, got {}'.format(
            len(algebra.summands), len(involutions)))
    for piece, tau in zip(algebra.summands, involutions):
        if tau.algebra != piece:
            raise InvolutionError(algebra.name, '{} does not act on {}'.format(tau, piece.name))
    matrix = sympy.diag(*[tau.matrix for tau in involutions])
    return check_involution(algebra, matrix, name or '×'.join(tau.name for tau in involutions))


@dataclass(frozen=True)
class EigenSplit(object):
    """
    The ``+1`` and ``-1`` eigenspaces ``h`` and ``m`` of an involution.
    """
    involution: Involution
    plus: Subspace
    minus: Subspace

    @property
    def h(self):
        return self.plus

    @property
    def m(self):
        return self.minus

    def graded(self):
        """
        Whether ``[h, h] ⊆ h``, ``[h, m] ⊆ m`` and ``[m, m] ⊆ h``.
        """
        h, m = self.plus, self.minus
        return (h.escaping_bracket() is None
                and all(x.bracket(y) in m for x in h.basis for y in m.basis)
                and all(x.bracket(y) in h for x in m.basis for y in m.basis))


def eigensplit(tau):
    """
    :Returns: :class:`EigenSplit` computed from the exact nullspaces of ``τ ∓ 1``.
    """
    identity = sympy.eye(tau.algebra.dim)
    plus = Subspace(tau.algebra, [tuple(v) for v in (tau.matrix - identity).nullspace()])
    minus = Subspace(tau.algebra, [tuple(v) for v in (tau.matrix + identity).nullspace()])
    return EigenSplit(tau, plus, minus)


def is_lie_triple_system(m):
    """
    Whether ``[[x, y], z] ∈ m`` for all ``x, y, z`` in ``m``.
    """
    basis = m.basis
    for x, y in itertools.combinations(basis, 2):
        xy = x.bracket(y)
        for z in basis:
            if xy.bracket(z) not in m:
                return False
    return True


def bracket_span(m):
    """
    The span of ``[m, m]``.
    """
    return Subspace.span([x.bracket(y) for x, y in itertools.combinations(m.basis, 2)], m.algebra)


@dataclass(frozen=True)
class BolTriple(object):
    """
    Outcome of :func:`bol_triple_check`. ``reductive`` is ``None`` unless the pair came from an
    involution, in which case it records ``g = m ⊕ [m, m]``.
    """
    h: Subspace
    m: Subspace
    complement: bool
    triple_system: bool
    generates: bool
    reductive: bool = None

    @property
    def ok(self):
        return self.complement and self.triple_system and self.generates and self.reductive is not False

    def failures(self):
        names = ('complement', 'triple_system', 'generates', 'reductive')
        return [name for name in names if getattr(self, name) is False]


def bol_triple_check(h, m, involution=None):
    """
    Checks the Bol triple conditions for ``(g, h, m)``.

    :param involution: when given, ``(h, m)`` must be its eigensplit and the reductive split
                       ``g = m ⊕ [m, m]`` is checked as well.

    :Returns: :class:`BolTriple`

    :Raises: :class:`errors.SubalgebraError` if ``h`` is not a subalgebra.
    """
    algebra = h.algebra
    escaping = h.escaping_bracket()
    if escaping is not None:
        raise SubalgebraError(h, escaping)
    complement = h.rank + m.rank == algebra.dim and h.intersect(m).is_zero
    triple_system = is_lie_triple_system(m)
    generates = not m.is_zero and m.closure().rank == algebra.dim
    reductive = None
    if involution is not None:
        split = eigensplit(involution)
        if (split.plus, split.minus) != (h, m):
            raise InvolutionError(algebra.name, '({}, {}) is not the eigensplit of {}'.format(h, m, involution.name))
        brackets = bracket_span(m)
        reductive = (m + brackets).rank == algebra.dim and m.intersect(brackets).is_zero
    result = BolTriple(h, m, complement, triple_system, generates, reductive)
    log.debug('bol triple %s / %s: %s', h, m, result.failures() or 'ok')
    return result


class WitnessKind(enum.Enum):
    DIRECT_INTERSECTION = 'DirectIntersection'
    CONJUGACY = 'Conjugacy'


@dataclass(frozen=True)
class ExclusionWitness(object):
    """
    Evidence that a triple does not give a global loop.

    :param element: a nonzero element of ``h``.
    :param group_element: for conjugacy, a :class:`GroupElement` with exact or numeric entries.
    :param target: for conjugacy, the expected image in ``m``; any nonzero multiple is accepted.
    :param side: ``left`` conjugates as ``g x g⁻¹``, ``right`` as ``g⁻¹ x g``.
    """
    kind: WitnessKind
    element: Element
    group_element: object = None
    target: Element = None
    side: str = 'left'
    name: str = ''


@dataclass
class ExclusionReport(object):
    witness: ExclusionWitness
    verified: bool
    reason: str = ''
    exact: bool = True
    scale: object = None
    image: Element = None
    residual: float = 0.0
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verified

    def summary(self):
        if not self.verified:
            return 'witness {} rejected: {}'.format(self.witness.name or '?', self.reason)
        if self.witness.kind is WitnessKind.DIRECT_INTERSECTION:
            return 'h ∩ m contains {}'.format(self.witness.element)
        return 'witness {} maps {} to {}·({}) ({})'.format(
            self.witness.name or '?', self.witness.element, self.scale, self.witness.target,
            'exact' if self.exact else 'numeric')


def proportionality(image, target):
    """
    The scalar ``λ`` with ``image = λ·target``, or ``None`` when there is none or ``λ = 0``.
    """
    if target.is_zero:
        return None
    index = next(i for i, c in enumerate(target.coeffs) if c)
    scale = image.coeffs[index] / target.coeffs[index]
    if scale == 0 or image != target * scale:
        return None
    return scale


def check_exclusion(witness, h, m, tolerances=DEFAULT_TOLERANCES, projective=True):
    """
    Verifies an exclusion witness against the pair ``(h, m)``.

    The target of a conjugacy witness names a direction of ``m``. With ``projective`` (the default) the
    image may be any nonzero multiple ``λ·target`` and ``λ`` is reported as ``scale``;
    ``projective=False`` demands ``Ad_g(x) = target``.

    A direct intersection witness must be a nonzero element of both ``h`` and ``m``. A conjugacy
    witness maps its element of ``h`` into ``m``: the adjoint image is computed numerically, snapped
    to rationals and, when the group element has Gaussian rational entries, rechecked exactly by
    ``g X = Y g`` (left) or ``X g = g Y`` (right). Otherwise the float residual must stay below
    ``tolerances.numeric_witness`` and the report is marked numeric.

    :Returns: :class:`ExclusionReport`, truthy when the witness holds.
    """
    x = witness.element
    if x.is_zero:
        return ExclusionReport(witness, False, 'the witness element is zero')
    if x not in h:
        return ExclusionReport(witness, False, '{} is not in h'.format(x))
    if witness.kind is WitnessKind.DIRECT_INTERSECTION:
        if x not in m:
            return ExclusionReport(witness, False, '{} is not in m'.format(x))
        return ExclusionReport(witness, True, image=x, scale=rational(1))
    from bolsect._groups.matrixrep import conjugate_matrix
    g, target = witness.group_element, witness.target
    if g is None or target is None:
        return ExclusionReport(witness, False, 'a conjugacy witness needs a group element and a target')
    if target not in m:
        return ExclusionReport(witness, False, 'the target {} is not in m'.format(target))
    rep = g.rep
    matrix = conjugate_matrix(g, x, witness.side)
    try:
        image = rep.element(matrix, tolerances)
    except PullbackError as error:
        return ExclusionReport(witness, False, str(error), exact=g.is_exact)
    scale = proportionality(image, target)
    if scale is None:
        return ExclusionReport(witness, False, 'the image {} is not a nonzero multiple of {}'.format(image, target),
                               exact=g.is_exact, image=image)
    if not projective and scale != 1:
        return ExclusionReport(witness, False, 'the image {} is {} times {}'.format(image, scale, target),
                               exact=g.is_exact, image=image, scale=scale)
    if g.is_exact:
        gx, y = g.exact, rep.exact(image)
        source = rep.exact(x)
        difference = gx * source - y * gx if witness.side == 'left' else source * gx - gx * y
        if any(sympy.expand(entry) != 0 for entry in difference):
            return ExclusionReport(witness, False, 'the exact recheck of the snapped image failed', image=image)
        return ExclusionReport(witness, True, image=image, scale=scale)
    residual = float(np.max(np.abs(matrix - rep(image))))
    if residual > tolerances.numeric_witness:
        return ExclusionReport(witness, False, 'numeric residual {:.3e} exceeds {:.1e}'.format(
            residual, tolerances.numeric_witness), exact=False, image=image, residual=residual)
    return ExclusionReport(witness, True, exact=False, scale=scale, image=image, residual=residual)


def direct_intersection(h, m):
    """
    A direct intersection witness for ``(h, m)`` if ``h ∩ m`` is nonzero, else ``None``.
    """
    common = h.intersect(m)
    if common.is_zero:
        return None
    return ExclusionWitness(WitnessKind.DIRECT_INTERSECTION, common.basis[0], name='h∩m')
