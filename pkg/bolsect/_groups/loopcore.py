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
Global loops on coset spaces ``G/H`` built from a section ``σ``: ``xH ∗ yH = σ(xH) y H``.

Every point is stored as the canonical representative of its coset, so equality of points is a
comparison of matrices. The property suites at the bottom of the module are
:class:`SampleStream` pipelines over seeded draws.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from bolsect._groups.matrixrep import CARTAN, adjoint, mat_exp, mat_log_pd, polar_section, sign_normalize
from bolsect._groups.stabilizers import MaximalCompact, StabilizerFamily
from bolsect._sampling import SampleStream
from bolsect.config import DEFAULT_TOLERANCES
from bolsect.errors import AlgebraMismatchError, HomomorphismError, SectionError

log = logging.getLogger(__name__)


def relative_gap(x, y):
    """
    Entry-wise max deviation between two matrices, relative to their size once it exceeds 1.
    """
    x, y = np.asarray(x), np.asarray(y)
    scale = max(1.0, float(np.max(np.abs(x))), float(np.max(np.abs(y))))
    return float(np.max(np.abs(x - y))) / scale


class LoopPoint(object):
    """
    A point of a loop, held as the canonical representative of its coset.

    ``a * b`` multiplies, ``a.ldiv(b)`` is ``a \\ b`` and ``b / a`` is the right quotient.
    """

    __slots__ = ('_loop', '_matrix')

    def __init__(self, loop, matrix):
        self._loop = loop
        self._matrix = matrix

    @property
    def loop(self):
        return self._loop

    @property
    def matrix(self):
        return self._matrix

    def __mul__(self, other):
        return loop_mul(self, other)

    def __truediv__(self, other):
        return right_divide(self, other)

    def ldiv(self, other):
        return left_divide(self, other)

    def inverse(self):
        return self._loop.inverse(self)

    def gap(self, other):
        return relative_gap(self._matrix, other._matrix)

    def close_to(self, other, tolerance=DEFAULT_TOLERANCES.loop):
        return self.gap(other) <= tolerance

    def __repr__(self):
        return 'LoopPoint({}, {})'.format(self._loop.name, np.array2string(self._matrix, precision=4))


class LoopInstance(object):
    """
    Base class of the loops. Subclasses provide :meth:`canonical`, :meth:`right_solve` and the
    samplers; everything else is shared.

    :param name: display name, e.g. ``H2`` or ``Scheerer(SO3; H2)``.
    :param group_tag: tag of the block diagonal matrix group ``G``.
    :param blocks: sizes of the diagonal blocks of ``G``.
    :param projective: per-block flags for classes modulo ``±I``.
    :param stabilizer: the :class:`StabilizerFamily` ``H``.
    """

    is_bruck = False

    def __init__(self, name, group_tag, blocks, projective, stabilizer):
        self.name = name
        self.group_tag = group_tag
        self.blocks = tuple(blocks)
        self.projective = tuple(projective)
        self.stabilizer = stabilizer
        self.size = sum(self.blocks)

    def normalize(self, x):
        return sign_normalize(x, self.blocks, self.projective)

    def canonical(self, x):
        raise NotImplementedError

    def right_solve(self, b, a):
        """
        The canonical ``x`` with ``σ(x a) = b`` for canonical matrices ``a`` and ``b``.
        """
        raise NotImplementedError

    def random_point(self, rng):
        raise NotImplementedError

    def random_direction(self, rng):
        """
        A generator ``X`` whose one-parameter group ``exp(sX)`` consists of canonical points.
        """
        raise NotImplementedError

    def random_group_element(self, rng):
        raise NotImplementedError

    def section(self, x):
        """
        The canonical representative of the coset ``xH``.

        :Raises: :class:`errors.SectionError` if the result is not finite.
        """
        p = self.canonical(np.asarray(x))
        if not np.all(np.isfinite(p)):
            raise SectionError(self.name, 'non-finite representative')
        return self.normalize(p)

    def point(self, x):
        return LoopPoint(self, self.section(x))

    def identity(self):
        return LoopPoint(self, self.normalize(np.eye(self.size)))

    def exp_point(self, generator):
        return self.point(mat_exp(generator))

    def inverse(self, a):
        return left_divide(a, self.identity())

    def split(self, x):
        """
        The diagonal blocks of a block diagonal matrix.
        """
        pieces, start = [], 0
        for size in self.blocks:
            pieces.append(x[start:start + size, start:start + size])
            start += size
        return pieces

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self.name)


def _check_same_loop(method, a, b):
    if a.loop is not b.loop:
        raise AlgebraMismatchError(method, a.loop.name, b.loop.name)


def loop_mul(a, b):
    """
    ``a ∗ b = σ(a b H)``; ``a`` is already canonical so ``σ(aH) = a``.
    """
    _check_same_loop(loop_mul, a, b)
    return a.loop.point(a.matrix @ b.matrix)


def left_divide(a, b):
    """
    ``a \\ b``: the canonical point of the coset ``a⁻¹ b H``.
    """
    _check_same_loop(left_divide, a, b)
    return a.loop.point(np.linalg.solve(a.matrix, b.matrix))


def right_divide(b, a):
    """
    ``b / a``: the unique point ``x`` with ``x ∗ a = b``.

    :Raises: :class:`errors.SectionError` if the solution fails its defining equation.
    """
    _check_same_loop(right_divide, a, b)
    loop = a.loop
    x = LoopPoint(loop, loop.normalize(loop.right_solve(b.matrix, a.matrix)))
    residual = relative_gap(loop.section(x.matrix @ a.matrix), b.matrix)
    if residual > 1e-6:
        raise SectionError(loop.name, 'right division residual {:.3e}'.format(residual))
    return x


class SymmetricSpaceLoop(LoopInstance):
    """
    The loop of hyperbolic type on ``G/K`` for a group with Cartan involution ``x -> (x*)⁻¹``: the
    section image is ``exp m``, the positive definite elements of ``G``, and ``σ(x)`` is the
    positive factor of the polar decomposition. These loops are Bruck loops.

    :param rep: representation of ``g``.
    :param m: the ``-1`` eigenspace, self-adjoint in the representation.
    :param k: the compact ``+1`` eigenspace.
    """

    is_bruck = True

    def __init__(self, name, rep, m, k):
        super(SymmetricSpaceLoop, self).__init__(name, rep.group_tag, rep.blocks, rep.projective,
                                                 MaximalCompact(rep, k))
        self.rep = rep
        self.m = m
        self.k = k
        self._m_basis = [rep(x) for x in m.basis]
        self._g_basis = [rep(x) for x in rep.algebra.basis()]
        for x in self._m_basis:
            if float(np.max(np.abs(x - adjoint(x)))) > 1e-12:
                raise SectionError(name, 'm is not self-adjoint in the {} representation'.format(rep.group_tag))

    def canonical(self, x):
        p, _ = polar_section(x, CARTAN)
        return p

    def polar(self, x):
        return polar_section(x, CARTAN)

    def right_solve(self, b, a):
        # x = a⁻¹ σ(a b) a⁻¹ solves x a² x = b²
        middle = self.canonical(a @ b)
        x = np.linalg.solve(a, np.linalg.solve(a, middle).conj().T).conj().T
        return (x + adjoint(x)) / 2

    def power(self, a, n):
        """
        ``a^n`` inside the one-parameter subgroup through ``a``, i.e. ``exp(n log a)``.
        """
        return LoopPoint(self, self.normalize(mat_exp(n * mat_log_pd(a.matrix))))

    def random_direction(self, rng):
        weights = rng.uniform(-2, 2, len(self._m_basis))
        return sum(w * x for w, x in zip(weights, self._m_basis))

    def random_point(self, rng):
        return self.exp_point(self.random_direction(rng))

    def random_group_element(self, rng):
        result = np.eye(self.size)
        for _ in range(2):
            weights = rng.uniform(-1, 1, len(self._g_basis))
            result = result @ mat_exp(sum(w * x for w, x in zip(weights, self._g_basis)))
        return result


class GroupLoop(LoopInstance):
    """
    A matrix group regarded as a loop with trivial stabilizer ``{±I}``.
    """

    def __init__(self, name, rep):
        super(GroupLoop, self).__init__(name, rep.group_tag, rep.blocks, rep.projective, Center(rep))
        self.rep = rep
        self._g_basis = [rep(x) for x in rep.algebra.basis()]

    def canonical(self, x):
        return x

    def right_solve(self, b, a):
        return np.linalg.solve(a.T, b.T).T

    def random_direction(self, rng):
        weights = rng.uniform(-1, 1, len(self._g_basis))
        return sum(w * x for w, x in zip(weights, self._g_basis))

    def random_point(self, rng):
        return self.point(self.random_group_element(rng))

    def random_group_element(self, rng):
        return mat_exp(self.random_direction(rng)) @ mat_exp(self.random_direction(rng))


class Center(StabilizerFamily):
    """
    ``{±I}`` on the projective blocks and ``{I}`` elsewhere.
    """

    def __init__(self, rep):
        super(Center, self).__init__('center', 0)
        self._blocks = rep.blocks
        self._projective = rep.projective

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g = sign_normalize(np.asarray(g), self._blocks, self._projective)
        return float(np.max(np.abs(g - np.eye(g.shape[0])))) <= tolerance

    def sample(self, rng):
        return np.eye(sum(self._blocks))


class ProductLoop(LoopInstance):
    """
    The direct product of loops with componentwise multiplication.
    """

    def __init__(self, factors):
        factors = list(factors)
        super(ProductLoop, self).__init__(' × '.join(f.name for f in factors),
                                          '+'.join(f.group_tag for f in factors),
                                          [b for f in factors for b in f.blocks],
                                          [p for f in factors for p in f.projective],
                                          ProductStabilizer(factors))
        self.factors = factors
        self.is_bruck = all(f.is_bruck for f in factors)

    def _pieces(self, x):
        pieces, start = [], 0
        for f in self.factors:
            pieces.append(x[start:start + f.size, start:start + f.size])
            start += f.size
        return pieces

    def canonical(self, x):
        return scipy.linalg.block_diag(*[f.section(piece) for f, piece in zip(self.factors, self._pieces(x))])

    def right_solve(self, b, a):
        return scipy.linalg.block_diag(*[f.right_solve(pb, pa) for f, pb, pa in
                                         zip(self.factors, self._pieces(b), self._pieces(a))])

    def random_point(self, rng):
        return self.point(scipy.linalg.block_diag(*[f.random_point(rng).matrix for f in self.factors]))

    def random_direction(self, rng):
        return scipy.linalg.block_diag(*[f.random_direction(rng) for f in self.factors])

    def random_group_element(self, rng):
        return scipy.linalg.block_diag(*[f.random_group_element(rng) for f in self.factors])


class ProductStabilizer(StabilizerFamily):

    def __init__(self, factors):
        super(ProductStabilizer, self).__init__('×'.join(f.stabilizer.tag for f in factors),
                                                sum(f.stabilizer.dimension for f in factors))
        self._factors = factors

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g, start = np.asarray(g), 0
        for f in self._factors:
            end = start + f.size
            if np.any(np.abs(g[start:end, end:]) > tolerance) or np.any(np.abs(g[end:, start:end]) > tolerance):
                return False
            if not f.stabilizer.contains(g[start:end, start:end], tolerance):
                return False
            start = end
        return True

    def sample(self, rng):
        return scipy.linalg.block_diag(*[f.stabilizer.sample(rng) for f in self._factors])


def direct_product(*loops):
    """
    :Returns: :class:`ProductLoop` with componentwise multiplication.
    """
    return ProductLoop(loops)


class Hom(object):
    """
    A homomorphism from the stabilizer of a symmetric space loop into a fiber group. The block
    ``source`` of a stabilizer element is raised to ``power`` and copied into each fiber block listed
    in ``targets``; the other fiber blocks receive the identity. No targets gives the trivial
    homomorphism, power ``1`` an embedding and power ``n > 1`` a homomorphism with kernel of order ``n``
    on ``SO(2)``.
    """

    def __init__(self, source=0, targets=(), power=1):
        self.source = source
        self.targets = tuple(targets)
        self.power = power

    @classmethod
    def trivial(cls):
        return cls()

    @property
    def kind(self):
        if not self.targets:
            return 'trivial'
        return 'embedding' if self.power == 1 else 'power {}'.format(self.power)

    def bind(self, base_blocks, fiber_blocks):
        """
        Checks that the source block fits each target block.

        :Raises: :class:`ValueError` on a size mismatch.
        """
        for t in self.targets:
            if not 0 <= self.source < len(base_blocks) or not 0 <= t < len(fiber_blocks):
                raise ValueError('{} refers to a missing block'.format(self))
            if base_blocks[self.source] != fiber_blocks[t]:
                raise ValueError('{0} maps a {1}x{1} block into a {2}x{2} block'.format(
                    self, base_blocks[self.source], fiber_blocks[t]))

    def apply(self, k_blocks, fiber_blocks):
        pieces = [np.eye(size) for size in fiber_blocks]
        if self.targets:
            image = np.linalg.matrix_power(k_blocks[self.source], self.power)
            for t in self.targets:
                pieces[t] = image
        return scipy.linalg.block_diag(*pieces)

    def __repr__(self):
        if not self.targets:
            return 'Hom(trivial)'
        return 'Hom({} -> {}, power {})'.format(self.source, list(self.targets), self.power)


@dataclass(frozen=True)
class ScheererExtensionSpec(object):
    """
    :param base: the loop on ``G1/H1``; must provide a polar factorization.
    :param fiber: representation of the fiber group ``G2``.
    :param hom: the homomorphism ``φ: H1 -> G2``.
    """
    base: SymmetricSpaceLoop
    fiber: object
    hom: Hom = field(default_factory=Hom.trivial)
    name: str = None


class ScheererExtension(LoopInstance):
    """
    The loop on ``(G1 × G2) / {(h, φ(h))}`` whose section image is ``exp m1 × G2``:
    ``σ(x1, x2) = (p1, x2 φ(k1)⁻¹)`` where ``x1 = p1 k1``.
    """

    def __init__(self, spec):
        base, fiber, hom = spec.base, spec.fiber, spec.hom
        hom.bind(base.blocks, fiber.blocks)
        name = spec.name or 'Scheerer({}; {})'.format(fiber.group_tag, base.name)
        super(ScheererExtension, self).__init__(name, '{}+{}'.format(base.group_tag, fiber.group_tag),
                                                base.blocks + fiber.blocks, base.projective + fiber.projective,
                                                GraphStabilizer(base, fiber, hom))
        self.base = base
        self.fiber = GroupLoop(fiber.group_tag, fiber)
        self.hom = hom
        self._n1 = base.size

    def phi(self, k):
        return self.hom.apply(self.base.split(k), self.fiber.blocks)

    def canonical(self, x):
        n = self._n1
        p, k = self.base.polar(x[:n, :n])
        return scipy.linalg.block_diag(p, x[n:, n:] @ np.linalg.inv(self.phi(k)))

    def right_solve(self, b, a):
        n = self._n1
        x1 = self.base.right_solve(b[:n, :n], a[:n, :n])
        k = np.linalg.solve(b[:n, :n], x1 @ a[:n, :n])
        x2 = b[n:, n:] @ self.phi(k) @ np.linalg.inv(a[n:, n:])
        return scipy.linalg.block_diag(x1, x2)

    def check_hom(self, rng, samples=20, tolerance=DEFAULT_TOLERANCES.membership):
        """
        :Raises: :class:`errors.HomomorphismError` if ``φ(k k') ≠ φ(k) φ(k')`` on sampled pairs.
        """
        worst = 0.0
        for _ in range(samples):
            k1, k2 = self.base.stabilizer.sample(rng), self.base.stabilizer.sample(rng)
            worst = max(worst, relative_gap(self.phi(k1 @ k2), self.phi(k1) @ self.phi(k2)))
        if worst > tolerance:
            raise HomomorphismError(self.hom, worst)
        return worst

    def random_point(self, rng):
        return self.point(scipy.linalg.block_diag(self.base.random_point(rng).matrix,
                                                  self.fiber.random_group_element(rng)))

    def random_direction(self, rng):
        return scipy.linalg.block_diag(self.base.random_direction(rng), self.fiber.random_direction(rng))

    def random_group_element(self, rng):
        return scipy.linalg.block_diag(self.base.random_group_element(rng), self.fiber.random_group_element(rng))


class GraphStabilizer(StabilizerFamily):
    """
    ``{(k, φ(k)) : k ∈ H1}``, with the fiber component compared up to sign on projective blocks.
    """

    def __init__(self, base, fiber, hom):
        super(GraphStabilizer, self).__init__('graph({})'.format(hom.kind), base.stabilizer.dimension)
        self._base = base
        self._fiber = fiber
        self._hom = hom

    def _phi(self, k):
        return self._hom.apply(self._base.split(k), self._fiber.blocks)

    def contains(self, g, tolerance=DEFAULT_TOLERANCES.membership):
        g, n = np.asarray(g), self._base.size
        if np.any(np.abs(g[:n, n:]) > tolerance) or np.any(np.abs(g[n:, :n]) > tolerance):
            return False
        k = g[:n, :n]
        if not self._base.stabilizer.contains(k, tolerance):
            return False
        blocks, flags = self._fiber.blocks, self._fiber.projective
        expected = sign_normalize(self._phi(k), blocks, flags)
        return relative_gap(sign_normalize(g[n:, n:], blocks, flags), expected) <= tolerance

    def sample(self, rng):
        k = self._base.stabilizer.sample(rng)
        return scipy.linalg.block_diag(k, self._phi(k))


def scheerer_extension(spec, rng=None):
    """
    Builds the Scheerer extension of ``spec.fiber`` by ``spec.base`` after checking ``spec.hom``.

    :Returns: :class:`ScheererExtension`

    :Raises: :class:`errors.HomomorphismError` if the homomorphism check fails.
    """
    loop = ScheererExtension(spec)
    loop.check_hom(rng if rng is not None else np.random.default_rng(0))
    return loop


def check_bol(a, b, c, tolerance=DEFAULT_TOLERANCES.loop):
    """
    The left Bol identity ``a ∗ (b ∗ (a ∗ c)) = (a ∗ (b ∗ a)) ∗ c``.
    """
    return bol_residual(a, b, c) <= tolerance


def bol_residual(a, b, c):
    return (a * (b * (a * c))).gap((a * (b * a)) * c)


def check_bruck(x, y, tolerance=DEFAULT_TOLERANCES.loop):
    """
    The automorphic inverse property ``(x ∗ y)⁻¹ = x⁻¹ ∗ y⁻¹``.
    """
    return bruck_residual(x, y) <= tolerance


def bruck_residual(x, y):
    return (x * y).inverse().gap(x.inverse() * y.inverse())


def division_residual(a, b):
    return max((a * a.ldiv(b)).gap(b), ((b / a) * a).gap(b))


@dataclass
class SuiteReport(object):
    suite: str
    group: str
    samples: int
    tolerance: float
    max_residual: float = 0.0
    witnesses: list = field(default_factory=list)

    @property
    def verdict(self):
        return self.max_residual <= self.tolerance

    def record(self, index, residual):
        self.max_residual = max(self.max_residual, residual)
        if residual > self.tolerance and len(self.witnesses) < 5:
            self.witnesses.append({'sample': index, 'residual': residual})
        return self

    def to_dict(self):
        return {'suite': self.suite, 'group': self.group, 'samples': self.samples, 'tolerance': self.tolerance,
                'max_residual': self.max_residual, 'verdict': self.verdict, 'witnesses': list(self.witnesses)}


def _suite(loop, name, samples, tolerance, seed, draw, residual):
    report = SuiteReport(name, loop.group_tag, samples, tolerance)
    report = SampleStream(seed=seed) \
        .draw(draw) \
        .take(samples) \
        .map(residual) \
        .enumerate() \
        .reduce(lambda acc, pair: acc.record(*pair), report)
    log.info('%s %s: max residual %.3e over %d samples (%s)', loop.name, name, report.max_residual, samples,
             'pass' if report.verdict else 'FAIL')
    return report


def bol_suite(loop, samples=1000, tolerance=1e-8, seed=0):
    return _suite(loop, 'bol', samples, tolerance, seed,
                  lambda rng: (loop.random_point(rng), loop.random_point(rng), loop.random_point(rng)),
                  lambda abc: bol_residual(*abc))


def bruck_suite(loop, samples=1000, tolerance=1e-8, seed=0):
    return _suite(loop, 'bruck', samples, tolerance, seed,
                  lambda rng: (loop.random_point(rng), loop.random_point(rng)),
                  lambda xy: bruck_residual(*xy))


def division_suite(loop, samples=1000, tolerance=1e-8, seed=0):
    return _suite(loop, 'divisions', samples, tolerance, seed,
                  lambda rng: (loop.random_point(rng), loop.random_point(rng)),
                  lambda ab: division_residual(*ab))


def inverse_residual(a, b):
    return (a.inverse() * (a * b)).gap(b)


def inverse_suite(loop, samples=1000, tolerance=1e-8, seed=0):
    """
    The left inverse property ``a⁻¹ ∗ (a ∗ b) = b``, which every left Bol loop has.
    """
    return _suite(loop, 'left_inverse', samples, tolerance, seed,
                  lambda rng: (loop.random_point(rng), loop.random_point(rng)),
                  lambda ab: inverse_residual(*ab))


def alternative_suite(loop, samples=1000, tolerance=1e-8, seed=0):
    """
    Strong left alternativity: ``exp(sX) ∗ exp(tX) = exp((s + t)X)`` for canonical directions ``X``.
    """
    def draw(rng):
        return loop.random_direction(rng), rng.uniform(-1, 1), rng.uniform(-1, 1)

    def residual(sample):
        x, s, t = sample
        return (loop.exp_point(s * x) * loop.exp_point(t * x)).gap(loop.exp_point((s + t) * x))
    return _suite(loop, 'left_alternative', samples, tolerance, seed, draw, residual)


def section_uniqueness(loop, samples=1000, tolerance=1e-8, seed=0):
    """
    For random group elements ``x`` and stabilizer elements ``h``: ``σ(x)⁻¹ x ∈ H``,
    ``σ(σ(x)) = σ(x)`` and ``σ(x h) = σ(x)``. Symmetric space loops also check ``τ(p) p = I``.

    :Returns: :class:`SuiteReport`; a failed membership counts as an infinite residual.
    """
    def draw(rng):
        return loop.random_group_element(rng), loop.stabilizer.sample(rng)

    def residual(sample):
        x, h = sample
        p = loop.section(x)
        worst = max(relative_gap(loop.section(p), p), relative_gap(loop.section(x @ h), p))
        if isinstance(loop, SymmetricSpaceLoop):
            worst = max(worst, relative_gap(CARTAN(p) @ p, np.eye(loop.size)))
        if not loop.stabilizer.contains(np.linalg.solve(p, x), max(tolerance, 1e-9)):
            return float('inf')
        return worst
    return _suite(loop, 'section', samples, tolerance, seed, draw, residual)


def run_suites(loop, samples=1000, tolerance=1e-8, seed=0):
    """
    Every suite that applies to the loop: divisions, Bol, left inverse, left alternativity and
    the section checks, plus the Bruck identity for Bruck loops.

    :Returns: :class:`list` of :class:`SuiteReport`
    """
    reports = [division_suite(loop, samples, tolerance, seed),
               bol_suite(loop, samples, tolerance, seed),
               inverse_suite(loop, samples, tolerance, seed),
               alternative_suite(loop, samples, tolerance, seed),
               section_uniqueness(loop, samples, tolerance, seed)]
    if loop.is_bruck:
        reports.insert(2, bruck_suite(loop, samples, tolerance, seed))
    return reports
