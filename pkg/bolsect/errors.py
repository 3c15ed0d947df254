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


class AlgebraMismatchError(ValueError):
    def __init__(self, method, left, right):
        name = method.__qualname__ if hasattr(method, '__qualname__') else method.__name__
        super(AlgebraMismatchError, self).__init__('{} was called with elements of different algebras '
                                                   '({} and {}). Both operands MUST live in the same '
                                                   'algebra.'.format(name, left, right))


class JacobiError(ValueError):
    def __init__(self, algebra, violations):
        self.violations = violations
        shown = ', '.join('({}, {}, {})'.format(*triple) for triple in violations[:5])
        super(JacobiError, self).__init__('the structure constants of {} violate the Jacobi identity '
                                          'on {} basis triple(s): {}'.format(algebra, len(violations), shown))


class InvolutionError(ValueError):
    def __init__(self, algebra, reason):
        self.reason = reason
        super(InvolutionError, self).__init__('not an involutive automorphism of {}: {}'.format(algebra, reason))


class SubalgebraError(ValueError):
    def __init__(self, subspace, pair):
        super(SubalgebraError, self).__init__('{} is not closed under the bracket: [{}, {}] leaves the '
                                              'subspace'.format(subspace, *pair))


class PullbackError(ValueError):
    def __init__(self, rep, residual, tolerance):
        self.residual = residual
        super(PullbackError, self).__init__('matrix does not lie in the image of the {} representation '
                                            '(residual {:.3e} > {:.1e})'.format(rep, residual, tolerance))


class LogDomainError(ValueError):
    def __init__(self, smallest):
        super(LogDomainError, self).__init__('logarithm requires a positive definite self-adjoint matrix; '
                                             'smallest eigenvalue is {:.3e}'.format(smallest))


class SectionError(ValueError):
    def __init__(self, loop, reason):
        super(SectionError, self).__init__('section of {} failed: {}'.format(loop, reason))


class HomomorphismError(ValueError):
    def __init__(self, hom, residual):
        super(HomomorphismError, self).__init__('{} is not a homomorphism on sampled pairs '
                                                '(residual {:.3e})'.format(hom, residual))


class ReproductionError(ValueError):
    def __init__(self, reproducer, step):
        super(ReproductionError, self).__init__('{} failed at {}'.format(reproducer, step))


class CatalogError(ValueError):
    def __init__(self, entry, check, detail=''):
        self.entry = entry
        self.check = check
        message = 'catalog entry {} failed {}'.format(entry, check)
        if detail:
            message = '{}: {}'.format(message, detail)
        super(CatalogError, self).__init__(message)


class UnboundedSampleError(ValueError):
    def __init__(self, method):
        name = method.__qualname__ if hasattr(method, '__qualname__') else method.__name__
        super(UnboundedSampleError, self).__init__('{} was called on an unbounded sample stream. '
                                                   'If you use SampleStream.draw, then you MUST include a '
                                                   'SampleStream.take if you wish to '
                                                   'call {}'.format(name, name))
