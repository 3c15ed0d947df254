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


import itertools
from collections.abc import Iterable, Iterator

import numpy as np

from bolsect._sampling.util import bounded


class SampleStream(object):
    """
    A fluent, lazily evaluated pipeline over seeded random draws.

    Every property suite in the package is a SampleStream: draw samples from a seeded
    generator, map each one to a residual, and reduce the residuals into a report. The
    generator is owned by the stream so a suite is reproducible from its seed alone.
    """

    def __init__(self, initial=None, seed=0):
        """
        :param initial: An optional initial value for the stream. `Must` be either an iterator or an iterable.
                        If `initial` is `None` then the stream will be initialized to be empty.
        :param seed: Seed of the :class:`numpy.random.Generator` handed to :meth:`SampleStream.draw`.

        :Raises: :class:`ValueError` if `initial` is neither an iterator nor an iterable.
        """
        if initial is None:
            initial = []
        if isinstance(initial, Iterator):
            self._stream = initial
        elif isinstance(initial, Iterable):
            self._stream = (x for x in initial)
        else:
            raise ValueError(
                'bolsect.SampleStream can only accept either an iterator or an iterable. Got {}'.format(type(initial)))
        self._rng = np.random.default_rng(seed)
        self._infinite = False

    @property
    def rng(self):
        return self._rng

    def draw(self, f):
        """
        Returns a stream that yields `f(rng)` endlessly, where `rng` is the stream's seeded generator.

        :param f: A function such that `f(rng: numpy.random.Generator) -> T`.

        :Returns: :class:`SampleStream`

        :Example:
        >>> got = SampleStream(seed=3).draw(lambda rng: rng.integers(0, 10)).take(4).collect()
        >>> assert got == SampleStream(seed=3).draw(lambda rng: rng.integers(0, 10)).take(4).collect()

        Unless :meth:`SampleStream.take` has been set up after a call to `draw`, the consumers
        :meth:`SampleStream.collect`, :meth:`SampleStream.count` and :meth:`SampleStream.reduce`
        raise :class:`errors.UnboundedSampleError`.
        """
        rng = self._rng

        def inner():
            while True:
                yield f(rng)
        self._stream = inner()
        self._infinite = True
        return self

    def chain(self, *iterables):
        """
        Links an arbitrary number of iterables to the end of this stream.

        :Returns: :class:`SampleStream`
        """
        self._stream = itertools.chain(self._stream, *iterables)
        return self

    def map(self, f):
        """
        Returns a stream that applies `f` to each element.

        :param f: A function such that `f(T) -> U`.

        :Returns: :class:`SampleStream`

        :Example:
        >>> got = SampleStream([1, 2, 3]).map(lambda x: x * 2).collect()
        >>> assert got == [2, 4, 6]
        """
        self._stream = (f(x) for x in self._stream)
        return self

    def filter(self, predicate):
        """
        Returns a stream that only yields elements for which `predicate` holds.

        :Returns: :class:`SampleStream`
        """
        self._stream = (x for x in self._stream if predicate(x))
        return self

    def enumerate(self):
        """
        Returns a stream of `(index, element)` pairs. Reports use the index to merge
        results deterministically.

        :Returns: :class:`SampleStream`
        """
        self._stream = enumerate(self._stream)
        return self

    def inspect(self, f):
        """
        Calls `f` on each element as it passes through, leaving the element untouched.
        Suites use this to log residuals.

        :Returns: :class:`SampleStream`
        """
        stream = self._stream

        def inner():
            for x in stream:
                f(x)
                yield x
        self._stream = inner()
        return self

    def take(self, n):
        """
        Returns a stream that only iterates over the first `n` elements.

        :param n: :class:`int`

        :Returns: :class:`SampleStream`

        :Example:
        >>> got = SampleStream([1, 2, 3, 4]).take(2).collect()
        >>> assert got == [1, 2]
        """
        self._stream = itertools.islice(self._stream, n)
        self._infinite = False
        return self

    @bounded
    def collect(self):
        """
        Evaluates the stream and returns a list of the final output.

        :Returns: :class:`list`

        :Raises: :class:`errors.UnboundedSampleError`
        """
        return [x for x in self]

    @bounded
    def count(self):
        """
        Evaluates the stream and returns the number of elements.

        :Returns: :class:`int`

        :Raises: :class:`errors.UnboundedSampleError`
        """
        return sum(1 for _ in self)

    @bounded
    def reduce(self, f, accumulator):
        """
        Evaluates the stream, folding `f` over it starting from `accumulator`.

        :param f: A function such that `f(accumulator: T, element) -> T`.
        :param accumulator: The initial value provided to `f`.

        :Returns: `T`

        :Raises: :class:`errors.UnboundedSampleError`

        :Example:
        >>> got = SampleStream([0.5, 2.0, 1.0]).reduce(max, 0.0)
        >>> assert got == 2.0
        """
        for x in self:
            accumulator = f(accumulator, x)
        return accumulator

    def __iter__(self):
        return self

    def __next__(self):
        return next(self._stream)
