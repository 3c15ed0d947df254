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


import os
from dataclasses import dataclass, field

CATALOG_ENV = 'BOLSECT_CATALOG'
MAX_CATALOG_DIM = 9
GROUP_COMMANDS = ('loop-suite', 'show')


@dataclass(frozen=True)
class Tolerances(object):
    """
    Numeric thresholds shared by the group-level code. Exact modules never consult these.

    :param membership: stabilizer membership and coset identity checks.
    :param pullback: residual allowed when pulling a matrix back through a representation.
    :param numeric_witness: residual allowed for conjugacy witnesses with irrational entries.
    :param snap_denominator: largest denominator used when snapping floats to rationals.
    :param loop: equality of loop points.
    """
    membership: float = 1e-9
    pullback: float = 1e-10
    numeric_witness: float = 1e-12
    snap_denominator: int = 10 ** 6
    loop: float = 1e-9

    def __post_init__(self):
        for name in ('membership', 'pullback', 'numeric_witness', 'loop'):
            if not getattr(self, name) > 0:
                raise ValueError('tolerance {} must be positive, got {}'.format(name, getattr(self, name)))
        if self.snap_denominator < 1:
            raise ValueError('snap_denominator must be at least 1')


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class CliConfig(object):
    command: str
    group: str = None
    tolerance: float = 1e-8
    samples: int = 1000
    seed: int = 0
    format: str = 'text'
    out: str = None
    max_dim: int = MAX_CATALOG_DIM
    d: float = 2.0
    r: tuple = (0.0, 1.0, -1.0, 2.0)
    catalog: str = field(default_factory=lambda: os.environ.get(CATALOG_ENV))
    reproducer: str = None
    verbose: int = 0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError('--tol must be positive, got {}'.format(self.tolerance))
        if self.samples < 1:
            raise ValueError('--samples must be at least 1, got {}'.format(self.samples))
        if not 0 <= self.max_dim <= MAX_CATALOG_DIM:
            raise ValueError('--max-dim must lie in 0..{}, got {}'.format(MAX_CATALOG_DIM, self.max_dim))
        if self.format not in ('text', 'json'):
            raise ValueError('--format must be text or json, got {}'.format(self.format))
        if not self.d > 1:
            raise ValueError('--d must be greater than 1, got {}'.format(self.d))
        if self.command in GROUP_COMMANDS and not self.group:
            raise ValueError('{} requires --group'.format(self.command))

    @property
    def tolerances(self):
        return Tolerances(loop=self.tolerance)
