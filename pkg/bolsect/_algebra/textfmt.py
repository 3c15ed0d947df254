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
Structured-text formats: ``.alg`` structure-constant files and the small expression language the
catalog uses for elements and matrices.

An ``.alg`` file has a header followed by one line per nonzero structure constant::

    # sl2(R)
    name sl2r
    labels e1, e2, e3
    1 2 3 2        # [e1, e2] has coefficient 2 on e3

Elements are written as linear expressions in the basis labels with spaces removed (``i e1`` is
written ``ie1``), e.g. ``e4 - e3 + b*e8``. Elements of a direct sum are written as tuples with one
expression per summand, e.g. ``(e1, 0, ie1)``.
"""

import logging
import re

import sympy

from bolsect._algebra.liealg import LieAlgebra, Element, Subspace, rational

log = logging.getLogger(__name__)

_COMMENT = re.compile(r'#.*$')


def identifier(label):
    """
    The expression identifier of a basis label.

    :Example:
    >>> assert identifier('i e1') == 'ie1'
    """
    return label.replace(' ', '')


def parse_algebra(text, source='<string>'):
    """
    Parses the ``.alg`` format.

    :Returns: :class:`LieAlgebra`

    :Raises: :class:`ValueError` naming the offending line.
    """
    name = None
    labels = None
    dim = None
    structure = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = _COMMENT.sub('', raw).strip()
        if not line:
            continue
        keyword, _, rest = line.partition(' ')
        if keyword == 'name':
            name = rest.strip()
        elif keyword == 'dim':
            dim = int(rest)
        elif keyword == 'labels':
            labels = [label.strip() for label in rest.split(',')]
        else:
            fields = line.split()
            if len(fields) != 4:
                raise ValueError('{}:{}: expected "i j k c", got {!r}'.format(source, number, raw))
            i, j, k = (int(f) for f in fields[:3])
            if (i, j) in structure and k in structure[(i, j)]:
                raise ValueError('{}:{}: duplicate entry for [{}, {}] on {}'.format(source, number, i, j, k))
            structure.setdefault((i, j), {})[k] = rational(fields[3])
    if name is None or labels is None:
        raise ValueError('{}: missing name or labels header'.format(source))
    if dim is not None and dim != len(labels):
        raise ValueError('{}: dim {} does not match {} labels'.format(source, dim, len(labels)))
    return LieAlgebra(name, labels, structure)


def read_algebra(path):
    with open(path, 'r') as fh:
        return parse_algebra(fh.read(), source=str(path))


def format_algebra(algebra):
    """
    Serializes an algebra back into the ``.alg`` format.
    """
    lines = ['name {}'.format(algebra.name),
             'dim {}'.format(algebra.dim),
             'labels {}'.format(', '.join(algebra.labels))]
    for (i, j), vector in sorted(algebra.structure.items()):
        for k, c in enumerate(vector, 1):
            if c:
                lines.append('{} {} {} {}'.format(i, j, k, c))
    return '\n'.join(lines) + '\n'


def _symbols(algebra):
    return {identifier(label): sympy.Symbol(identifier(label)) for label in algebra.labels}


def _sympify(text, names):
    try:
        return sympy.sympify(text, locals=names)
    except (sympy.SympifyError, SyntaxError, TypeError) as error:
        raise ValueError('cannot parse {!r}: {}'.format(text, error))


def _linear(algebra, expr, text):
    names = _symbols(algebra)
    expr = sympy.expand(expr)
    coeffs = []
    rest = expr
    for label in algebra.labels:
        symbol = names[identifier(label)]
        c = expr.coeff(symbol)
        coeffs.append(c)
        rest -= c * symbol
    if sympy.expand(rest) != 0:
        raise ValueError('{!r} is not a linear combination of the basis of {}'.format(text, algebra.name))
    return Element(algebra, coeffs)


def parse_element(algebra, text, params=None):
    """
    Parses an element expression, substituting the parameter values in ``params``.

    :param params: mapping of parameter name to a rational value.

    :Returns: :class:`Element`

    :Raises: :class:`ValueError` if the expression is not linear in the basis or a parameter is unbound.

    :Example:
    >>> x = parse_element(sl3, 'e4 - e3 + b*e8', {'b': 2})  # doctest: +SKIP
    """
    params = {k: rational(v) for k, v in (params or {}).items()}
    names = {k: sympy.Symbol(k) for k in params}
    summands = algebra.summands
    if len(summands) > 1:
        for piece in summands:
            names.update(_symbols(piece))
        expr = _sympify(text, names)
        if not isinstance(expr, (tuple, sympy.Tuple)) or len(expr) != len(summands):
            raise ValueError('{!r} must be a tuple with {} components'.format(text, len(summands)))
        result = algebra.zero()
        for k, (piece, part) in enumerate(zip(summands, expr)):
            part = sympy.sympify(part).subs({names[p]: v for p, v in params.items()})
            result = result + algebra.embed(k, _linear(piece, part, text))
        return result
    names.update(_symbols(algebra))
    expr = _sympify(text, names).subs({names[p]: v for p, v in params.items()})
    return _linear(algebra, expr, text)


def parse_subspace(algebra, generators, params=None):
    return Subspace.span([parse_element(algebra, g, params) for g in generators], algebra)


def parse_matrix(rows):
    """
    Parses a matrix given as nested lists of strings or numbers into an exact sympy matrix.
    Entries may use ``I`` for the imaginary unit and ``sqrt``.

    :Example:
    >>> m = parse_matrix([['1', 'I/2'], ['I', '1/2']])
    >>> assert m[0, 1] == sympy.I / 2
    """
    return sympy.Matrix([[sympy.sympify(str(entry)) for entry in row] for row in rows])


def parse_rational_matrix(rows):
    return sympy.Matrix([[rational(entry) for entry in row] for row in rows])
