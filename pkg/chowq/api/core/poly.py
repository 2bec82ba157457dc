#############################################################################
# Copyright (c) 2018 Eli Polonsky. All rights reserved
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
#   * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   * See the License for the specific language governing permissions and
#   * limitations under the License.
#
#############################################################################

import re
from fractions import Fraction

from sympy import QQ
from sympy import Symbol
from sympy import SympifyError
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from chowq.api import exceptions
from chowq.api import utils

Z = 'z'
U = 'u'
Y = 'y'

NAMESPACES = (Z, U, Y)

ADD = 'add'
SUB = 'sub'
MUL = 'mul'

_FACTOR = re.compile(r'^(?:z(?P<z>\d+)|u(?P<u>\d+)|y(?P<row>[12]),(?P<col>\d+))(?:\^(?P<exp>\d+))?$')
_COEFFICIENT = re.compile(r'^\d+(?:/\d+)?$')


def order_key(exponents):
    """
    Monomial order key: exponent tuples compared from the last variable of the space backwards,
    so that z1 < ... < zE < u1 < ... < uN < y1,1 < ... < y2,N as monomials.
    """

    return tuple(reversed(exponents))


def to_qq(value):
    fraction = utils.to_fraction(value)
    return QQ(fraction.numerator, fraction.denominator)


def from_qq(value):
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


class VarId(object):

    """
    Identifies a single variable: z_e for an edge e, u_i for a node i or y_{r,j} for an entry of
    the 2xN matrix of a line.

    Args:
        namespace (str): One of Z, U, Y.
        index: An edge id for Z, a node index for U and a (row, column) pair for Y.
    """

    __slots__ = ('namespace', 'index')

    def __init__(self, namespace, index):
        if namespace not in NAMESPACES:
            raise exceptions.InvalidArgumentsException('Unknown namespace: {0}'.format(namespace))
        if namespace == Y:
            index = tuple(index)
        self.namespace = namespace
        self.index = index

    @property
    def name(self):
        if self.namespace == Y:
            return 'y{0},{1}'.format(*self.index)
        return '{0}{1}'.format(self.namespace, self.index)

    @property
    def symbol_name(self):
        if self.namespace == Y:
            return 'y{0}_{1}'.format(*self.index)
        return self.name

    def __eq__(self, other):
        return isinstance(other, VarId) and \
            self.namespace == other.namespace and self.index == other.index

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.namespace, self.index))

    def __repr__(self):
        return self.name


class VariableSpace(object):

    """
    The ambient polynomial ring of a problem: one z variable per quiver edge, u_1..u_N and
    y_{1,1}..y_{2,N}, ordered exactly this way. Monomials compare through order_key, which is
    also the order used for serialization.

    Args:
        edges (list): Edge ids (positive integers).
        n_nodes (int): N.
    """

    def __init__(self, edges, n_nodes):

        edges = tuple(sorted(set(edges)))
        if any(not isinstance(edge, int) or edge < 1 for edge in edges):
            raise exceptions.InvalidArgumentsException('Edge ids must be positive integers: {0}'
                                                       .format(list(edges)))
        if not isinstance(n_nodes, int) or n_nodes < 1:
            raise exceptions.InvalidArgumentsException('Node count must be positive: {0}'
                                                       .format(n_nodes))

        self._edges = edges
        self._n_nodes = n_nodes

        variables = [VarId(Z, edge) for edge in edges]
        variables.extend(VarId(U, node) for node in range(1, n_nodes + 1))
        variables.extend(VarId(Y, (row, column))
                         for row in (1, 2) for column in range(1, n_nodes + 1))

        self._variables = tuple(variables)
        self._positions = dict((variable, position)
                               for position, variable in enumerate(self._variables))
        self._ring = PolyRing([Symbol(variable.symbol_name) for variable in self._variables],
                              QQ, lex)
        self._slices = {
            Z: slice(0, len(edges)),
            U: slice(len(edges), len(edges) + n_nodes),
            Y: slice(len(edges) + n_nodes, len(variables))
        }

    @property
    def edges(self):
        return self._edges

    @property
    def n_nodes(self):
        return self._n_nodes

    @property
    def variables(self):
        return self._variables

    @property
    def ring(self):
        return self._ring

    def namespace_slice(self, namespace):
        return self._slices[namespace]

    def position(self, variable):
        try:
            return self._positions[variable]
        except KeyError:
            raise exceptions.UnknownVariableException(name=variable.name, space=self)

    def generator(self, variable):
        return self._ring.gens[self.position(variable)]

    def z(self, edge):
        return Poly(self, self.generator(VarId(Z, edge)))

    def u(self, node):
        return Poly(self, self.generator(VarId(U, node)))

    def y(self, row, column):
        return Poly(self, self.generator(VarId(Y, (row, column))))

    def zero(self):
        return Poly(self, self._ring.zero)

    def one(self):
        return Poly(self, self._ring.one)

    def constant(self, value):
        return Poly(self, self._ring.ground_new(to_qq(value)))

    def monomial(self, exponents, coefficient=1):

        """
        Builds coefficient * prod(v^e) from a mapping VarId -> exponent.
        """

        vector = [0] * len(self._variables)
        for variable, exponent in exponents.items():
            if exponent < 0:
                raise exceptions.InvalidArgumentsException('Negative exponent for {0}'
                                                           .format(variable))
            vector[self.position(variable)] += exponent
        return Poly(self, self._ring.from_dict({tuple(vector): to_qq(coefficient)}))

    def u_monomial(self, exponents, coefficient=1):
        return self.monomial(dict((VarId(U, node), exponent)
                                  for node, exponent in enumerate(exponents, start=1)),
                             coefficient=coefficient)

    def __eq__(self, other):
        return isinstance(other, VariableSpace) and \
            self._edges == other.edges and self._n_nodes == other.n_nodes

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._edges, self._n_nodes))

    def __repr__(self):
        return 'VariableSpace(edges={0}, n_nodes={1})'.format(list(self._edges), self._n_nodes)


class Monomial(object):

    """
    A power product inside a VariableSpace, stored as its exponent tuple.
    """

    __slots__ = ('space', 'exponents')

    def __init__(self, space, exponents):
        self.space = space
        self.exponents = tuple(exponents)

    def vector(self, namespace):
        return self.exponents[self.space.namespace_slice(namespace)]

    def degree(self, namespace=None):
        if namespace is None:
            return sum(self.exponents)
        return sum(self.vector(namespace))

    def items(self):
        return [(variable, exponent)
                for variable, exponent in zip(self.space.variables, self.exponents) if exponent]

    def to_text(self):
        factors = []
        for variable, exponent in self.items():
            if exponent == 1:
                factors.append(variable.name)
            else:
                factors.append('{0}^{1}'.format(variable.name, exponent))
        return ' '.join(factors)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return order_key(self.exponents) < order_key(other.exponents)

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return self.to_text() or '1'


class Poly(object):

    """
    A sparse polynomial with exact rational coefficients over a VariableSpace.

    The heavy lifting is done by a sympy PolyRing element over QQ. Instances are immutable:
    every operation returns a new Poly.

    Args:
        space (VariableSpace): The ambient variable space.
        element (PolyElement): An element of space.ring.
    """

    def __init__(self, space, element):
        self._space = space
        self._element = element

    @property
    def space(self):
        return self._space

    @property
    def element(self):
        return self._element

    @property
    def is_zero(self):
        return not self._element

    @property
    def is_constant(self):
        return self._element.is_ground

    def constant_value(self):
        if not self.is_constant:
            raise exceptions.InvalidArgumentsException('Not a constant: {0}'.format(self.to_text()))
        return from_qq(self._element.coeff(1))

    def terms(self):

        """
        Returns:
            list: (Monomial, Fraction) pairs, ascending in monomial order.
        """

        return [(Monomial(self._space, exponents), from_qq(coefficient))
                for exponents, coefficient
                in sorted(self._element.items(), key=lambda item: order_key(item[0]))]

    def monomials(self):
        return [monomial for monomial, _ in self.terms()]

    def variables(self):
        used = set()
        for exponents in self._element.keys():
            used.update(variable for variable, exponent
                        in zip(self._space.variables, exponents) if exponent)
        return used

    def degrees(self, namespace=None):

        """
        The set of total degrees (optionally restricted to one namespace) over all terms.
        A polynomial is homogeneous in a namespace iff this set has a single element.
        """

        return set(monomial.degree(namespace) for monomial in self.monomials())

    def collect(self, namespace):

        """
        Groups terms by their exponent vector in one namespace.

        Returns:
            dict: exponent vector -> Poly of the remaining factors.
        """

        ring = self._space.ring
        window = self._space.namespace_slice(namespace)
        groups = {}
        for exponents, coefficient in self._element.items():
            key = exponents[window]
            rest = list(exponents)
            rest[window] = [0] * len(key)
            groups.setdefault(key, {})[tuple(rest)] = coefficient
        return dict((key, Poly(self._space, ring.from_dict(terms)))
                    for key, terms in groups.items())

    def coefficient(self, namespace, vector):
        return self.collect(namespace).get(tuple(vector), self._space.zero())

    def arith(self, other, kind):
        other = self._coerce(other)
        if kind == ADD:
            return Poly(self._space, self._element + other)
        if kind == SUB:
            return Poly(self._space, self._element - other)
        if kind == MUL:
            return Poly(self._space, self._element * other)
        raise exceptions.InvalidArgumentsException('Unknown arithmetic kind: {0}'.format(kind))

    def substitute(self, mapping):

        """
        Simultaneously replaces variables by polynomials or numbers. Variables not in the mapping
        are left alone, which makes this a ring homomorphism.

        Args:
            mapping (dict): VarId -> Poly or number.

        Returns:
            Poly: The image.
        """

        if not mapping:
            return self

        replacements = []
        for variable in sorted(mapping, key=self._space.position):
            replacements.append((self._space.generator(variable), self._coerce(mapping[variable])))

        return Poly(self._space, self._element.compose(replacements))

    def evaluate(self, namespace, values):

        """
        Substitutes the variables of a namespace, in space order, by the given values.
        """

        if namespace == Z:
            variables = [VarId(Z, edge) for edge in self._space.edges]
        elif namespace == U:
            variables = [VarId(U, node) for node in range(1, self._space.n_nodes + 1)]
        else:
            variables = [VarId(Y, (row, column))
                         for row in (1, 2) for column in range(1, self._space.n_nodes + 1)]
        if len(values) != len(variables):
            raise exceptions.InvalidArgumentsException(
                'Expected {0} values for namespace {1}, got {2}'.format(
                    len(variables), namespace, len(values)))
        return self.substitute(dict(zip(variables, values)))

    def content_and_normalize(self):

        """
        Splits off the rational content so that the remaining polynomial has coprime integer
        coefficients and a positive coefficient on its least monomial.

        Returns:
            tuple: (content, normalized) with content * normalized == self.

        Raises:
            ZeroPolynomialException: self is zero.
        """

        if self.is_zero:
            raise exceptions.ZeroPolynomialException('normalize')

        content = self._element.content()
        least = min(self._element.keys(), key=order_key)
        if self._element[least] < 0:
            content = -content

        return from_qq(content), Poly(self._space, self._element.quo_ground(content))

    def normalize(self):
        return self.content_and_normalize()[1]

    def divide_exact(self, other):

        """
        Returns:
            Poly: q with self == other * q, or None when other does not divide self.
        """

        other = self._coerce(other)
        if not other:
            raise exceptions.ZeroPolynomialException('divide by')

        quotient, remainder = self._element.div(other)
        if remainder:
            return None
        return Poly(self._space, quotient)

    def to_text(self):

        if self.is_zero:
            return '0'

        chunks = []
        for monomial, coefficient in self.terms():
            sign = '-' if coefficient < 0 else '+'
            magnitude = utils.format_rational(abs(coefficient))
            factors = monomial.to_text()
            if factors:
                chunks.append('{0} {1} * {2}'.format(sign, magnitude, factors))
            else:
                chunks.append('{0} {1}'.format(sign, magnitude))
        return ' '.join(chunks)

    @staticmethod
    def parse(space, text):

        """
        Parses the canonical text format written by to_text.

        For example:

            "+ 1 * z1 u2 u3 - 3/2 * u1^2 y1,2" --> z1*u2*u3 - 3/2*u1**2*y1_2

        Args:
            space (VariableSpace): The space of the result.
            text (str): The serialized polynomial.

        Returns:
            Poly: The polynomial.

        Raises:
            PolyParseException: The text is malformed or names unknown variables.
        """

        tokens = text.split()
        if tokens == ['0']:
            return space.zero()
        if not tokens:
            raise exceptions.PolyParseException(text, 'empty input')

        terms = {}
        position = 0
        while position < len(tokens):

            sign = tokens[position]
            if sign not in ('+', '-') or position + 1 >= len(tokens):
                raise exceptions.PolyParseException(text, "expected a sign followed by a "
                                                          "coefficient at token {0}".format(position))
            magnitude = tokens[position + 1]
            if not _COEFFICIENT.match(magnitude):
                raise exceptions.PolyParseException(text, 'bad coefficient {0!r}'.format(magnitude))
            position += 2

            vector = [0] * len(space.variables)
            if position < len(tokens) and tokens[position] == '*':
                position += 1
                start = position
                while position < len(tokens) and tokens[position] not in ('+', '-'):
                    vector[_parse_factor(space, text, tokens[position])] += \
                        _parse_exponent(tokens[position])
                    position += 1
                if position == start:
                    raise exceptions.PolyParseException(text, "dangling '*'")

            coefficient = utils.to_fraction(magnitude)
            if sign == '-':
                coefficient = -coefficient
            key = tuple(vector)
            terms[key] = terms.get(key, Fraction(0)) + coefficient

        return Poly(space, space.ring.from_dict(dict((key, to_qq(value))
                                                     for key, value in terms.items())))

    @staticmethod
    def from_expression(space, text):

        """
        Parses a sympy expression such as "u1*u2 - u4*u5" or "y1_1*y2_2 - 3/2". Line entries are
        written y{row}_{column}.
        """

        ring = space.ring
        local_dict = dict((str(symbol), symbol) for symbol in ring.symbols)
        try:
            expression = parse_expr(text, local_dict=local_dict)
            return Poly(space, ring.from_expr(expression))
        except (SympifyError, SyntaxError, TypeError, ValueError) as e:
            raise exceptions.PolyParseException(text, str(e) or type(e).__name__)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.space != self._space:
                raise exceptions.VariableSpaceMismatchException(self._space, other.space)
            return other.element
        return self._space.ring.ground_new(to_qq(other))

    def __add__(self, other):
        return self.arith(other, ADD)

    def __radd__(self, other):
        return self.arith(other, ADD)

    def __sub__(self, other):
        return self.arith(other, SUB)

    def __rsub__(self, other):
        return Poly(self._space, self._coerce(other) - self._element)

    def __mul__(self, other):
        return self.arith(other, MUL)

    def __rmul__(self, other):
        return self.arith(other, MUL)

    def __neg__(self):
        return Poly(self._space, -self._element)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise exceptions.InvalidArgumentsException('Exponent must be a non negative integer')
        return Poly(self._space, self._element ** exponent)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._space == other.space and self._element == other.element
        try:
            return self._element == self._coerce(other)
        except exceptions.InvalidArgumentsException:
            return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._space, frozenset(self._element.items())))

    def __repr__(self):
        return 'Poly({0})'.format(self.to_text())

    def __str__(self):
        return self.to_text()


def _parse_factor(space, text, token):
    match = _FACTOR.match(token)
    if not match:
        raise exceptions.PolyParseException(text, 'bad factor {0!r}'.format(token))
    if match.group('z'):
        variable = VarId(Z, int(match.group('z')))
    elif match.group('u'):
        variable = VarId(U, int(match.group('u')))
    else:
        variable = VarId(Y, (int(match.group('row')), int(match.group('col'))))
    try:
        return space.position(variable)
    except exceptions.UnknownVariableException as e:
        raise exceptions.PolyParseException(text, str(e))


def _parse_exponent(token):
    match = _FACTOR.match(token)
    return int(match.group('exp') or 1)


def poly_arith(first, second, kind):
    return first.arith(second, kind)


def poly_substitute(poly, mapping):
    return poly.substitute(mapping)


def poly_content_and_normalize(poly):
    return poly.content_and_normalize()


def poly_divide_exact(dividend, divisor):
    return dividend.divide_exact(divisor)
