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

from fractions import Fraction

import pytest

from chowq.api import exceptions
from chowq.api.core.poly import U
from chowq.api.core.poly import VarId
from chowq.api.core.poly import VariableSpace
from chowq.api.core.poly import Z
from chowq.api.core.poly import ADD
from chowq.api.core.poly import MUL
from chowq.api.core.poly import SUB
from chowq.api.core.poly import Poly
from chowq.api.core.poly import poly_arith
from chowq.api.core.poly import poly_content_and_normalize
from chowq.api.core.poly import poly_divide_exact
from chowq.api.core.poly import poly_substitute
from chowq.tests.resources import golden


@pytest.fixture(name='space')
def _space():
    return VariableSpace(edges=[1, 2, 3], n_nodes=3)


def test_variable_space_order(space):

    names = [variable.name for variable in space.variables]

    assert names == ['z1', 'z2', 'z3', 'u1', 'u2', 'u3',
                     'y1,1', 'y1,2', 'y1,3', 'y2,1', 'y2,2', 'y2,3']


@pytest.mark.parametrize("edges,n_nodes", [([0], 3), (['e1'], 3), ([1], 0)])
def test_variable_space_invalid(edges, n_nodes):

    with pytest.raises(exceptions.InvalidArgumentsException):
        VariableSpace(edges=edges, n_nodes=n_nodes)


def test_text_order(space):

    poly = space.u(2) + space.u(1) + space.z(1) + space.u(1) ** 2

    assert poly.to_text() == '+ 1 * z1 + 1 * u1 + 1 * u1^2 + 1 * u2'


def test_monomial_order(space):

    # the later variable dominates regardless of total degree
    poly = space.u(2) + space.u(1) ** 2 + space.z(3) * space.u(1)

    assert poly.to_text() == '+ 1 * z3 u1 + 1 * u1^2 + 1 * u2'


def test_constant_text(space):

    poly = Poly.from_expression(space, 'u1*u2 - 3/2')

    assert poly.to_text() == '- 3/2 + 1 * u1 u2'
    assert Poly.parse(space, poly.to_text()) == poly
    assert space.zero().to_text() == '0'
    assert Poly.parse(space, '0').is_zero


def test_y_text(space):

    poly = space.y(1, 2) * space.y(2, 3)

    assert poly.to_text() == '+ 1 * y1,2 y2,3'
    assert Poly.parse(space, '+ 1 * y1,2 y2,3') == poly


def test_parse_golden(dp3):

    text = golden('det_dp3')
    poly = Poly.parse(dp3.space, text)

    assert poly == dp3.det_standard
    assert poly.to_text() == text


@pytest.mark.parametrize("text", ['', '1 * u1', '+ x * u1', '+ 1 *', '+ 1 * u9', '+ 1 * w1',
                                  '+ 1 * u1 +'])
def test_parse_malformed(space, text):

    with pytest.raises(exceptions.PolyParseException):
        Poly.parse(space, text)


def test_from_expression_unknown_symbol(space):

    with pytest.raises(exceptions.PolyParseException):
        Poly.from_expression(space, 'w1 * u1')


def test_arithmetic(space):

    u1 = space.u(1)
    u2 = space.u(2)

    assert (u1 + u2) * (u1 - u2) == u1 ** 2 - u2 ** 2
    assert 2 * u1 - u1 == u1
    assert 1 - u1 == -(u1 - 1)
    assert space.constant(3) == 3
    assert u1 != Fraction(1, 2)
    assert u1 != 0.5


def test_negative_power(space):

    with pytest.raises(exceptions.InvalidArgumentsException):
        _ = space.u(1) ** -1


def test_space_mismatch(space):

    other = VariableSpace(edges=[1], n_nodes=3)

    with pytest.raises(exceptions.VariableSpaceMismatchException):
        _ = space.u(1) + other.u(1)


def test_collect_and_coefficient(space):

    poly = space.z(1) * space.u(1) * space.u(2) + \
        space.z(2) * space.u(1) * space.u(2) + \
        space.z(3) * space.u(3) ** 2

    collected = poly.collect(U)

    assert set(collected) == {(1, 1, 0), (0, 0, 2)}
    assert collected[(1, 1, 0)] == space.z(1) + space.z(2)
    assert poly.coefficient(U, (0, 0, 2)) == space.z(3)
    assert poly.coefficient(U, (2, 0, 0)).is_zero
    assert poly.degrees(U) == {2}
    assert poly.degrees(Z) == {1}
    assert poly.degrees() == {3}


def test_variables(space):

    poly = space.z(2) * space.u(3) + space.u(3)

    assert poly.variables() == {VarId(Z, 2), VarId(U, 3)}


def test_substitute(space):

    poly = space.z(1) * space.u(1) * space.u(2)

    image = poly.substitute({VarId(Z, 1): 2, VarId(U, 1): space.u(2)})

    assert image == 2 * space.u(2) ** 2
    assert poly.substitute({}) is poly


def test_substitute_is_simultaneous(space):

    poly = space.u(1) - space.u(2)

    swapped = poly.substitute({VarId(U, 1): space.u(2), VarId(U, 2): space.u(1)})

    assert swapped == space.u(2) - space.u(1)


def test_evaluate(space):

    poly = space.z(1) * space.u(1) * space.u(2) + space.z(2) * space.u(3)

    assert poly.evaluate(U, [1, 2, Fraction(1, 2)]) == 2 * space.z(1) + Fraction(1, 2) * space.z(2)

    with pytest.raises(exceptions.InvalidArgumentsException):
        poly.evaluate(U, [1, 2])


@pytest.mark.parametrize("expression,content,normalized", [
    ('6*u1 - 4*u2', 2, '+ 3 * u1 - 2 * u2'),
    ('-2*u1 + 4*u2', -2, '+ 1 * u1 - 2 * u2'),
    ('u1/2 + u2/3', Fraction(1, 6), '+ 3 * u1 + 2 * u2'),
    ('-7', -7, '+ 1')
])
def test_content_and_normalize(space, expression, content, normalized):

    poly = Poly.from_expression(space, expression)

    actual_content, actual = poly.content_and_normalize()

    assert actual_content == content
    assert actual.to_text() == normalized
    assert actual * actual_content == poly


def test_normalize_zero(space):

    with pytest.raises(exceptions.ZeroPolynomialException):
        space.zero().normalize()


def test_divide_exact(space):

    u1 = space.u(1)
    u2 = space.u(2)

    assert (u1 ** 2 - u2 ** 2).divide_exact(u1 - u2) == u1 + u2
    assert (u1 ** 2 + u2 ** 2).divide_exact(u1 - u2) is None

    with pytest.raises(exceptions.ZeroPolynomialException):
        u1.divide_exact(space.zero())


def test_constant_value(space):

    assert space.constant('3/4').constant_value() == Fraction(3, 4)
    assert space.zero().constant_value() == 0

    with pytest.raises(exceptions.InvalidArgumentsException):
        space.u(1).constant_value()


def _random_poly(rng, space):
    poly = space.zero()
    for _ in range(4):
        term = space.constant(rng.randint(-5, 5))
        for edge in space.edges:
            term = term * space.z(edge) ** rng.randint(0, 2)
        for node in range(1, space.n_nodes + 1):
            term = term * space.u(node) ** rng.randint(0, 2)
        poly = poly + term
    return poly


def test_functional_operations(space):

    a = space.u(1) + space.u(2)
    b = space.u(1) - space.u(2)

    assert poly_arith(a, b, ADD) == space.u(1) * 2
    assert poly_arith(a, b, SUB) == space.u(2) * 2
    assert poly_arith(a, b, MUL) == space.u(1) ** 2 - space.u(2) ** 2
    assert poly_divide_exact(poly_arith(a, b, MUL), b) == a
    assert poly_content_and_normalize(a * 4) == (4, a)
    assert poly_substitute(a, {VarId(U, 2): space.z(1)}) == space.u(1) + space.z(1)


def test_substitute_commutes_with_arithmetic(rng, space):

    mapping = {VarId(Z, 1): space.u(1) + space.u(2), VarId(U, 3): space.z(2) * 2}

    for _ in range(20):
        a = _random_poly(rng, space)
        b = _random_poly(rng, space)
        for kind in (ADD, SUB, MUL):
            assert poly_substitute(poly_arith(a, b, kind), mapping) == \
                poly_arith(poly_substitute(a, mapping), poly_substitute(b, mapping), kind)


def test_ring_axioms(rng, dp3):

    space = dp3.space

    for _ in range(15):
        a = _random_poly(rng, space)
        b = _random_poly(rng, space)
        c = _random_poly(rng, space)

        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a + space.zero() == a
        assert a * space.one() == a
        assert (a - a).is_zero
