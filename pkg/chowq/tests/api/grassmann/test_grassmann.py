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
from itertools import combinations

import pytest

from chowq.api import exceptions
from chowq.api.document import ProblemDocument
from chowq.api.core.poly import VarId
from chowq.api.core.poly import VariableSpace
from chowq.api.core.poly import Z
from chowq.api.grassmann.grassmann import LatticePoint
from chowq.api.grassmann.grassmann import Line
from chowq.api.grassmann.grassmann import PlueckerElement
from chowq.api.grassmann.grassmann import bst_hom
from chowq.api.grassmann.grassmann import eval_pluecker_at
from chowq.api.grassmann.grassmann import line_through
from chowq.api.grassmann.grassmann import pluecker_coords
from chowq.api.grassmann.grassmann import pluecker_relation
from chowq.api.grassmann.grassmann import pluecker_relation_check
from chowq.api.grassmann.grassmann import pluecker_var
from chowq.api.grassmann.grassmann import point_on_line
from chowq.api.grassmann.grassmann import y_substitution


@pytest.fixture(name='space')
def _space():
    return VariableSpace(edges=[1], n_nodes=4)


def test_pluecker_var(space):

    assert pluecker_var(space, 1, 2) == space.y(1, 1) * space.y(2, 2) - space.y(2, 1) * space.y(1, 2)
    assert pluecker_var(space, 3, 1) == -pluecker_var(space, 1, 3)
    assert pluecker_var(space, 2, 2).is_zero


@pytest.mark.parametrize("k,m", [(0, 1), (1, 5), ('1', 2)])
def test_pluecker_var_out_of_range(space, k, m):

    with pytest.raises(exceptions.InvalidArgumentsException):
        pluecker_var(space, k, m)


@pytest.mark.parametrize("n_nodes", [4, 5, 6, 7, 8])
def test_pluecker_relations(n_nodes):

    space = VariableSpace(edges=[1], n_nodes=n_nodes)

    for i, j, k, m in combinations(range(1, n_nodes + 1), 4):
        assert pluecker_relation_check(space, i, j, k, m), (i, j, k, m)


def test_pluecker_relations_any_order(space):

    assert pluecker_relation_check(space, 3, 1, 4, 2)
    assert pluecker_relation_check(space, 2, 2, 1, 3)


def test_pluecker_degree(space):

    element = PlueckerElement.of(pluecker_var(space, 1, 2) * pluecker_var(space, 3, 4))

    assert element.pluecker_degree == 2

    with pytest.raises(exceptions.InvalidArgumentsException):
        _ = PlueckerElement.of(pluecker_var(space, 1, 2) + space.y(1, 1)).pluecker_degree


def test_y_substitution(dp3_quiver):

    space = dp3_quiver.variable_space

    image = y_substitution(dp3_quiver, space.z(1) * space.u(1) + space.z(7))

    assert image == pluecker_var(space, 2, 3) * space.u(1) + pluecker_var(space, 6, 2)


def test_y_substitution_unknown_edge(dp3_quiver):

    space = VariableSpace(edges=list(range(1, 13)) + [99], n_nodes=6)

    with pytest.raises(exceptions.UnknownEdgeVariableException):
        y_substitution(dp3_quiver, space.z(99))


@pytest.mark.parametrize("rows,error", [
    ([[1, 2, 3], [2, 4, 6]], exceptions.RankDeficientException),
    ([[0, 0, 0], [0, 1, 0]], exceptions.RankDeficientException),
    ([[1, 0, 0], [0, 1]], exceptions.InvalidArgumentsException),
    ([[1, 0, 0]], exceptions.InvalidArgumentsException)
])
def test_line_invalid(rows, error):

    with pytest.raises(error):
        Line(rows)


def test_pluecker_coords():

    line = Line([[1, 0, 0], [0, 1, 0]])

    assert pluecker_coords(line) == {(1, 2): 1, (1, 3): 0, (2, 3): 0}


def test_transform_scales_coordinates():

    line = Line([[1, 2, 0, -1], [0, 1, 3, 1]])

    transformed = line.transform([[2, 1], [0, 3]])

    for key, value in pluecker_coords(line).items():
        assert pluecker_coords(transformed)[key] == 6 * value


def test_lattice_point(dp3_lattice, dp3_quiver):

    point = LatticePoint(dp3_lattice)

    for edge in dp3_quiver.edges:
        assert point.minor(edge.s, edge.t) == 1, edge
    assert point.minor(1, 4) == 0


def test_point_on_line():

    line = Line([[1, 0, 0], [0, 1, 0]])

    assert point_on_line(line, (1, 1, 0))
    assert line.contains((Fraction(1, 2), 3, 0))
    assert not point_on_line(line, (1, 1, 1))

    with pytest.raises(exceptions.InvalidArgumentsException):
        point_on_line(line, (0, 0, 0))

    with pytest.raises(exceptions.InvalidArgumentsException):
        point_on_line(line, (1, 1))


def test_line_through():

    assert line_through((1, 2, 3), (1, 0, 0)).contains((2, 2, 3))

    with pytest.raises(exceptions.RankDeficientException):
        line_through((1, 2, 3), (2, 4, 6))


def test_bst_hom(dp3, dp3_lattice, dp3_quiver):

    ones = dict((VarId(Z, edge_id), 1) for edge_id in dp3_quiver.edge_ids)

    assert bst_hom(dp3_lattice, dp3_quiver, dp3.det_complementary) == \
        dp3.det_complementary.substitute(ones)


def test_eval_pluecker_at(space):

    element = PlueckerElement.of(pluecker_var(space, 1, 2))

    assert eval_pluecker_at(element, Line([[1, 0, 0, 0], [0, 1, 0, 0]])) == 1

    with pytest.raises(exceptions.InvalidArgumentsException):
        eval_pluecker_at(element, Line([[1, 0, 0], [0, 1, 0]]))


def _random_fraction(rng):
    return Fraction(rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]), rng.randint(1, 5))


def _random_rank2_line(rng, n):
    while True:
        try:
            return Line([[_random_fraction(rng) for _ in range(n)] for _ in range(2)])
        except exceptions.RankDeficientException:
            continue


def _random_y_product(rng, space):
    indices = list(range(1, space.n_nodes + 1))
    element = space.constant(rng.randint(1, 3))
    for _ in range(rng.randint(1, 3)):
        k, m = rng.sample(indices, 2)
        element = element * pluecker_var(space, k, m)
    return element


def test_substitution_is_injective(rng):

    space = VariableSpace(edges=[1], n_nodes=6)
    lines = [_random_rank2_line(rng, 6) for _ in range(25)]

    for _ in range(10):
        first = _random_y_product(rng, space) + _random_y_product(rng, space)
        i, j, k, m = rng.sample(range(1, 7), 4)
        rewritten = first + pluecker_relation(space, i, j, k, m) * pluecker_var(space, i, j)
        different = first + _random_y_product(rng, space)

        for second in (rewritten, different):
            agree = all(eval_pluecker_at(PlueckerElement.of(first), line) ==
                        eval_pluecker_at(PlueckerElement.of(second), line) for line in lines)
            assert (first == second) == agree

        assert first == rewritten


def _random_z_poly(rng, quiver):
    space = quiver.variable_space
    poly = space.zero()
    for _ in range(3):
        term = space.constant(rng.randint(-3, 3))
        for edge_id in rng.sample(quiver.edge_ids, 2):
            term = term * space.z(edge_id) ** rng.randint(1, 2)
        term = term * space.u(rng.randint(1, space.n_nodes))
        poly = poly + term
    return poly


@pytest.mark.parametrize("name", ['dp3', 'triangle'])
def test_lattice_point_route_independence(name, rng):

    document = ProblemDocument.fixture(name)
    lattice = document.lattice()
    quiver = document.quiver()

    for _ in range(10):
        poly = _random_z_poly(rng, quiver)
        assert eval_pluecker_at(y_substitution(quiver, poly), LatticePoint(lattice)) == \
            bst_hom(lattice, quiver, poly)


def test_combination_on_line(rng):

    for _ in range(25):
        u = [rng.randint(-5, 5) for _ in range(5)]
        v = [rng.randint(-5, 5) for _ in range(5)]
        try:
            line = line_through(u, v)
        except exceptions.RankDeficientException:
            continue

        alpha = _random_fraction(rng)
        beta = _random_fraction(rng)

        assert point_on_line(line, [alpha * x + beta * y for x, y in zip(u, v)])
