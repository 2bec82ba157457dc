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

import pytest

from chowq.api import exceptions
from chowq.api.quiver.quiver import BALANCED
from chowq.api.quiver.quiver import BLACK
from chowq.api.quiver.quiver import CELL_COUNT
from chowq.api.quiver.quiver import CELL_CYCLES
from chowq.api.quiver.quiver import CONDITION1_CHECKS
from chowq.api.quiver.quiver import CONNECTED
from chowq.api.quiver.quiver import SHORT_CYCLES
from chowq.api.quiver.quiver import WHITE
from chowq.api.quiver.quiver import Edge
from chowq.api.quiver.quiver import Quiver
from chowq.api.quiver.quiver import cell_cycle
from chowq.api.quiver.quiver import check_condition1
from chowq.api.quiver.quiver import cycle_nodes
from chowq.api.quiver.quiver import euler_characteristic


def _triangle_edges(black='b1', white='w1'):
    return [Edge(1, 1, 2, black, white),
            Edge(2, 2, 3, black, white),
            Edge(3, 3, 1, black, white)]


def test_cells(dp3_quiver):

    assert dp3_quiver.black_cells == ('b1', 'b2', 'b3')
    assert dp3_quiver.white_cells == ('w1', 'w2', 'w3')
    assert dp3_quiver.color('b2') == BLACK
    assert dp3_quiver.color('w3') == WHITE
    assert [edge.id for edge in dp3_quiver.edges_between('b1', 'w1')] == [1, 2]
    assert [edge.id for edge in dp3_quiver.cell_edges('b2')] == [7, 8, 9]


def test_unknown_cell(dp3_quiver):

    with pytest.raises(exceptions.InvalidArgumentsException):
        dp3_quiver.color('b4')


def test_unknown_edge(dp3_quiver):

    assert not dp3_quiver.has_edge(99)

    with pytest.raises(exceptions.UnknownEdgeVariableException):
        dp3_quiver.edge(99)


@pytest.mark.parametrize("n_nodes,edges", [
    (3, []),
    (3, _triangle_edges() + [Edge(3, 1, 3, 'b2', 'w2')]),
    (2, _triangle_edges()),
    (3, _triangle_edges(black='c1', white='c1'))
])
def test_malformed(n_nodes, edges):

    with pytest.raises(exceptions.InvalidArgumentsException):
        Quiver(n_nodes, edges)


def test_cell_cycle(dp3_quiver):

    assert cell_cycle(dp3_quiver, 'b1') == [1, 5, 4, 2, 6, 3]
    assert cell_cycle(dp3_quiver, 'b2') == [7, 8, 9]
    assert cell_cycle(dp3_quiver, 'w1') == [1, 10, 2, 7]
    assert cycle_nodes(dp3_quiver, 'b1') == [2, 3, 4, 5, 6, 1]


def test_condition1(dp3_quiver, triangle_quiver):

    for quiver in (dp3_quiver, triangle_quiver):
        report = check_condition1(quiver)
        assert report.ok
        assert report.checks == list(CONDITION1_CHECKS)


def test_condition1_reversed_edge(dp3_quiver):

    reversed_quiver = dp3_quiver.replace_edge(1, s=3, t=2)

    report = check_condition1(reversed_quiver)

    assert not report.ok
    assert [violation.subject for violation in report.violations_of(BALANCED)] == ['node 2',
                                                                                   'node 3']
    assert [violation.subject for violation in report.violations_of(CELL_CYCLES)] == [
        'black cell b1', 'white cell w1']
    assert report.passed(CONNECTED)
    assert report.passed(CELL_COUNT)


def test_condition1_short_cycles():

    quiver = Quiver(3, [Edge(1, 1, 2, 'b1', 'w1'),
                        Edge(2, 2, 1, 'b1', 'w1'),
                        Edge(3, 3, 3, 'b2', 'w2')])

    subjects = [violation.subject for violation in check_condition1(quiver).violations_of(
        SHORT_CYCLES)]

    assert 'edge 3' in subjects
    assert 'edges 1, 2' in subjects


def test_condition1_disconnected():

    report = check_condition1(Quiver(4, _triangle_edges()))

    assert report.violations_of(CONNECTED)
    assert report.passed(BALANCED)


def test_condition1_cell_count():

    edges = _triangle_edges()[:2] + [Edge(3, 3, 1, 'b2', 'w1')]

    report = check_condition1(Quiver(3, edges))

    assert report.violations_of(CELL_COUNT)
    assert report.violations_of(CELL_CYCLES)


def test_euler_characteristic(dp3_quiver, triangle_quiver):

    assert euler_characteristic(dp3_quiver) == 0
    assert euler_characteristic(triangle_quiver) == 2


def test_replace_edge(dp3_quiver):

    relabeled = dp3_quiver.replace_edge(7, black='b3')

    assert relabeled.edge(7).black == 'b3'
    assert dp3_quiver.edge(7).black == 'b2'
    assert relabeled != dp3_quiver


def test_variable_space(dp3_quiver):

    space = dp3_quiver.variable_space

    assert space.edges == tuple(range(1, 13))
    assert space.n_nodes == 6
