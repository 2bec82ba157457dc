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

import networkx as nx
from boltons.cacheutils import cachedproperty

from chowq.api import exceptions
from chowq.api import logger
from chowq.api import utils
from chowq.api.core.poly import VariableSpace
from chowq.api.model.model import ValidationReport

BLACK = 'black'
WHITE = 'white'

CONNECTED = 'connected'
SHORT_CYCLES = 'no oriented cycles of length <= 2'
BALANCED = 'balanced nodes'
CELL_COUNT = 'as many black as white cells'
CELL_CYCLES = 'cells are oriented cycles'

CONDITION1_CHECKS = (CONNECTED, SHORT_CYCLES, BALANCED, CELL_COUNT, CELL_CYCLES)


class Edge(object):

    def __init__(self, edge_id, s, t, black, white):
        self.id = edge_id
        self.s = s
        self.t = t
        self.black = black
        self.white = white

    def to_dict(self):
        return {'id': self.id, 's': self.s, 't': self.t, 'black': self.black, 'white': self.white}

    def __eq__(self, other):
        return isinstance(other, Edge) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.id, self.s, self.t, self.black, self.white))

    def __repr__(self):
        return 'Edge({id}: {s}->{t}, {black}, {white})'.format(**self.to_dict())


class Quiver(object):

    """
    A quiver with superpotential: nodes 1..N, arrows s(e) -> t(e), and every arrow bounding
    exactly one black and one white 2-cell. Cells are inferred from the edge labels.

    Construction only checks that the data is well formed (unique integer edge ids, nodes in
    range, black and white labels disjoint). Condition 1 is checked by check_condition1.

    Args:
        n_nodes (int): N.
        edges (list): Edge instances.
    """

    def __init__(self, n_nodes, edges):

        edges = sorted(edges, key=lambda edge: edge.id)

        if not edges:
            raise exceptions.InvalidArgumentsException('A quiver needs at least one edge')

        ids = [edge.id for edge in edges]
        if len(set(ids)) != len(ids):
            raise exceptions.InvalidArgumentsException('Edge ids are not unique: {0}'.format(ids))

        for edge in edges:
            for node in (edge.s, edge.t):
                if not isinstance(node, int) or not 1 <= node <= n_nodes:
                    raise exceptions.InvalidArgumentsException(
                        'Edge {0} refers to node {1} outside 1..{2}'.format(edge.id, node, n_nodes))

        black = set(edge.black for edge in edges)
        white = set(edge.white for edge in edges)
        if black & white:
            raise exceptions.InvalidArgumentsException(
                'Cells cannot be both black and white: {0}'.format(
                    sorted(black & white, key=utils.natural_key)))

        self._n_nodes = n_nodes
        self._edges = tuple(edges)
        self._by_id = dict((edge.id, edge) for edge in edges)
        self._black_cells = tuple(sorted(black, key=utils.natural_key))
        self._white_cells = tuple(sorted(white, key=utils.natural_key))
        self._logger = logger.Logger(__name__)
        self._log_ctx = {'nodes': n_nodes, 'edges': len(edges)}

        # a VariableSpace validates the edge ids
        self._space = VariableSpace(ids, n_nodes)

    @property
    def n_nodes(self):
        return self._n_nodes

    @property
    def edges(self):
        return self._edges

    @property
    def edge_ids(self):
        return tuple(edge.id for edge in self._edges)

    @property
    def black_cells(self):
        return self._black_cells

    @property
    def white_cells(self):
        return self._white_cells

    @property
    def variable_space(self):
        return self._space

    def edge(self, edge_id):
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise exceptions.UnknownEdgeVariableException(edge_id, self._space)

    def has_edge(self, edge_id):
        return edge_id in self._by_id

    def color(self, cell):
        if cell in self._black_cells:
            return BLACK
        if cell in self._white_cells:
            return WHITE
        raise exceptions.InvalidArgumentsException('Unknown cell: {0}'.format(cell))

    def cell_edges(self, cell):
        color = self.color(cell)
        return [edge for edge in self._edges if getattr(edge, color) == cell]

    def edges_between(self, black, white):
        return [edge for edge in self._edges if edge.black == black and edge.white == white]

    @cachedproperty
    def graph(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(1, self._n_nodes + 1))
        for edge in self._edges:
            graph.add_edge(edge.s, edge.t, key=edge.id)
        return graph

    def replace_edge(self, edge_id, **changes):

        """
        A copy of this quiver with some attributes of one edge replaced.

        For example, reversing edge 1:

            quiver.replace_edge(1, s=quiver.edge(1).t, t=quiver.edge(1).s)
        """

        edges = []
        for edge in self._edges:
            if edge.id == edge_id:
                data = edge.to_dict()
                data.update(changes)
                edge = Edge(edge_id=data['id'], s=data['s'], t=data['t'],
                            black=data['black'], white=data['white'])
            edges.append(edge)
        return Quiver(self._n_nodes, edges)

    def _debug(self, message, **kwargs):
        kwargs = dict(kwargs)
        kwargs.update(self._log_ctx)
        self._logger.debug(message, **kwargs)

    def __eq__(self, other):
        return isinstance(other, Quiver) and \
            self._n_nodes == other.n_nodes and self._edges == other.edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._n_nodes, self._edges))


def cell_cycle(quiver, cell):

    """
    Orders the edges of a cell into the oriented cycle e_1, ..., e_r with t(e_i) = s(e_i+1) and
    t(e_r) = s(e_1), rotated to start at the smallest edge id.

    Args:
        quiver (Quiver): The quiver.
        cell: A black or white cell id.

    Returns:
        list: Edge ids in cycle order.

    Raises:
        InvalidArgumentsException: The edges of the cell do not close into a single oriented cycle.
    """

    edges = quiver.cell_edges(cell)

    subgraph = nx.MultiDiGraph()
    for edge in edges:
        subgraph.add_edge(edge.s, edge.t, key=edge.id)

    if not nx.is_eulerian(subgraph):
        raise exceptions.InvalidArgumentsException(
            'The edges {0} of cell {1} do not form a single oriented cycle'.format(
                [edge.id for edge in edges], cell))

    first = edges[0]
    circuit = [key for _, _, key in nx.eulerian_circuit(subgraph, source=first.s, keys=True)]
    start = circuit.index(first.id)
    return circuit[start:] + circuit[:start]


def cycle_nodes(quiver, cell):

    """
    The nodes visited by the cycle of a cell, starting at the source of its smallest edge.
    """

    return [quiver.edge(edge_id).s for edge_id in cell_cycle(quiver, cell)]


def check_condition1(quiver):

    """
    Validates Condition 1: a connected quiver without loops and 2-cycles, balanced at every node,
    with as many black as white cells, each cell an oriented cycle.

    Returns:
        ValidationReport: One entry per violated item, naming the offending nodes, edges or cells.
    """

    report = ValidationReport(checks=CONDITION1_CHECKS)
    graph = quiver.graph

    if not nx.is_weakly_connected(graph):
        components = sorted(sorted(component) for component in nx.weakly_connected_components(graph))
        report.add(CONNECTED, 'nodes',
                   'the quiver has {0} components: {1}'.format(len(components), components))

    for edge in quiver.edges:
        if edge.s == edge.t:
            report.add(SHORT_CYCLES, 'edge {0}'.format(edge.id),
                       'loop at node {0}'.format(edge.s))

    seen = set()
    for edge in quiver.edges:
        for other in quiver.edges:
            pair = tuple(sorted((edge.id, other.id)))
            if edge.s == other.t and edge.t == other.s and edge.s != edge.t and pair not in seen:
                seen.add(pair)
                report.add(SHORT_CYCLES, 'edges {0}, {1}'.format(*pair),
                           'antiparallel arrows between nodes {0} and {1}'.format(edge.s, edge.t))

    for node in range(1, quiver.n_nodes + 1):
        incoming = graph.in_degree(node)
        outgoing = graph.out_degree(node)
        if incoming != outgoing:
            report.add(BALANCED, 'node {0}'.format(node),
                       '{0} incoming but {1} outgoing arrows'.format(incoming, outgoing))

    if len(quiver.black_cells) != len(quiver.white_cells):
        report.add(CELL_COUNT, 'cells', '{0} black but {1} white cells'.format(
            len(quiver.black_cells), len(quiver.white_cells)))

    for cell in quiver.black_cells + quiver.white_cells:
        try:
            cell_cycle(quiver, cell)
        except exceptions.InvalidArgumentsException as e:
            report.add(CELL_CYCLES, '{0} cell {1}'.format(quiver.color(cell), cell), str(e))

    # pylint: disable=protected-access
    quiver._debug('Checked condition 1', violations=len(report.violations))
    return report


def euler_characteristic(quiver):
    return quiver.n_nodes - len(quiver.edges) + len(quiver.black_cells) + len(quiver.white_cells)
