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

from chowq.api import exceptions
from chowq.api import logger
from chowq.api import utils
from chowq.api.lattice.lattice import Weight
from chowq.api.lattice.lattice import hbar
from chowq.api.model.model import ValidationReport
from chowq.api.quiver.quiver import BLACK

EDGE_CONGRUENCES = 'edge congruences'
SUM_CONGRUENCE = 'sum congruence'
K_LADDER = 'k ladder'

CONDITION2_CHECKS = (EDGE_CONGRUENCES, SUM_CONGRUENCE, K_LADDER)

SUM = 'sum'

_logger = logger.Logger(__name__)


class EpsilonAssignment(object):

    """
    Weights eps_b for black cells and eps_w for white cells. Condition 2 asks for
    eps_b(e) - eps_w(e) = a_s(e) + a_t(e) on every edge and sum(eps_b) - sum(eps_w) = a0, all
    modulo L.

    Args:
        eps_black (dict): black cell -> Weight.
        eps_white (dict): white cell -> Weight.
        k (:int, optional): The common hbar of the black weights. Computed when omitted.
    """

    def __init__(self, eps_black, eps_white, k=None):
        self.eps_black = dict(eps_black)
        self.eps_white = dict(eps_white)
        if k is None and self.eps_black:
            k = hbar(self.eps_black[sorted(self.eps_black, key=utils.natural_key)[0]])
        self.k = k

    def eps(self, cell):
        if cell in self.eps_black:
            return self.eps_black[cell]
        return self.eps_white[cell]

    def shift(self, weight):
        return EpsilonAssignment(
            eps_black=dict((cell, eps + weight) for cell, eps in self.eps_black.items()),
            eps_white=dict((cell, eps + weight) for cell, eps in self.eps_white.items()),
            k=None if self.k is None else self.k + hbar(weight))

    def to_dict(self):
        return {
            'black': dict((str(cell), list(eps.raw)) for cell, eps in self.eps_black.items()),
            'white': dict((str(cell), list(eps.raw)) for cell, eps in self.eps_white.items()),
            'k': self.k
        }

    def __eq__(self, other):
        return isinstance(other, EpsilonAssignment) and \
            self.eps_black == other.eps_black and \
            self.eps_white == other.eps_white and \
            self.k == other.k

    def __ne__(self, other):
        return not self.__eq__(other)


# pylint: disable=too-few-public-methods
class Infeasibility(object):

    """
    Certificate that Condition 2 has no solution.

    Args:
        certificate: The id of the edge whose congruence fails, or SUM.
        message (str): Human readable explanation.
        assignment (EpsilonAssignment): The propagated spanning tree values the failure refers to.
    """

    def __init__(self, certificate, message, assignment):
        self.certificate = certificate
        self.message = message
        self.assignment = assignment

    def to_dict(self):
        return {'certificate': self.certificate, 'message': self.message}


def edge_weight(lattice, edge):
    return Weight.unit(lattice.n, edge.s) + Weight.unit(lattice.n, edge.t)


def edge_holds(lattice, edge, assignment):
    difference = assignment.eps(edge.black) - assignment.eps(edge.white) - edge_weight(lattice, edge)
    return lattice.contains(difference.raw)


def sum_holds(lattice, assignment):
    total = Weight.zero(lattice.n)
    for eps in assignment.eps_black.values():
        total = total + eps
    for eps in assignment.eps_white.values():
        total = total - eps
    return lattice.contains((total - lattice.a0.weight).raw)


def cell_graph(quiver):

    """
    The bipartite cell adjacency multigraph: one vertex per 2-cell and one link, keyed by the
    edge id, joining b(e) and w(e) for every edge e.
    """

    graph = nx.MultiGraph()
    graph.add_nodes_from(quiver.black_cells)
    graph.add_nodes_from(quiver.white_cells)
    for edge in quiver.edges:
        graph.add_edge(edge.black, edge.white, key=edge.id)
    return graph


def solve_epsilons(lattice, quiver):

    """
    Solves Condition 2.

    Starting from the smallest black cell with the zero weight, values are propagated along a
    breadth first spanning tree of the cell graph (eps_b = eps_w + a_s + a_t), then every link and
    the global sum are checked modulo L. Solutions are unique up to a common shift, this returns
    the one whose root is zero. Components of the cell graph not reached from the root are rooted
    at their smallest cell the same way.

    Returns:
        EpsilonAssignment or Infeasibility.
    """

    graph = cell_graph(quiver)
    values = {}

    roots = list(quiver.black_cells) + list(quiver.white_cells)
    for root in roots:
        if root in values:
            continue
        if values:
            _logger.warn('Cell graph is not connected, rooting another component', root=root)
        values[root] = Weight.zero(lattice.n)
        for parent, child in nx.bfs_edges(graph, root):
            edge = quiver.edge(min(graph[parent][child]))
            step = edge_weight(lattice, edge)
            if quiver.color(child) == BLACK:
                values[child] = values[parent] + step
            else:
                values[child] = values[parent] - step

    assignment = EpsilonAssignment(
        eps_black=dict((cell, values[cell]) for cell in quiver.black_cells),
        eps_white=dict((cell, values[cell]) for cell in quiver.white_cells))

    for edge in quiver.edges:
        if not edge_holds(lattice, edge, assignment):
            _logger.debug('Edge congruence fails', edge=edge.id)
            return Infeasibility(
                certificate=edge.id,
                message='edge {0} ({1}->{2}): eps_{3} - eps_{4} is not a_{1} + a_{2} '
                        'modulo L'.format(edge.id, edge.s, edge.t, edge.black, edge.white),
                assignment=assignment)

    if not sum_holds(lattice, assignment):
        return Infeasibility(certificate=SUM,
                             message='sum of black minus sum of white weights is not a0 modulo L',
                             assignment=assignment)

    _logger.debug('Solved condition 2', cells=len(values), k=assignment.k)
    return assignment


def check_condition2(lattice, quiver, eps):

    """
    Verifies an assignment against Condition 2 and the k ladder hbar(eps_b) = hbar(eps_w) + 2 = k.

    Returns:
        ValidationReport: Violations name the failing edge, the sum, or the offending cell.
    """

    report = ValidationReport(checks=CONDITION2_CHECKS)

    missing = [cell for cell in quiver.black_cells if cell not in eps.eps_black] + \
              [cell for cell in quiver.white_cells if cell not in eps.eps_white]
    for cell in missing:
        report.add(EDGE_CONGRUENCES, 'cell {0}'.format(cell), 'no weight assigned')
    for weight in list(eps.eps_black.values()) + list(eps.eps_white.values()):
        if len(weight.raw) != lattice.n:
            report.add(EDGE_CONGRUENCES, 'weight {0}'.format(list(weight.raw)),
                       'expected {0} entries'.format(lattice.n))
    if not report.ok:
        return report

    for edge in quiver.edges:
        if not edge_holds(lattice, edge, eps):
            report.add(EDGE_CONGRUENCES, 'edge {0}'.format(edge.id),
                       'eps_{0} - eps_{1} is not a_{2} + a_{3} modulo L'.format(
                           edge.black, edge.white, edge.s, edge.t))

    if not sum_holds(lattice, eps):
        report.add(SUM_CONGRUENCE, SUM, 'sum of black minus sum of white weights is not a0 modulo L')

    k = eps.k
    for cell in quiver.black_cells:
        if hbar(eps.eps_black[cell]) != k:
            report.add(K_LADDER, 'black cell {0}'.format(cell),
                       'hbar is {0}, expected k = {1}'.format(hbar(eps.eps_black[cell]), k))
    for cell in quiver.white_cells:
        if k is None or hbar(eps.eps_white[cell]) != k - 2:
            report.add(K_LADDER, 'white cell {0}'.format(cell),
                       'hbar is {0}, expected k - 2 = {1}'.format(
                           hbar(eps.eps_white[cell]), None if k is None else k - 2))

    return report


def require_epsilons(lattice, quiver):

    """
    Like solve_epsilons, but raises InfeasibleEpsilonsException instead of returning the
    certificate.
    """

    result = solve_epsilons(lattice, quiver)
    if isinstance(result, Infeasibility):
        raise exceptions.InfeasibleEpsilonsException(result)
    return result
