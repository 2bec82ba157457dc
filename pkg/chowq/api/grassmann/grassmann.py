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

from itertools import combinations

from sympy import Matrix
from sympy import Rational

from chowq.api import exceptions
from chowq.api import logger
from chowq.api import utils
from chowq.api.core.poly import Poly
from chowq.api.core.poly import VarId
from chowq.api.core.poly import Y
from chowq.api.core.poly import Z
from chowq.api.lattice.lattice import cross

_logger = logger.Logger(__name__)


class PlueckerElement(Poly):

    """
    A polynomial in the Pluecker coordinates Y_km = y_1k * y_2m - y_2k * y_1m of a line, stored
    expanded in the y variables. Homogeneous of degree d in the Y coordinates means homogeneous of
    degree 2d in y.
    """

    @staticmethod
    def of(poly):
        return PlueckerElement(poly.space, poly.element)

    @property
    def pluecker_degree(self):

        """
        Raises:
            InvalidArgumentsException: The element is not homogeneous of even degree in y.
        """

        degrees = self.degrees(Y)
        if len(degrees) != 1 or list(degrees)[0] % 2:
            raise exceptions.InvalidArgumentsException(
                'Not homogeneous in the Pluecker coordinates: y degrees {0}'.format(sorted(degrees)))
        return list(degrees)[0] // 2


def _check_column(space, index):
    if not isinstance(index, int) or not 1 <= index <= space.n_nodes:
        raise exceptions.InvalidArgumentsException(
            'Column {0} outside 1..{1}'.format(index, space.n_nodes))


def pluecker_var(space, k, m):

    """
    Y_km = y_1k * y_2m - y_2k * y_1m, the 2x2 minor of columns k and m. Y_mk = -Y_km and
    Y_kk = 0.
    """

    _check_column(space, k)
    _check_column(space, m)
    return PlueckerElement.of(space.y(1, k) * space.y(2, m) - space.y(2, k) * space.y(1, m))


def pluecker_relation(space, i, j, k, m):
    return pluecker_var(space, i, j) * pluecker_var(space, k, m) + \
        pluecker_var(space, i, k) * pluecker_var(space, m, j) + \
        pluecker_var(space, i, m) * pluecker_var(space, j, k)


def pluecker_relation_check(space, i, j, k, m):

    """
    Whether Y_ij * Y_km + Y_ik * Y_mj + Y_im * Y_jk vanishes identically in y.
    """

    return pluecker_relation(space, i, j, k, m).is_zero


def y_substitution(quiver, poly):

    """
    Replaces every z_e by Y_s(e)t(e).

    Raises:
        UnknownEdgeVariableException: poly uses z_e for an edge e outside the quiver.
    """

    mapping = {}
    for variable in poly.variables():
        if variable.namespace != Z:
            continue
        if not quiver.has_edge(variable.index):
            raise exceptions.UnknownEdgeVariableException(variable.index, poly.space)
        edge = quiver.edge(variable.index)
        mapping[variable] = pluecker_var(poly.space, edge.s, edge.t)
    return PlueckerElement.of(poly.substitute(mapping))


class Line(object):

    """
    A line through the origin of Q^N, i.e. a 2 dimensional subspace, presented by the rows of a
    rank 2 matrix. Lines are points of the Grassmannian G(2, N).

    Args:
        rows (list): Two rows of N rationals.

    Raises:
        RankDeficientException: The rows are linearly dependent.
    """

    def __init__(self, rows):

        rows = tuple(tuple(utils.to_fraction(entry) for entry in row) for row in rows)
        if len(rows) != 2 or len(rows[0]) != len(rows[1]) or len(rows[0]) < 2:
            raise exceptions.InvalidArgumentsException(
                'A line needs two rows of equal length >= 2')

        self._rows = rows
        if not any(self.minor(k, m) for k, m in combinations(range(1, self.n + 1), 2)):
            raise exceptions.RankDeficientException('line {0}'.format(
                [[utils.format_rational(entry) for entry in row] for row in rows]))

    @property
    def rows(self):
        return self._rows

    @property
    def n(self):
        return len(self._rows[0])

    def minor(self, k, m):
        first, second = self._rows
        return first[k - 1] * second[m - 1] - second[k - 1] * first[m - 1]

    def pluecker_coords(self):

        """
        Returns:
            dict: (k, m) -> Y_km for all k < m.
        """

        return dict(((k, m), self.minor(k, m)) for k, m in combinations(range(1, self.n + 1), 2))

    def y_values(self):
        return dict((VarId(Y, (row, column)), self._rows[row - 1][column - 1])
                    for row in (1, 2) for column in range(1, self.n + 1))

    def transform(self, g):

        """
        The same line presented by g * rows for an invertible 2x2 matrix g. Every Pluecker
        coordinate scales by det(g).
        """

        (a, b), (c, d) = g
        first, second = self._rows
        return Line([[a * x + b * y for x, y in zip(first, second)],
                     [c * x + d * y for x, y in zip(first, second)]])

    def contains(self, u):
        return point_on_line(self, u)

    def to_dict(self):
        return {'rows': [[utils.format_rational(entry) for entry in row] for row in self._rows]}

    def __eq__(self, other):
        return isinstance(other, Line) and self._rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return 'Line({0})'.format(self.to_dict()['rows'])


class LatticePoint(Line):

    """
    The rows of B seen as a line: the point of G(2, N) defined by the lattice, with Pluecker
    coordinates Y_ij = det(beta_i, beta_j).
    """

    def __init__(self, lattice):
        super(LatticePoint, self).__init__(lattice.rows)
        self.lattice = lattice


def pluecker_coords(line):
    return line.pluecker_coords()


def _rational(value):
    value = utils.to_fraction(value)
    return Rational(value.numerator, value.denominator)


def point_on_line(line, u):

    """
    Whether the vector u lies on the line, i.e. the 3xN matrix with rows y_1, y_2, u has rank 2
    (all its 3x3 minors vanish).

    Raises:
        InvalidArgumentsException: u is zero or has the wrong length.
    """

    u = tuple(utils.to_fraction(entry) for entry in u)
    if len(u) != line.n:
        raise exceptions.InvalidArgumentsException(
            'Expected a vector of length {0}, got {1}'.format(line.n, len(u)))
    if not any(u):
        raise exceptions.InvalidArgumentsException('The zero vector is on every line')

    stacked = Matrix([[_rational(entry) for entry in row] for row in line.rows + (u,)])
    return stacked.rank() <= 2


def line_through(u, v):

    """
    Raises:
        RankDeficientException: u and v are linearly dependent.
    """

    return Line([u, v])


def bst_hom(lattice, quiver, poly):

    """
    The homomorphism z_e -> det(beta_s(e), beta_t(e)), i.e. the y substitution followed by
    evaluation at the lattice point.
    """

    mapping = {}
    for variable in poly.variables():
        if variable.namespace != Z:
            continue
        edge = quiver.edge(variable.index)
        mapping[variable] = cross(lattice.beta(edge.s), lattice.beta(edge.t))
    _logger.debug('Evaluating at the lattice point', variables=len(mapping))
    return poly.substitute(mapping)


def eval_pluecker_at(element, line):

    """
    Substitutes the entries of the line for the y variables.

    Raises:
        InvalidArgumentsException: The line lives in a different dimension.
    """

    if line.n != element.space.n_nodes:
        raise exceptions.InvalidArgumentsException(
            'Line in dimension {0} but the space has {1} nodes'.format(line.n,
                                                                     element.space.n_nodes))
    return element.substitute(line.y_values())
