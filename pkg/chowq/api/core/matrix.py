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

from sympy import Matrix

from chowq.api import exceptions
from chowq.api import logger
from chowq.api.core.poly import Poly

_logger = logger.Logger(__name__)


class IntMatrix(object):

    """
    An immutable integer matrix with optional row and column labels.

    Args:
        rows (list): Lists of ints, all of the same length.
        row_labels (:list, optional): Defaults to 1..m.
        col_labels (:list, optional): Defaults to 1..n.
    """

    def __init__(self, rows, row_labels=None, col_labels=None):

        rows = tuple(tuple(int(entry) for entry in row) for row in rows)
        if len(set(len(row) for row in rows)) > 1:
            raise exceptions.InvalidArgumentsException('Matrix rows have different lengths')

        self._rows = rows
        n_cols = len(rows[0]) if rows else 0
        self._row_labels = tuple(row_labels) if row_labels is not None \
            else tuple(range(1, len(rows) + 1))
        self._col_labels = tuple(col_labels) if col_labels is not None \
            else tuple(range(1, n_cols + 1))

        if len(self._row_labels) != len(rows) or len(self._col_labels) != n_cols:
            raise exceptions.InvalidArgumentsException('Labels do not match the matrix dimensions')

    @staticmethod
    def identity(size):
        return IntMatrix([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @staticmethod
    def from_sympy(matrix):
        return IntMatrix(matrix.tolist())

    @property
    def rows(self):
        return self._rows

    @property
    def row_labels(self):
        return self._row_labels

    @property
    def col_labels(self):
        return self._col_labels

    @property
    def shape(self):
        return len(self._rows), len(self._rows[0]) if self._rows else 0

    def column(self, index):
        return tuple(row[index] for row in self._rows)

    def columns(self):
        return [self.column(index) for index in range(self.shape[1])]

    def to_sympy(self):
        return Matrix([list(row) for row in self._rows]) if self._rows else Matrix(0, 0, [])

    def transpose(self):
        return IntMatrix(zip(*self._rows)) if self._rows else IntMatrix([])

    def rank(self):
        return self.to_sympy().rank()

    def det(self):
        return int(self.to_sympy().det(method='bareiss'))

    def __mul__(self, other):
        return IntMatrix.from_sympy(self.to_sympy() * other.to_sympy())

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return 'IntMatrix({0})'.format([list(row) for row in self._rows])


class SmithDecomposition(object):

    """
    U * A * V = D with U, V unimodular and D diagonal, its non-negative diagonal entries forming
    a divisibility chain d1 | d2 | ...
    """

    def __init__(self, matrix, u, v, d):
        self.matrix = matrix
        self.u = u
        self.v = v
        self.d = d

    @property
    def diagonal(self):
        rows, cols = self.d.shape
        return tuple(self.d.rows[i][i] for i in range(min(rows, cols)))

    @property
    def invariant_factors(self):
        return tuple(entry for entry in self.diagonal if entry != 0)

    @property
    def rank(self):
        return len(self.invariant_factors)

    def verify(self):
        rows, cols = self.d.shape
        if self.u * self.matrix * self.v != self.d:
            return False
        if abs(self.u.det()) != 1 or abs(self.v.det()) != 1:
            return False
        for i in range(rows):
            for j in range(cols):
                if i != j and self.d.rows[i][j] != 0:
                    return False
        diagonal = self.diagonal
        if any(entry < 0 for entry in diagonal):
            return False
        for first, second in zip(diagonal, diagonal[1:]):
            if first == 0 and second != 0:
                return False
            if first != 0 and second % first != 0:
                return False
        return True


def smith_normal_form(matrix):

    """
    Computes the Smith normal form of an integer matrix together with the unimodular transforms.

    Pivots are chosen with minimal absolute value in the remaining block; rows and columns are
    reduced by floor division, which strictly decreases the pivot whenever a remainder survives.
    A pivot that does not divide the rest of the block absorbs the offending row.

    Args:
        matrix (IntMatrix): The input A.

    Returns:
        SmithDecomposition: U, V, D with U * A * V = D.
    """

    m, n = matrix.shape
    d = [list(row) for row in matrix.rows]
    u = [list(row) for row in IntMatrix.identity(m).rows]
    v = [list(row) for row in IntMatrix.identity(n).rows]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(target, source, factor):
        d[target] = [a + factor * b for a, b in zip(d[target], d[source])]
        u[target] = [a + factor * b for a, b in zip(u[target], u[source])]

    def add_col(target, source, factor):
        for row in d:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for k in range(min(m, n)):

        while True:

            candidates = [(abs(d[i][j]), i, j)
                          for i in range(k, m) for j in range(k, n) if d[i][j] != 0]
            if not candidates:
                break

            _, i, j = min(candidates)
            swap_rows(k, i)
            swap_cols(k, j)
            pivot = d[k][k]

            clean = True
            for i in range(k + 1, m):
                if d[i][k]:
                    add_row(i, k, -(d[i][k] // pivot))
                    clean = clean and d[i][k] == 0
            for j in range(k + 1, n):
                if d[k][j]:
                    add_col(j, k, -(d[k][j] // pivot))
                    clean = clean and d[k][j] == 0
            if not clean:
                continue

            offending = [i for i in range(k + 1, m)
                         for j in range(k + 1, n) if d[i][j] % pivot != 0]
            if offending:
                add_row(k, offending[0], 1)
                continue

            break

        if d[k][k] < 0:
            d[k] = [-entry for entry in d[k]]
            u[k] = [-entry for entry in u[k]]

    decomposition = SmithDecomposition(matrix=matrix,
                                       u=IntMatrix(u),
                                       v=IntMatrix(v),
                                       d=IntMatrix(d) if m else IntMatrix([]))
    _logger.debug('Computed Smith normal form',
                  shape='{0}x{1}'.format(m, n),
                  factors=list(decomposition.invariant_factors))
    return decomposition


class PolyMatrix(object):

    """
    A rectangular matrix of polynomials over a common VariableSpace.

    Args:
        space (VariableSpace): The space of every entry.
        rows (list): Lists of Poly.
        row_labels (list): One label per row.
        col_labels (list): One label per column.
    """

    def __init__(self, space, rows, row_labels, col_labels):

        rows = tuple(tuple(row) for row in rows)
        if len(rows) != len(row_labels) or any(len(row) != len(col_labels) for row in rows):
            raise exceptions.InvalidArgumentsException('Labels do not match the matrix dimensions')
        for row in rows:
            for entry in row:
                if entry.space != space:
                    raise exceptions.VariableSpaceMismatchException(space, entry.space)

        self._space = space
        self._rows = rows
        self._row_labels = tuple(row_labels)
        self._col_labels = tuple(col_labels)

    @property
    def space(self):
        return self._space

    @property
    def rows(self):
        return self._rows

    @property
    def row_labels(self):
        return self._row_labels

    @property
    def col_labels(self):
        return self._col_labels

    @property
    def shape(self):
        return len(self._rows), len(self._col_labels)

    def entry(self, row_label, col_label):
        return self._rows[self._row_labels.index(row_label)][self._col_labels.index(col_label)]

    def determinant(self):
        return det_poly_matrix(self)

    def to_dict(self):
        return {
            'rows': list(self._row_labels),
            'columns': list(self._col_labels),
            'entries': [[entry.to_text() for entry in row] for row in self._rows]
        }

    @staticmethod
    def from_dict(space, data):

        """
        Inverse of to_dict.
        """

        try:
            entries = [[Poly.parse(space, text) for text in row] for row in data['entries']]
            return PolyMatrix(space=space,
                              rows=entries,
                              row_labels=data['rows'],
                              col_labels=data['columns'])
        except (KeyError, TypeError) as e:
            raise exceptions.DocumentParseException(source='matrix', reason=str(e))

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and \
            self._space == other.space and \
            self._rows == other.rows and \
            self._row_labels == other.row_labels and \
            self._col_labels == other.col_labels

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._space, self._rows, self._row_labels, self._col_labels))


def det_poly_matrix(matrix):

    """
    Exact determinant of a square polynomial matrix.

    Laplace expansion along the last row, memoized over column subsets: after processing rows
    0..r-1, minors[S] holds the determinant of those rows restricted to the column set S
    (|S| = r). Row r extends every S by one column j outside S, with sign (-1)^(r + p) where p is
    the position of j inside S + {j}. Zero entries and zero minors are skipped.

    Args:
        matrix (PolyMatrix): The matrix.

    Returns:
        Poly: det(matrix).

    Raises:
        NonSquareMatrixException: The matrix is empty or not square.
    """

    n_rows, n_cols = matrix.shape
    if n_rows != n_cols or n_rows == 0:
        raise exceptions.NonSquareMatrixException(n_rows, n_cols)

    ring = matrix.space.ring
    entries = [[entry.element for entry in row] for row in matrix.rows]

    minors = {0: ring.one}
    for r in range(n_rows):
        extended = {}
        for columns, minor in minors.items():
            for j in range(n_cols):
                bit = 1 << j
                if columns & bit or not entries[r][j]:
                    continue
                position = bin(columns & (bit - 1)).count('1')
                term = entries[r][j] * minor
                if (r + position) % 2:
                    term = -term
                key = columns | bit
                extended[key] = extended[key] + term if key in extended else term
        minors = dict((key, value) for key, value in extended.items() if value)
        _logger.debug('Expanded determinant row', row=r, minors=len(minors))

    return Poly(matrix.space, minors.get((1 << n_cols) - 1, ring.zero))
