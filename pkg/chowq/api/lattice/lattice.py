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
from functools import cmp_to_key
from itertools import combinations

from boltons.cacheutils import cachedproperty
from sympy import igcd

from chowq.api import exceptions
from chowq.api import logger
from chowq.api import utils
from chowq.api.core.matrix import IntMatrix
from chowq.api.core.matrix import smith_normal_form
from chowq.api.model.model import ValidationReport

SHAPE = 'lattice shape'
RANK = 'lattice rank'
ROW_SUM = 'lattice row sums'
ZERO_COLUMN = 'lattice columns'


def cross(first, second):
    return first[0] * second[1] - first[1] * second[0]


def primitive(vector):
    divisor = igcd(abs(vector[0]), abs(vector[1]))
    return vector[0] // divisor, vector[1] // divisor


def _half(vector):
    return 0 if vector[1] > 0 or (vector[1] == 0 and vector[0] > 0) else 1


def _angular_compare(first, second):
    if _half(first) != _half(second):
        return _half(first) - _half(second)
    turn = cross(first, second)
    if turn > 0:
        return -1
    if turn < 0:
        return 1
    return 0


class Weight(object):

    """
    An element of Z^N / L, stored through a raw integer representative. Two weights are the same
    class iff their difference lies in the row span of the lattice basis, see Lattice.contains.

    Equality (==) compares raw representatives only.
    """

    def __init__(self, raw):
        self.raw = tuple(int(entry) for entry in raw)

    @staticmethod
    def zero(size):
        return Weight([0] * size)

    @staticmethod
    def unit(size, index):
        return Weight(utils.unit_vector(size, index))

    @property
    def hbar(self):
        return hbar(self)

    def __add__(self, other):
        return Weight(utils.add_vectors(self.raw, other.raw))

    def __sub__(self, other):
        return Weight(utils.sub_vectors(self.raw, other.raw))

    def __neg__(self):
        return Weight([-entry for entry in self.raw])

    def __eq__(self, other):
        return isinstance(other, Weight) and self.raw == other.raw

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        return 'Weight({0})'.format(list(self.raw))


# pylint: disable=too-few-public-methods
class Ray(object):

    def __init__(self, direction, indices):
        self.direction = direction
        self.indices = tuple(indices)

    def to_dict(self):
        return {'direction': list(self.direction), 'columns': list(self.indices)}


# pylint: disable=too-few-public-methods
class Chamber(object):

    def __init__(self, position, first, second, representative, pairs, a0_raw):
        self.position = position
        self.first = first
        self.second = second
        self.representative = representative
        self.pairs = pairs
        self.a0_raw = a0_raw

    def to_dict(self):
        return {
            'representative': list(self.representative),
            'bounded_by': [list(self.first.direction), list(self.second.direction)],
            'pairs': [list(pair) for pair in sorted(self.pairs)],
            'a0': list(self.a0_raw)
        }


# pylint: disable=too-few-public-methods
class SecondaryFan(object):

    def __init__(self, rays, chambers):
        self.rays = rays
        self.chambers = chambers

    def to_dict(self):
        return {
            'rays': [ray.to_dict() for ray in self.rays],
            'chambers': [chamber.to_dict() for chamber in self.chambers]
        }


# pylint: disable=too-few-public-methods
class QuotientStructure(object):

    def __init__(self, free_rank, invariant_factors):
        self.free_rank = free_rank
        self.invariant_factors = tuple(invariant_factors)
        self.torsion_order = 1
        for factor in self.invariant_factors:
            self.torsion_order *= factor

    @property
    def torsion_free(self):
        return self.torsion_order == 1

    def to_dict(self):
        return {
            'free_rank': self.free_rank,
            'invariant_factors': list(self.invariant_factors),
            'torsion_order': self.torsion_order
        }


# pylint: disable=too-few-public-methods
class A0(object):

    def __init__(self, raw_by_chamber, weight):
        self.raw_by_chamber = raw_by_chamber
        self.weight = weight

    def to_dict(self):
        return {
            'class': list(self.weight.raw),
            'hbar': hbar(self.weight),
            'chambers': [{'representative': list(representative), 'a0': list(raw)}
                         for representative, raw in self.raw_by_chamber]
        }


class Lattice(object):

    """
    A rank 2 sublattice L of Z^N, presented by a 2xN integer matrix B whose rows are a basis of L.

    The columns beta_1..beta_N of B span the secondary fan. Derived data (fan, Smith
    decomposition, a0) is computed lazily and cached, the instance itself is immutable.

    Use Lattice.create, or validate_lattice for a report instead of an exception.

    Args:
        b (IntMatrix): A validated 2xN matrix.
    """

    def __init__(self, b):
        self._b = b
        self._logger = logger.Logger(__name__)
        self._log_ctx = {'n': self.n}

    @staticmethod
    def create(rows):

        """
        Raises:
            LatticeValidationException: The rows do not present a valid lattice.
        """

        result = validate_lattice(IntMatrix(rows))
        if isinstance(result, ValidationReport):
            raise exceptions.LatticeValidationException(result)
        return result

    @property
    def b(self):
        return self._b

    @property
    def n(self):
        return self._b.shape[1]

    @property
    def rows(self):
        return self._b.rows

    @cachedproperty
    def betas(self):
        return [tuple(column) for column in self._b.columns()]

    def beta(self, index):
        return self.betas[index - 1]

    def det(self, i, j):
        return cross(self.beta(i), self.beta(j))

    def transform(self, g):

        """
        The same lattice presented by the basis g * B, for a unimodular integer 2x2 matrix g.

        Raises:
            InvalidArgumentsException: g is not unimodular, so g * B spans a different lattice.
        """

        g = IntMatrix(g)
        if g.shape != (2, 2) or abs(g.det()) != 1:
            raise exceptions.InvalidArgumentsException(
                'Basis change {0} is not a unimodular 2x2 matrix'.format(g.rows))
        return Lattice.create((g * self._b).rows)

    @cachedproperty
    def smith(self):
        return smith_normal_form(self._b)

    @cachedproperty
    def fan(self):
        return secondary_fan(self)

    @cachedproperty
    def a0(self):
        return a0(self)

    def coordinates(self, vector):

        """
        Solves vector = x * B over the integers.

        Returns:
            tuple: (x1, x2), or None if the vector is not in L.
        """

        vector = tuple(vector)
        if len(vector) != self.n:
            raise exceptions.InvalidArgumentsException(
                'Expected a vector of length {0}, got {1}'.format(self.n, len(vector)))

        smith = self.smith
        transformed = [utils.dot(vector, column) for column in smith.v.columns()]
        if any(transformed[2:]):
            return None

        scaled = []
        for index in range(2):
            factor = smith.d.rows[index][index]
            if transformed[index] % factor:
                return None
            scaled.append(transformed[index] // factor)

        # x' = x * U^-1, so x = x' * U
        return tuple(utils.dot(scaled, column) for column in smith.u.columns())

    def contains(self, vector):
        return self.coordinates(vector) is not None

    def _debug(self, message, **kwargs):
        kwargs = dict(kwargs)
        kwargs.update(self._log_ctx)
        self._logger.debug(message, **kwargs)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self._b == other.b

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._b)

    def __repr__(self):
        return 'Lattice({0})'.format([list(row) for row in self.rows])


def validate_lattice(b):

    """
    Checks that a matrix presents a valid lattice: 2 rows, N >= 3 columns, rank 2, rows summing to
    zero and no zero column.

    Args:
        b (IntMatrix): The candidate presentation.

    Returns:
        Lattice if every check passes, otherwise the ValidationReport naming each violation.
    """

    report = ValidationReport()
    n_rows, n_cols = b.shape

    report.ran(SHAPE)
    if n_rows != 2:
        report.add(SHAPE, 'rows', 'expected 2 rows, got {0}'.format(n_rows))
    if n_cols < 3:
        report.add(SHAPE, 'columns', 'expected at least 3 columns, got {0}'.format(n_cols))
    if not report.ok:
        return report

    report.ran(RANK)
    if b.rank() < 2:
        report.add(RANK, 'rows', 'the rows are linearly dependent (rank < 2)')

    report.ran(ROW_SUM)
    for index, row in enumerate(b.rows, start=1):
        if sum(row) != 0:
            report.add(ROW_SUM, 'row {0}'.format(index),
                       'entries sum to {0}, expected 0'.format(sum(row)))

    report.ran(ZERO_COLUMN)
    for index, column in enumerate(b.columns(), start=1):
        if not any(column):
            report.add(ZERO_COLUMN, 'column {0}'.format(index), 'the column is zero')

    if not report.ok:
        return report
    return Lattice(b)


def secondary_fan(lattice):

    """
    Rays are the primitive directions of the columns, sorted counterclockwise starting from the
    positive x axis. Every gap between consecutive rays is below 180 degrees (the columns sum to
    zero and span the plane), so the sum of two consecutive rays lies strictly inside the chamber
    they bound.
    """

    members = {}
    for index, beta in enumerate(lattice.betas, start=1):
        members.setdefault(primitive(beta), []).append(index)

    directions = sorted(members, key=cmp_to_key(_angular_compare))
    rays = [Ray(direction, members[direction]) for direction in directions]

    chambers = []
    for position, first in enumerate(rays):
        second = rays[(position + 1) % len(rays)]
        representative = utils.add_vectors(first.direction, second.direction)
        pairs = chamber_pairs(lattice, representative)
        chambers.append(Chamber(position=position,
                                first=first,
                                second=second,
                                representative=representative,
                                pairs=pairs,
                                a0_raw=_a0_raw(lattice, pairs)))

    # pylint: disable=protected-access
    lattice._debug('Computed secondary fan', rays=len(rays), chambers=len(chambers))
    return SecondaryFan(rays=rays, chambers=chambers)


def chamber_pairs(lattice, c):

    """
    All pairs {i, j} with det(beta_i, beta_j) != 0 whose closed cone contains c.

    c = l * beta_i + m * beta_j with l = det(c, beta_j) / det and m = det(beta_i, c) / det, so
    membership is two sign tests.

    Returns:
        frozenset: Pairs (i, j) with i < j.

    Raises:
        VectorOnRayException: c is zero or lies on a ray.
    """

    c = tuple(c)
    if not any(c):
        raise exceptions.VectorOnRayException(c)

    for beta in lattice.betas:
        if cross(beta, c) == 0 and utils.dot(beta, c) > 0:
            raise exceptions.VectorOnRayException(c)

    pairs = set()
    for i, j in combinations(range(1, lattice.n + 1), 2):
        det = lattice.det(i, j)
        if det == 0:
            continue
        if cross(c, lattice.beta(j)) * det >= 0 and cross(lattice.beta(i), c) * det >= 0:
            pairs.add((i, j))
    return frozenset(pairs)


def _a0_raw(lattice, pairs):
    raw = [0] * lattice.n
    for i, j in pairs:
        weight = abs(lattice.det(i, j))
        raw[i - 1] += weight
        raw[j - 1] += weight
    return tuple(raw)


def a0(lattice):

    """
    The weight a0 = sum over {i,j} in L_c of |det(beta_i, beta_j)| (a_i + a_j), computed for the
    representative of every chamber.

    Returns:
        A0: Raw vectors per chamber (in fan order) and the common class.

    Raises:
        InconsistentWeightException: Two chambers disagree modulo L.
    """

    chambers = lattice.fan.chambers
    raw_by_chamber = [(chamber.representative, chamber.a0_raw) for chamber in chambers]

    reference = raw_by_chamber[0][1]
    for _, raw in raw_by_chamber[1:]:
        if not lattice.contains(utils.sub_vectors(raw, reference)):
            raise exceptions.InconsistentWeightException(reference, raw)

    return A0(raw_by_chamber=raw_by_chamber, weight=Weight(reference))


def weight_class_eq(lattice, first, second):
    return lattice.contains(utils.sub_vectors(first.raw, second.raw))


def weight_in_lattice(lattice, vector):
    return lattice.contains(vector)


def lattice_coordinates(lattice, vector):
    return lattice.coordinates(vector)


def quotient_structure(lattice):
    return QuotientStructure(free_rank=lattice.n - 2,
                             invariant_factors=lattice.smith.invariant_factors)


def hbar(weight):
    return sum(weight.raw)


def kernel_basis(lattice):

    """
    N - 2 independent integer vectors w with B * w = 0: the trailing columns of V in the Smith
    decomposition U * B * V = D. Each vector is signed so that its first non-zero entry is
    positive.
    """

    basis = []
    for column in lattice.smith.v.columns()[2:]:
        leading = next(entry for entry in column if entry)
        basis.append(tuple(-entry for entry in column) if leading < 0 else tuple(column))
    return basis


def in_kernel(lattice, w):
    return all(utils.dot(row, w) == 0 for row in lattice.rows)


def sample_group_element(lattice, w, t):

    """
    The rational point xi = (t^w_1, ..., t^w_N) of the diagonal group: xi^l = t^(l . w) = 1 for
    every l in L because B * w = 0.

    Raises:
        KernelMembershipException: B * w != 0.
        InvalidArgumentsException: t is zero or w has the wrong length.
    """

    w = tuple(int(entry) for entry in w)
    t = utils.to_fraction(t)
    if len(w) != lattice.n:
        raise exceptions.InvalidArgumentsException(
            'Expected a vector of length {0}, got {1}'.format(lattice.n, len(w)))
    if t == 0:
        raise exceptions.InvalidArgumentsException('t must be non zero')
    if not in_kernel(lattice, w):
        raise exceptions.KernelMembershipException(w)
    return tuple(t ** entry for entry in w)


def scalar_group_element(lattice, t):
    return sample_group_element(lattice, [1] * lattice.n, t)


def character(lattice, w, t):

    """
    chi(xi) = xi(a0) = t^(w . a0) for xi = sample_group_element(lattice, w, t). Independent of
    the raw representative of a0 since B * w = 0.
    """

    sample_group_element(lattice, w, t)
    return Fraction(utils.to_fraction(t)) ** utils.dot(w, lattice.a0.weight.raw)
