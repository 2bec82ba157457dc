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

from boltons.cacheutils import cachedproperty

from chowq.api import exceptions
from chowq.api import logger
from chowq.api import utils
from chowq.api.compat.compat import EpsilonAssignment
from chowq.api.compat.compat import Infeasibility
from chowq.api.compat.compat import solve_epsilons
from chowq.api.core.matrix import PolyMatrix
from chowq.api.core.poly import U
from chowq.api.core.poly import Z
from chowq.api.lattice.lattice import character
from chowq.api.lattice.lattice import hbar
from chowq.api.lattice.lattice import sample_group_element
from chowq.api.model.model import ValidationReport
from chowq.api.quiver.quiver import check_condition1

STANDARD = 'standard'
COMPLEMENTARY = 'complementary'

FLAVORS = (STANDARD, COMPLEMENTARY)

ENTRY_HOMOGENEITY = 'entry homogeneity'
DETERMINANT_HOMOGENEITY = 'determinant homogeneity'
COMPLEMENT_DUALITY = 'complement duality'
DEGREES = 'degree identities'

HOMOGENEITY_CHECKS = (ENTRY_HOMOGENEITY, DETERMINANT_HOMOGENEITY, COMPLEMENT_DUALITY)

_logger = logger.Logger(__name__)


class BiAdjacency(object):

    """
    The biadjacency matrix of a quiver: rows are black cells, columns are white cells, and the
    entry (b, w) sums one term per edge bounded by both cells.

    The standard flavor uses z_e * u_s(e) * u_t(e), the complementary flavor uses
    z_e * prod(u_i for i not in {s(e), t(e)}).

    Args:
        quiver (Quiver): The quiver.
        matrix (PolyMatrix): The entries.
        flavor (str): STANDARD or COMPLEMENTARY.
    """

    def __init__(self, quiver, matrix, flavor):
        self.quiver = quiver
        self.matrix = matrix
        self.flavor = flavor

    @property
    def size(self):
        return self.matrix.shape[0]

    def entry(self, black, white):
        return self.matrix.entry(black, white)

    @cachedproperty
    def determinant(self):
        _logger.debug('Computing determinant', flavor=self.flavor, size=self.size)
        return self.matrix.determinant()

    def replace_entry(self, black, white, poly):

        """
        A copy with one entry replaced. Used to probe the homogeneity checks.
        """

        rows = []
        for row_label, row in zip(self.matrix.row_labels, self.matrix.rows):
            rows.append([poly if (row_label, col_label) == (black, white) else entry
                         for col_label, entry in zip(self.matrix.col_labels, row)])
        return BiAdjacency(quiver=self.quiver,
                           matrix=PolyMatrix(space=self.matrix.space,
                                             rows=rows,
                                             row_labels=self.matrix.row_labels,
                                             col_labels=self.matrix.col_labels),
                           flavor=self.flavor)

    def to_dict(self):
        data = self.matrix.to_dict()
        data['flavor'] = self.flavor
        return data


def edge_term(space, edge, flavor):
    if flavor == STANDARD:
        return space.z(edge.id) * space.u(edge.s) * space.u(edge.t)
    term = space.z(edge.id)
    for node in range(1, space.n_nodes + 1):
        if node not in (edge.s, edge.t):
            term = term * space.u(node)
    return term


def build_biadjacency(quiver, flavor=STANDARD):

    """
    Args:
        quiver (Quiver): A quiver satisfying Condition 1.
        flavor (:str, optional): STANDARD or COMPLEMENTARY.

    Returns:
        BiAdjacency: The matrix, rows and columns ordered by cell label.
    """

    if flavor not in FLAVORS:
        raise exceptions.InvalidArgumentsException('Unknown flavor: {0}'.format(flavor))

    space = quiver.variable_space
    rows = []
    for black in quiver.black_cells:
        row = []
        for white in quiver.white_cells:
            entry = space.zero()
            for edge in quiver.edges_between(black, white):
                entry = entry + edge_term(space, edge, flavor)
            row.append(entry)
        rows.append(row)

    return BiAdjacency(quiver=quiver,
                       matrix=PolyMatrix(space=space,
                                         rows=rows,
                                         row_labels=quiver.black_cells,
                                         col_labels=quiver.white_cells),
                       flavor=flavor)


def det_biadjacency(quiver, flavor=STANDARD):
    return build_biadjacency(quiver, flavor).determinant


def complement_vector(vector, multiplicity):
    return tuple(multiplicity - entry for entry in vector)


def check_homogeneity(lattice, quiver, eps, biadjacency=None):

    """
    Verifies the grading of the standard biadjacency matrix:

        - every u exponent vector v of the entry (b, w) satisfies v = eps_b - eps_w modulo L.
        - every u exponent vector of det K_P is a0 modulo L.
        - det K_P^c is obtained from det K_P by v -> m * (1, ..., 1) - v on u exponents, with
          m the number of black cells.

    Args:
        lattice (Lattice): The lattice.
        quiver (Quiver): The quiver.
        eps (EpsilonAssignment): A solution of Condition 2.
        biadjacency (:BiAdjacency, optional): A standard matrix to check instead of the one built
            from the quiver.

    Returns:
        ValidationReport: Violations locate the offending entry or monomial.
    """

    report = ValidationReport(checks=HOMOGENEITY_CHECKS)
    standard = biadjacency or build_biadjacency(quiver, STANDARD)

    for black in standard.matrix.row_labels:
        for white in standard.matrix.col_labels:
            expected = eps.eps_black[black] - eps.eps_white[white]
            for vector in sorted(standard.entry(black, white).collect(U)):
                if not lattice.contains(utils.sub_vectors(vector, expected.raw)):
                    report.add(ENTRY_HOMOGENEITY, 'entry ({0}, {1})'.format(black, white),
                               'u exponent {0} is not eps_{1} - eps_{2} modulo L'.format(
                                   list(vector), black, white))

    determinant = standard.determinant
    a0 = lattice.a0.weight
    for vector in sorted(determinant.collect(U)):
        if not lattice.contains(utils.sub_vectors(vector, a0.raw)):
            report.add(DETERMINANT_HOMOGENEITY, 'u exponent {0}'.format(list(vector)),
                       'not a0 modulo L')

    multiplicity = standard.size
    expected = dict((complement_vector(vector, multiplicity), coefficient)
                    for vector, coefficient in determinant.collect(U).items())
    actual = det_biadjacency(quiver, COMPLEMENTARY).collect(U)
    for vector in sorted(set(expected) | set(actual)):
        if expected.get(vector) != actual.get(vector):
            report.add(COMPLEMENT_DUALITY, 'u exponent {0}'.format(list(vector)),
                       'det K_P^c does not match the complement of det K_P')

    _logger.debug('Checked homogeneity', violations=len(report.violations))
    return report


def degree_summary(lattice, quiver):

    """
    The degrees entering the degree identities.

    Returns:
        dict: deg_z and deg_u of det K_P (None when not homogeneous), deg_u of det K_P^c, the
            number of black and white cells and hbar(a0) / 2.
    """

    determinant = det_biadjacency(quiver, STANDARD)
    complementary = det_biadjacency(quiver, COMPLEMENTARY)

    def single(degrees):
        return list(degrees)[0] if len(degrees) == 1 else None

    return {
        'deg_z': single(determinant.degrees(Z)),
        'deg_u': single(determinant.degrees(U)),
        'deg_u_complementary': single(complementary.degrees(U)),
        'black_cells': len(quiver.black_cells),
        'white_cells': len(quiver.white_cells),
        'half_hbar_a0': utils.to_fraction(hbar(lattice.a0.weight)) / 2
    }


def degree_check(lattice, quiver, eps=None):

    """
    Certifies deg_z det K_P = #black = #white = hbar(a0) / 2 and deg_u det K_P = 2 * deg_z.

    Refuses to certify (reports a violation) when Condition 1 or Condition 2 fails.

    Args:
        lattice (Lattice): The lattice.
        quiver (Quiver): The quiver.
        eps (:EpsilonAssignment, optional): Skips solving Condition 2 when given.

    Returns:
        ValidationReport: With a single check, DEGREES.
    """

    report = ValidationReport(checks=[DEGREES])

    if not check_condition1(quiver).ok:
        report.add(DEGREES, 'preconditions', 'condition 1 does not hold, refusing to certify')
        return report

    if eps is None:
        eps = solve_epsilons(lattice, quiver)
    if isinstance(eps, Infeasibility) or not isinstance(eps, EpsilonAssignment):
        report.add(DEGREES, 'preconditions', 'condition 2 does not hold, refusing to certify')
        return report

    summary = degree_summary(lattice, quiver)
    nu = summary['deg_z']

    if nu is None:
        report.add(DEGREES, 'det K_P', 'not homogeneous in z')
        return report
    if summary['deg_u'] is None:
        report.add(DEGREES, 'det K_P', 'not homogeneous in u')
        return report

    if summary['black_cells'] != nu:
        report.add(DEGREES, 'black cells',
                   '{0} black cells but deg_z det K_P = {1}'.format(summary['black_cells'], nu))
    if summary['white_cells'] != nu:
        report.add(DEGREES, 'white cells',
                   '{0} white cells but deg_z det K_P = {1}'.format(summary['white_cells'], nu))
    if summary['half_hbar_a0'] != nu:
        report.add(DEGREES, 'a0', 'hbar(a0) / 2 = {0} but deg_z det K_P = {1}'.format(
            utils.format_rational(summary['half_hbar_a0']), nu))
    if summary['deg_u'] != 2 * nu:
        report.add(DEGREES, 'det K_P', 'deg_u = {0} but 2 * deg_z = {1}'.format(
            summary['deg_u'], 2 * nu))
    if summary['deg_u_complementary'] != (lattice.n - 2) * nu:
        report.add(DEGREES, 'det K_P^c', 'deg_u = {0} but (N - 2) * deg_z = {1}'.format(
            summary['deg_u_complementary'], (lattice.n - 2) * nu))

    _logger.debug('Checked degrees', nu=nu, violations=len(report.violations))
    return report


def group_action_holds(lattice, quiver, w, t, u):

    """
    Numerically checks det K_P(z, xi * u) = chi(xi) * det K_P(z, u) at xi = t^w, leaving z
    symbolic.
    """

    xi = sample_group_element(lattice, w, t)
    determinant = det_biadjacency(quiver, STANDARD)
    moved = determinant.evaluate(U, [entry * scale for entry, scale in zip(u, xi)])
    return moved == determinant.evaluate(U, u) * character(lattice, w, t)
