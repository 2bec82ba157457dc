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
from chowq.api.biadjacency.biadjacency import COMPLEMENTARY
from chowq.api.biadjacency.biadjacency import STANDARD
from chowq.api.biadjacency.biadjacency import build_biadjacency
from chowq.api.biadjacency.biadjacency import check_homogeneity
from chowq.api.biadjacency.biadjacency import degree_check
from chowq.api.biadjacency.biadjacency import degree_summary
from chowq.api.compat.compat import EDGE_CONGRUENCES
from chowq.api.compat.compat import SUM
from chowq.api.compat.compat import SUM_CONGRUENCE
from chowq.api.compat.compat import Infeasibility
from chowq.api.compat.compat import check_condition2
from chowq.api.compat.compat import solve_epsilons
from chowq.api.core.poly import U
from chowq.api.core.poly import VarId
from chowq.api.core.poly import Z
from chowq.api.grassmann.grassmann import PlueckerElement
from chowq.api.grassmann.grassmann import bst_hom
from chowq.api.grassmann.grassmann import eval_pluecker_at
from chowq.api.grassmann.grassmann import y_substitution
from chowq.api.lattice.lattice import quotient_structure
from chowq.api.model.model import ValidationReport
from chowq.api.quiver.quiver import check_condition1

DIMENSIONS = 'quiver nodes match the lattice'

DIVISIBLE = 'Divisible'
NOT_DIVISIBLE = 'NotDivisible'

_logger = logger.Logger(__name__)


# pylint: disable=too-few-public-methods
class Validation(object):

    """
    Outcome of validate_problem.

    Args:
        report (ValidationReport): Every check that ran.
        eps (EpsilonAssignment): The supplied or solved assignment, None when unavailable.
        infeasibility (Infeasibility): Set when Condition 2 could not be solved.
        nu (int): deg_z det K_P, None unless the degree identities hold.
    """

    def __init__(self, report, eps=None, infeasibility=None, nu=None):
        self.report = report
        self.eps = eps
        self.infeasibility = infeasibility
        self.nu = nu

    def to_dict(self):
        data = self.report.to_dict()
        data['nu'] = self.nu
        if self.eps is not None:
            data['epsilons'] = self.eps.to_dict()
        if self.infeasibility is not None:
            data['infeasibility'] = self.infeasibility.to_dict()
        return data


def validate_problem(lattice, quiver, eps=None):

    """
    Runs the whole validation pipeline: node counts, Condition 1, Condition 2 (verifying eps when
    given, solving for it otherwise), homogeneity of the biadjacency matrix and the degree
    identities. Later stages are skipped once an earlier one fails.

    Returns:
        Validation: The report and whatever the pipeline managed to compute.
    """

    report = ValidationReport(checks=[DIMENSIONS])
    if quiver.n_nodes != lattice.n:
        report.add(DIMENSIONS, 'nodes', 'the quiver has {0} nodes but the lattice has N = {1}'
                   .format(quiver.n_nodes, lattice.n))
        return Validation(report)

    report.merge(check_condition1(quiver))
    if not report.ok:
        return Validation(report)

    if eps is None:
        solved = solve_epsilons(lattice, quiver)
        if isinstance(solved, Infeasibility):
            check = SUM_CONGRUENCE if solved.certificate == SUM else EDGE_CONGRUENCES
            subject = SUM if solved.certificate == SUM else 'edge {0}'.format(solved.certificate)
            report.add(check, subject, solved.message)
            return Validation(report, infeasibility=solved)
        eps = solved
        report.merge(check_condition2(lattice, quiver, eps))
    else:
        report.merge(check_condition2(lattice, quiver, eps))
        if not report.ok:
            return Validation(report, eps=eps)

    report.merge(check_homogeneity(lattice, quiver, eps))
    report.merge(degree_check(lattice, quiver, eps))
    if not report.ok:
        return Validation(report, eps=eps)

    nu = degree_summary(lattice, quiver)['deg_z']
    _logger.debug('Validated problem', n=lattice.n, nu=nu)
    return Validation(report, eps=eps, nu=nu)


class ProblemInstance(object):

    """
    A lattice and a quiver satisfying Conditions 1 and 2 and the degree identities, together with
    the epsilon assignment and nu = deg_z det K_P. Build instances through ProblemInstance.create.
    """

    def __init__(self, lattice, quiver, eps, nu):
        self.lattice = lattice
        self.quiver = quiver
        self.eps = eps
        self.nu = nu
        self._logger = logger.Logger(__name__)
        self._log_ctx = {'n': lattice.n, 'nu': nu}

    @staticmethod
    def create(lattice, quiver, eps=None):

        """
        Raises:
            InfeasibleEpsilonsException: eps was not given and Condition 2 has no solution.
            ConditionViolatedException: Any other check failed.
        """

        validation = validate_problem(lattice, quiver, eps)
        if validation.infeasibility is not None:
            raise exceptions.InfeasibleEpsilonsException(validation.infeasibility)
        if not validation.report.ok:
            raise exceptions.ConditionViolatedException('Problem validation', validation.report)
        return ProblemInstance(lattice=lattice, quiver=quiver, eps=validation.eps, nu=validation.nu)

    @property
    def space(self):
        return self.quiver.variable_space

    @cachedproperty
    def standard(self):
        return build_biadjacency(self.quiver, STANDARD)

    @cachedproperty
    def complementary(self):
        return build_biadjacency(self.quiver, COMPLEMENTARY)

    @property
    def det_standard(self):
        return self.standard.determinant

    @property
    def det_complementary(self):
        return self.complementary.determinant

    @cachedproperty
    def chow_polynomial(self):

        """
        det K_P^c(y(z), u): the complementary determinant after z_e -> Y_s(e)t(e).
        """

        self._debug('Substituting Pluecker coordinates')
        return y_substitution(self.quiver, self.det_complementary)

    def _debug(self, message, **kwargs):
        kwargs = dict(kwargs)
        kwargs.update(self._log_ctx)
        self._logger.debug(message, **kwargs)


class OrbitPoint(object):

    """
    A point of the torus (C*)^N with rational coordinates.
    """

    def __init__(self, values):
        self.values = tuple(utils.to_fraction(value) for value in values)

    @staticmethod
    def create(values, n):

        """
        Raises:
            InvalidArgumentsException: Wrong length or a zero coordinate.
        """

        point = OrbitPoint(values)
        if len(point.values) != n:
            raise exceptions.InvalidArgumentsException(
                'Expected {0} coordinates, got {1}'.format(n, len(point.values)))
        if not all(point.values):
            raise exceptions.InvalidArgumentsException(
                'Orbit points must have non zero coordinates: {0}'.format(point))
        return point

    def act(self, xi):
        return OrbitPoint(value * scale for value, scale in zip(self.values, xi))

    def __eq__(self, other):
        return isinstance(other, OrbitPoint) and self.values == other.values

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.values)

    def __str__(self):
        return '({0})'.format(', '.join(utils.format_rational(value) for value in self.values))


def _point(instance, u):
    if isinstance(u, OrbitPoint):
        return OrbitPoint.create(u.values, instance.lattice.n)
    return OrbitPoint.create(u, instance.lattice.n)


def affine_orbit_invariant(instance, u):

    """
    u -> det K_P(z, u), constant on orbits of the kernel of the character of a0.
    """

    return instance.det_standard.evaluate(U, _point(instance, u).values)


def projective_orbit_invariant(instance, u):

    """
    u -> det K_P(z, u) up to a scalar, constant on orbits of the whole group.

    Raises:
        DegenerateEvaluationException: The determinant vanishes at u.
    """

    u = _point(instance, u)
    image = affine_orbit_invariant(instance, u)
    if image.is_zero:
        raise exceptions.DegenerateEvaluationException('det K_P at u = {0}'.format(u))
    return image.normalize()


def chow_map_point(instance, u, projective=False):

    """
    u -> det K_P^c(y(z), u), optionally normalized.

    Raises:
        DegenerateEvaluationException: projective is set and the image vanishes.
    """

    u = _point(instance, u)
    image = instance.chow_polynomial.evaluate(U, u.values)
    if projective:
        if image.is_zero:
            raise exceptions.DegenerateEvaluationException(
                'det K_P^c(y(z), u) at u = {0}'.format(u))
        image = image.normalize()
    return PlueckerElement.of(image)


def chow_form(instance, u):

    """
    The Chow form of the closure of the orbit of u, in the Pluecker coordinates of a line (written
    out in y variables). It vanishes at every line meeting the orbit closure.
    """

    return chow_map_point(instance, u, projective=True)


def chow_degree(instance, element):

    """
    The degree of element in the Pluecker grading, which for Chow forms equals nu.

    Raises:
        DegreeMismatchException: The degree is not nu.
        InvalidArgumentsException: element is not homogeneous in the Pluecker coordinates.
    """

    degree = element.pluecker_degree
    if degree != instance.nu:
        raise exceptions.DegreeMismatchException(degree, instance.nu)
    return degree


def _check_line(instance, line):
    if line.n != instance.lattice.n:
        raise exceptions.InvalidArgumentsException(
            'Expected a line in dimension {0}, got {1}'.format(instance.lattice.n, line.n))


def incidence_value(instance, line, u):

    """
    det K_P^c with z_e -> Y_s(e)t(e)(line) and u evaluated, an exact rational.
    """

    _check_line(instance, line)
    u = _point(instance, u)

    mapping = {}
    for edge in instance.quiver.edges:
        mapping[VarId(Z, edge.id)] = line.minor(edge.s, edge.t)
    for node, value in enumerate(u.values, start=1):
        mapping[VarId(U, node)] = value
    return instance.det_complementary.substitute(mapping).constant_value()


def incidence_vanishing(instance, line, u):

    """
    Whether the complementary determinant vanishes at (line, u). This always holds when u lies
    on the line.
    """

    return incidence_value(instance, line, u) == 0


def line_image_equation(instance, line):

    """
    The equation in u of the image of a line in the Chow quotient: det K_P^c(y(z), u) with y set
    to the entries of the line, normalized.

    Raises:
        DegenerateEvaluationException: The result vanishes identically.
    """

    _check_line(instance, line)
    image = eval_pluecker_at(instance.chow_polynomial, line)
    if image.is_zero:
        raise exceptions.DegenerateEvaluationException('the image of line {0}'.format(line))
    return image.normalize()


class ADeterminant(object):

    """
    The principal A-determinant E_A, normalized. It is only defined up to sign, so the raw value
    B_st(det K_P^c) is kept alongside: raw = content * poly.
    """

    def __init__(self, raw, content, poly):
        self.raw = raw
        self.content = content
        self.poly = poly

    @property
    def note(self):
        return 'E_A is determined up to sign; B_st(det K_P^c) = {0} * E_A'.format(
            utils.format_rational(self.content))

    def to_dict(self):
        return {
            'poly': self.poly.to_text(),
            'raw': self.raw.to_text(),
            'content': utils.format_rational(self.content),
            'note': self.note
        }


def principal_a_determinant(instance):

    """
    E_A = +-B_st(det K_P^c(z, u)), requiring a torsion free quotient Z^N / L.

    Raises:
        TorsionException: Z^N / L has torsion.
        DegenerateEvaluationException: B_st kills the complementary determinant.
    """

    structure = quotient_structure(instance.lattice)
    if not structure.torsion_free:
        raise exceptions.TorsionException(structure.torsion_order)

    raw = bst_hom(instance.lattice, instance.quiver, instance.det_complementary)
    if raw.is_zero:
        raise exceptions.DegenerateEvaluationException('B_st(det K_P^c)')

    content, poly = raw.content_and_normalize()

    # pylint: disable=protected-access
    instance._debug('Computed principal A-determinant', terms=len(poly.terms()), content=content)
    return ADeterminant(raw=raw, content=content, poly=poly)


# pylint: disable=too-few-public-methods
class FactorResult(object):

    def __init__(self, factor, quotient):
        self.factor = factor
        self.quotient = quotient

    @property
    def status(self):
        return NOT_DIVISIBLE if self.quotient is None else DIVISIBLE

    def to_dict(self):
        return {
            'factor': self.factor.to_text(),
            'status': self.status,
            'quotient': None if self.quotient is None else self.quotient.to_text()
        }


class FacetReport(object):

    """
    Exact division of E_A by each factor and by the product of all factors.

    Args:
        results (list): One FactorResult per factor.
        product (Poly): The product of the factors.
        quotient (Poly): E_A / product, None when not divisible.
    """

    def __init__(self, results, product, quotient):
        self.results = results
        self.product = product
        self.quotient = quotient

    @property
    def ok(self):
        return all(result.status == DIVISIBLE for result in self.results)

    @property
    def sign(self):

        """
        +1 or -1 when E_A = sign * product, None otherwise.
        """

        if self.quotient is None or not self.quotient.is_constant:
            return None
        value = self.quotient.constant_value()
        return int(value) if value in (1, -1) else None

    def to_dict(self):
        return {
            'factors': [result.to_dict() for result in self.results],
            'product': self.product.to_text(),
            'quotient': None if self.quotient is None else self.quotient.to_text(),
            'sign': self.sign
        }


def facet_divisibility(instance, factors, adet=None):

    """
    Args:
        instance (ProblemInstance): The instance.
        factors (list): Polys in u over the instance variable space.
        adet (:ADeterminant, optional): A precomputed principal A-determinant.

    Returns:
        FacetReport: Per factor quotients and the product check.
    """

    adet = adet or principal_a_determinant(instance)
    target = adet.poly

    results = []
    product = instance.space.one()
    for factor in factors:
        results.append(FactorResult(factor=factor, quotient=target.divide_exact(factor)))
        product = product * factor

    return FacetReport(results=results, product=product, quotient=target.divide_exact(product))


def vertex_coefficient(instance, v):

    """
    The coefficient of u^v in det K_P(z, u), zero when the monomial is absent.
    """

    v = tuple(utils.to_integer(entry) for entry in v)
    if len(v) != instance.lattice.n:
        raise exceptions.InvalidArgumentsException(
            'Expected {0} exponents, got {1}'.format(instance.lattice.n, len(v)))
    return instance.det_standard.coefficient(U, v)


# pylint: disable=too-few-public-methods
class BoundaryLine(object):

    """
    The vertex coefficients of det K_P at the a0 vectors of two adjacent chambers.
    """

    def __init__(self, first, second, left, right):
        self.first = first
        self.second = second
        self.left = left
        self.right = right

    @property
    def complete(self):
        return not self.left.is_zero and not self.right.is_zero

    def to_dict(self):
        return {
            'chambers': [list(self.first), list(self.second)],
            'left': self.left.to_text(),
            'right': self.right.to_text()
        }


def boundary_lines(instance):

    """
    One BoundaryLine per pair of cyclically adjacent chambers of the secondary fan, in fan order.
    """

    chambers = instance.lattice.fan.chambers
    lines = []
    for position, chamber in enumerate(chambers):
        following = chambers[(position + 1) % len(chambers)]
        line = BoundaryLine(first=chamber.a0_raw,
                            second=following.a0_raw,
                            left=vertex_coefficient(instance, chamber.a0_raw),
                            right=vertex_coefficient(instance, following.a0_raw))
        if not line.complete:
            _logger.warn('Chamber weight is not a vertex of det K_P',
                         first=list(chamber.a0_raw), second=list(following.a0_raw))
        lines.append(line)
    return lines
