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

import click

from chowq.api import exceptions
from chowq.api import utils
from chowq.api.grassmann.grassmann import pluecker_coords
from chowq.api.orbit.orbit import NOT_DIVISIBLE
from chowq.api.orbit.orbit import affine_orbit_invariant
from chowq.api.orbit.orbit import boundary_lines
from chowq.api.orbit.orbit import chow_degree
from chowq.api.orbit.orbit import chow_map_point
from chowq.api.orbit.orbit import facet_divisibility
from chowq.api.orbit.orbit import incidence_value
from chowq.api.orbit.orbit import line_image_equation
from chowq.api.orbit.orbit import principal_a_determinant
from chowq.api.orbit.orbit import projective_orbit_invariant
from chowq.api.orbit.orbit import vertex_coefficient
from chowq.shell import handle_exceptions
from chowq.shell import help as chowq_help
from chowq.shell import logger

log = logger.get()


point_option = click.option('--point', required=True, help=chowq_help.POINT)
line_option = click.option('--line', required=True, help=chowq_help.LINE)


def _point(ctx, value):
    return ctx.obj.document.point(value, ctx.obj.lattice.n)


@click.command()
@click.pass_context
@point_option
@handle_exceptions
def chowform(ctx, point):

    """
    Show the Chow form of the closure of the orbit of a point.

    The form is det K_P^c(y(z), u) at the point, normalized, written in the entries y_r,j of a
    line (Y_km = y1,k y2,m - y2,k y1,m). It vanishes exactly on the lines meeting the orbit
    closure.
    """

    instance = ctx.obj.instance
    form = chow_map_point(instance, _point(ctx, point), projective=True)
    ctx.obj.emit(form.to_text(), {'chow_form': form.to_text(),
                                  'degree': chow_degree(instance, form)})


@click.command(name='orbit-invariant')
@click.pass_context
@point_option
@click.option('--projective', is_flag=True,
              help=chowq_help.PROJECTIVE)
@handle_exceptions
def orbit_invariant(ctx, point, projective):

    """
    Show det K_P(z, u) at a point, a polynomial in z that only depends on the orbit of u.
    """

    instance = ctx.obj.instance
    u = _point(ctx, point)
    if projective:
        image = projective_orbit_invariant(instance, u)
    else:
        image = affine_orbit_invariant(instance, u)
    ctx.obj.emit(image.to_text(), {'invariant': image.to_text(), 'projective': projective})


@click.command(name='line-image')
@click.pass_context
@line_option
@handle_exceptions
def line_image(ctx, line):

    """
    Show the equation in u of the image of a line in the Chow quotient.
    """

    image = line_image_equation(ctx.obj.instance, ctx.obj.document.line(line))
    ctx.obj.emit(image.to_text(), {'equation': image.to_text()})


@click.command()
@click.pass_context
@line_option
@point_option
@handle_exceptions
def incidence(ctx, line, point):

    """
    Evaluate det K_P^c at z_e = Y_s(e)t(e) of a line and at a point. The value is zero whenever
    the point lies on the line.
    """

    value = incidence_value(ctx.obj.instance, ctx.obj.document.line(line), _point(ctx, point))
    text = '{0}\n{1}'.format(utils.format_rational(value),
                             'vanishes' if value == 0 else 'does not vanish')
    ctx.obj.emit(text, {'value': utils.format_rational(value), 'vanishes': value == 0})


@click.command(name='vertex-coeff')
@click.pass_context
@click.option('--exponents', required=True,
              help=chowq_help.EXPONENTS)
@handle_exceptions
def vertex_coeff(ctx, exponents):

    """
    Show the coefficient of u^v in det K_P, a polynomial in z (0 when absent).
    """

    try:
        vector = utils.parse_vector(exponents, integer=True)
    except exceptions.InvalidArgumentsException as e:
        raise exceptions.DocumentParseException(source="exponents '{0}'".format(exponents),
                                                reason=str(e))

    coefficient = vertex_coefficient(ctx.obj.instance, vector)
    ctx.obj.emit(coefficient.to_text(), {'exponents': list(vector),
                                         'coefficient': coefficient.to_text()})


@click.command(name='boundary-lines')
@click.pass_context
@handle_exceptions
def boundaries(ctx):

    """
    Show the vertex coefficients of det K_P at the a0 vectors of every two adjacent chambers of
    the secondary fan.
    """

    lines = boundary_lines(ctx.obj.instance)
    text = '\n'.join('{0} | {1}: {2} | {3}'.format(utils.format_vector(line.first),
                                                   utils.format_vector(line.second),
                                                   line.left.to_text(),
                                                   line.right.to_text())
                     for line in lines)
    ctx.obj.emit(text, {'lines': [line.to_dict() for line in lines]})


@click.command()
@click.pass_context
@line_option
@handle_exceptions
def plucker(ctx, line):

    """
    Show the Pluecker coordinates Y[k][m] (k < m) of a line.
    """

    coords = pluecker_coords(ctx.obj.document.line(line))
    keyed = [('Y[{0}][{1}]'.format(k, m), utils.format_rational(coords[(k, m)]))
             for k, m in sorted(coords)]
    ctx.obj.emit('\n'.join('{0} = {1}'.format(key, value) for key, value in keyed),
                 dict(keyed))


@click.command()
@click.pass_context
@click.option('--factor', 'factors', multiple=True,
              help=chowq_help.FACTOR)
@handle_exceptions
def adet(ctx, factors):

    """
    Show the principal A-determinant E_A.

    E_A is computed by evaluating det K_P^c at the point of the Grassmannian given by the lattice
    and is only defined up to sign: the printed polynomial has a positive least term and the
    content line relates it to the raw value. Candidate factors (the document's, then every
    --factor) are checked by exact division, one by one and as a product.
    """

    instance = ctx.obj.instance

    log.echo('Computing principal A-determinant...', break_line=False)
    try:
        result = principal_a_determinant(instance)
        log.checkmark()
    except BaseException:
        log.xmark()
        raise

    candidates = ctx.obj.document.factor_polys(instance.space, extra=factors)

    lines = [result.poly.to_text(),
             'content: {0}'.format(utils.format_rational(result.content))]
    data = result.to_dict()

    if candidates:
        report = facet_divisibility(instance, candidates, adet=result)
        for factor in report.results:
            lines.append('{0}: {1}'.format(factor.status, factor.factor.to_text()))
        if report.sign is not None:
            lines.append('product: E_A = {0} * product'.format(report.sign))
        elif report.quotient is not None:
            lines.append('product: divides E_A, quotient {0}'.format(report.quotient.to_text()))
        else:
            lines.append('product: {0}'.format(NOT_DIVISIBLE))
        data['facets'] = report.to_dict()

    ctx.obj.emit('\n'.join(lines), data)
