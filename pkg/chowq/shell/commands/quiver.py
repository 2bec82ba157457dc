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
from chowq.api.biadjacency.biadjacency import COMPLEMENTARY
from chowq.api.biadjacency.biadjacency import STANDARD
from chowq.api.compat.compat import check_condition2
from chowq.api.compat.compat import require_epsilons
from chowq.api.quiver.quiver import check_condition1
from chowq.shell import handle_exceptions
from chowq.shell import help as chowq_help
from chowq.shell import logger

log = logger.get()


def _flavor(complementary):
    return COMPLEMENTARY if complementary else STANDARD


@click.command()
@click.pass_context
@click.option('--solve', is_flag=True,
              help=chowq_help.SOLVE)
@handle_exceptions
def epsilons(ctx, solve):

    """
    Show the epsilon weights of Condition 2.

    The document's weights are verified and printed when present, otherwise (or with --solve)
    they are solved for, with the smallest black cell at zero.
    """

    lattice = ctx.obj.lattice
    quiver = ctx.obj.quiver

    report = check_condition1(quiver)
    if not report.ok:
        raise exceptions.ConditionViolatedException('Condition 1', report)

    eps = None if solve else ctx.obj.document.epsilon_assignment()

    if eps is None:
        log.echo('Solving Condition 2...', break_line=False)
        try:
            eps = require_epsilons(lattice, quiver)
            log.checkmark()
        except exceptions.InfeasibleEpsilonsException:
            log.xmark()
            raise
    else:
        log.echo('Verifying Condition 2...', break_line=False)
        report = check_condition2(lattice, quiver, eps)
        if not report.ok:
            log.xmark()
            raise exceptions.ConditionViolatedException('Condition 2', report)
        log.checkmark()

    lines = ['{0}: {1}'.format(cell, utils.format_vector(eps.eps(cell).raw))
             for cell in quiver.black_cells + quiver.white_cells]
    lines.append('k: {0}'.format(eps.k))
    ctx.obj.emit('\n'.join(lines), eps.to_dict())


@click.command()
@click.pass_context
@click.option('--complementary', is_flag=True,
              help=chowq_help.COMPLEMENTARY)
@handle_exceptions
def biadjacency(ctx, complementary):

    """
    Show the biadjacency matrix K_P, one 'black white: entry' line per entry.
    """

    instance = ctx.obj.instance
    matrix = instance.complementary if complementary else instance.standard

    lines = []
    for black in matrix.matrix.row_labels:
        for white in matrix.matrix.col_labels:
            lines.append('{0} {1}: {2}'.format(black, white, matrix.entry(black, white).to_text()))

    ctx.obj.emit('\n'.join(lines), matrix.to_dict())


@click.command()
@click.pass_context
@click.option('--complementary', is_flag=True,
              help=chowq_help.COMPLEMENTARY)
@handle_exceptions
def det(ctx, complementary):

    """
    Show det K_P (or det K_P^c) in the canonical text format.
    """

    instance = ctx.obj.instance
    determinant = instance.det_complementary if complementary else instance.det_standard

    ctx.obj.emit(determinant.to_text(), {'flavor': _flavor(complementary),
                                         'det': determinant.to_text()})
