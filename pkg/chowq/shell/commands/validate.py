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
from chowq.api.orbit.orbit import validate_problem
from chowq.shell import handle_exceptions
from chowq.shell import help as chowq_help
from chowq.shell import logger

log = logger.get()


@click.command()
@click.pass_context
@click.option('--solve', is_flag=True,
              help=chowq_help.SOLVE)
@handle_exceptions
def validate(ctx, solve):

    """
    Validate a problem.

    Checks, in order, that the lattice is well presented, that the quiver matches it and
    satisfies Condition 1, that Condition 2 holds (for the document's epsilon weights, or for the
    solved ones when the document has none), that K_P is homogeneous and that the degree
    identities hold. Every check is listed together with its verdict.

    Exits with 1 when any check fails.
    """

    log.echo('Validating lattice...', break_line=False)
    try:
        lattice = ctx.obj.lattice
        log.checkmark()
    except exceptions.LatticeValidationException as e:
        log.xmark()
        ctx.obj.emit(e.report.render(), e.report.to_dict())
        raise

    log.echo('Reading quiver...', break_line=False)
    try:
        quiver = ctx.obj.quiver
        log.checkmark()
    except BaseException:
        log.xmark()
        raise

    eps = None if solve else ctx.obj.document.epsilon_assignment()

    log.echo('Checking conditions...', break_line=False)
    validation = validate_problem(lattice, quiver, eps)
    if validation.report.ok:
        log.checkmark()
    else:
        log.xmark()

    ctx.obj.emit(validation.report.render(), validation.to_dict())

    if not validation.report.ok:
        raise exceptions.ConditionViolatedException('Problem validation', validation.report)
