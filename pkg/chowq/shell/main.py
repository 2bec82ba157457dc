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

import logging

import click

from chowq.api import logger as api_logger
from chowq.shell import handle_exceptions
from chowq.shell import help as chowq_help
from chowq.shell import logger as shell_logger
from chowq.shell.commands import lattice
from chowq.shell.commands import orbit
from chowq.shell.commands import quiver
from chowq.shell.commands import validate
from chowq.shell.context import FORMATS
from chowq.shell.context import TEXT
from chowq.shell.context import Context


@click.group()
@click.option('--debug', is_flag=True,
              help=chowq_help.DEBUG)
@click.option('--fixture', required=False,
              help=chowq_help.FIXTURE)
@click.option('--document', required=False,
              help=chowq_help.DOCUMENT)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default=TEXT,
              help=chowq_help.FORMAT)
@click.pass_context
@handle_exceptions
def app(ctx, debug, fixture, document, fmt):

    """
    Chow quotients of toric varieties from quivers with superpotential.

    A problem is a rank 2 lattice L in Z^N (two integer rows summing to zero) together with a
    quiver whose arrows bound black and white cells. Problems are read from a bundled fixture
    (--fixture) or a JSON document (--document).

    All numbers are exact and polynomials are printed in a canonical text format, e.g

        + 1 * z1 u1 u2 - 3/2 * u3^2
    """

    if fixture and document:
        raise click.UsageError('Use either --fixture or --document, not both')

    if debug:
        api_logger.set_default_level(logging.DEBUG)
        shell_logger.get().logger.set_level(logging.DEBUG)

    ctx.obj = Context(fixture=fixture, document_path=document, fmt=fmt)


app.add_command(validate.validate)
app.add_command(lattice.fan)
app.add_command(lattice.a0)
app.add_command(lattice.quotient)
app.add_command(quiver.epsilons)
app.add_command(quiver.biadjacency)
app.add_command(quiver.det)
app.add_command(orbit.chowform)
app.add_command(orbit.orbit_invariant)
app.add_command(orbit.line_image)
app.add_command(orbit.incidence)
app.add_command(orbit.vertex_coeff)
app.add_command(orbit.boundaries)
app.add_command(orbit.plucker)
app.add_command(orbit.adet)
