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

from chowq.api import utils
from chowq.api.lattice.lattice import hbar
from chowq.api.lattice.lattice import kernel_basis
from chowq.api.lattice.lattice import quotient_structure
from chowq.resources import render_template
from chowq.shell import handle_exceptions


def _pairs(pairs):
    return ' '.join('{{{0},{1}}}'.format(i, j) for i, j in sorted(pairs))


@click.command()
@click.pass_context
@handle_exceptions
def fan(ctx):

    """
    Show the secondary fan of the lattice.

    Rays are the primitive directions of the columns of B, counterclockwise from the positive x
    axis. Each chamber lists the index pairs whose cone contains it and its a0 vector.
    """

    secondary_fan = ctx.obj.lattice.fan

    rays = [{'direction': utils.format_vector(ray.direction),
             'columns': ', '.join(str(index) for index in ray.indices)}
            for ray in secondary_fan.rays]
    chambers = [{'representative': utils.format_vector(chamber.representative),
                 'first': utils.format_vector(chamber.first.direction),
                 'second': utils.format_vector(chamber.second.direction),
                 'pairs': _pairs(chamber.pairs),
                 'a0': utils.format_vector(chamber.a0_raw)}
                for chamber in secondary_fan.chambers]

    ctx.obj.emit(render_template('fan', rays=rays, chambers=chambers), secondary_fan.to_dict())


@click.command()
@click.pass_context
@handle_exceptions
def a0(ctx):

    """
    Show the weight a0.

    The class is printed through the a0 vector of the first chamber, followed by the a0 vector
    of every chamber. All of them agree modulo L.
    """

    weight = ctx.obj.lattice.a0

    lines = ['class: {0} mod L (hbar {1})'.format(utils.format_vector(weight.weight.raw),
                                                  hbar(weight.weight))]
    for representative, raw in weight.raw_by_chamber:
        lines.append('chamber {0}: {1}'.format(utils.format_vector(representative),
                                               utils.format_vector(raw)))

    ctx.obj.emit('\n'.join(lines), weight.to_dict())


@click.command()
@click.pass_context
@handle_exceptions
def quotient(ctx):

    """
    Show the structure of Z^N / L and a basis of the characters vanishing on L.
    """

    lattice = ctx.obj.lattice
    structure = quotient_structure(lattice)
    kernel = kernel_basis(lattice)

    text = render_template('quotient',
                           free_rank=structure.free_rank,
                           invariant_factors=', '.join(str(f) for f in structure.invariant_factors),
                           torsion_order=structure.torsion_order,
                           kernel=[utils.format_vector(vector) for vector in kernel])

    data = structure.to_dict()
    data['kernel'] = [list(vector) for vector in kernel]
    ctx.obj.emit(text, data)
