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

import json

from chowq.api.orbit.orbit import chow_form
from chowq.tests.resources import golden


def test_chowform(chowq, triangle):

    result = chowq.run('--fixture triangle chowform --point ones')

    assert result.std_out.strip() == chow_form(triangle, [1, 1, 1]).to_text()


def test_chowform_structured(chowq):

    data = json.loads(chowq.run('--fixture dp3 --format structured chowform '
                                '--point generic').std_out)

    assert data['degree'] == 3


def test_chowform_outside_torus(chowq):

    result = chowq.run('--fixture triangle chowform --point 1,0,1', catch_exceptions=True)

    assert result.return_code == 1


def test_orbit_invariant(chowq):

    result = chowq.run('--fixture triangle orbit-invariant --point sample')

    assert result.std_out.strip() == '+ 2 * z1 + 6 * z2 + 3 * z3'


def test_orbit_invariant_projective(chowq):

    result = chowq.run('--fixture triangle orbit-invariant --point 2,4,6 --projective')

    assert result.std_out.strip() == '+ 2 * z1 + 6 * z2 + 3 * z3'


def test_line_image(chowq):

    result = chowq.run('--fixture triangle line-image --line coordinate')

    assert result.std_out.strip() == '+ 1 * u3'


def test_line_image_lattice(chowq):

    result = chowq.run('--fixture dp3 line-image --line lattice')

    assert result.std_out.strip() == golden('adet_dp3')


def test_line_image_degenerate(chowq):

    result = chowq.run("--fixture dp3 line-image --line '1,0,0,0,0,0;0,0,0,1,0,0'",
                       catch_exceptions=True)

    assert result.return_code == 1
    assert 'general position' in result.std_err


def test_incidence_vanishes(chowq):

    result = chowq.run("--fixture triangle incidence --line '1,2,3;1,0,0' --point 2,2,3")

    assert result.std_out.splitlines() == ['0', 'vanishes']


def test_incidence_does_not_vanish(chowq):

    result = chowq.run('--fixture triangle incidence --line coordinate --point ones')

    assert result.std_out.splitlines() == ['1', 'does not vanish']


def test_vertex_coeff(chowq):

    result = chowq.run('--fixture dp3 vertex-coeff --exponents 1,2,2,1,0,0')

    assert result.std_out.strip() == '+ 1 * z1 z8 z12'


def test_vertex_coeff_absent(chowq):

    result = chowq.run('--fixture dp3 vertex-coeff --exponents 9,0,0,0,0,0')

    assert result.std_out.strip() == '0'


def test_vertex_coeff_malformed(chowq):

    result = chowq.run('--fixture dp3 vertex-coeff --exponents 1,a', catch_exceptions=True)

    assert result.return_code == 2


def test_boundary_lines(chowq):

    lines = chowq.run('--fixture dp3 boundary-lines').std_out.splitlines()

    assert len(lines) == 6
    assert lines[1] == '(1, 2, 2, 1, 0, 0) | (0, 1, 2, 2, 1, 0): + 1 * z1 z8 z12 | ' \
                       '- 1 * z5 z8 z10'


def test_plucker(chowq):

    lines = chowq.run('--fixture triangle plucker --line coordinate').std_out.splitlines()

    assert lines == ['Y[1][2] = 1', 'Y[1][3] = 0', 'Y[2][3] = 0']


def test_plucker_rank_deficient(chowq):

    result = chowq.run("--fixture triangle plucker --line '1,2,3;2,4,6'", catch_exceptions=True)

    assert result.return_code == 1


def test_adet(chowq):

    lines = chowq.run('--fixture dp3 adet').std_out.splitlines()

    assert lines[0] == golden('adet_dp3')
    assert lines[1] == 'content: -1'
    assert len([line for line in lines if line.startswith('Divisible: ')]) == 4
    assert lines[-1] == 'product: E_A = -1 * product'


def test_adet_extra_factor(chowq):

    result = chowq.run("--fixture dp3 adet --factor 'u1*u2 - u3*u4'")
    lines = result.std_out.splitlines()

    assert len([line for line in lines if line.startswith('NotDivisible: ')]) == 1
    assert lines[-1] == 'product: NotDivisible'


def test_adet_triangle(chowq):

    lines = chowq.run('--fixture triangle adet').std_out.splitlines()

    assert lines == ['+ 1 * u1 + 1 * u2 + 1 * u3', 'content: 1']


def test_adet_structured(chowq):

    data = json.loads(chowq.run('--fixture dp3 --format structured adet').std_out)

    assert data['content'] == '-1'
    assert data['facets']['sign'] == -1
