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


def condition_violated(condition):
    return '{0} was checked on the lattice and quiver of the problem document and at least one ' \
           'of its requirements does not hold.'.format(condition)


def infeasible_epsilons(certificate):
    return 'Propagating the epsilon weights along a spanning tree of the cell graph produced ' \
           'values that violate {0} modulo the lattice.'.format(
               'the global sum' if certificate == 'sum' else 'the congruence of edge {0}'.format(
                   certificate))


def torsion(order):
    return 'The principal A-determinant is computed from the complementary determinant only when ' \
           'Z^N / L is torsion free, here the torsion subgroup has order {0}.'.format(order)


def degenerate(what):
    return '{0} is zero, so it has no normalized representative.'.format(what)


def unknown_fixture(name):
    return "There is no bundled fixture named '{0}'.".format(name)
