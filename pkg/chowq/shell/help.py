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

DEBUG = 'Show debug messages.'

FIXTURE = 'Name of a bundled problem (dp3, triangle). Used when --document is not given, ' \
          'defaults to dp3.'

DOCUMENT = 'Path to a JSON problem document with the keys lattice, quiver and optionally ' \
           'epsilons, points, lines and factors.'

FORMAT = "Output format. 'text' prints canonical polynomial text, 'structured' prints JSON."

POINT = "A point of the torus: comma separated rationals (e.g '1,2,3/2') or the name of one " \
        "of the document's points."

LINE = "A line: two ';' separated rows of comma separated rationals (e.g '1,0,0;0,1,0') or the " \
       "name of one of the document's lines."

EXPONENTS = 'Comma separated integer exponents of a u monomial, one per node.'

COMPLEMENTARY = 'Use the complementary matrix (u_1...u_N times K_P at inverted u).'

PROJECTIVE = 'Normalize the result (content removed, least term positive).'

FACTOR = "A candidate factor in sympy syntax (e.g 'u1*u2 - u4*u5'). May be repeated, adds to the " \
         "document's factors."

SOLVE = "Solve Condition 2 even when the document supplies epsilon weights."
