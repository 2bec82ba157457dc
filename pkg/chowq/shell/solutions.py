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


def run_validate():
    return "Run 'chowq validate' to list every check together with its violations"


def use_fixture(available):
    return 'Use one of the bundled fixtures: {0}'.format(', '.join(available))


def general_position(option):
    return 'Pick a {0} in general position'.format(option)


def fix_document(source):
    return 'Fix {0} and try again'.format(source)


def check_exact_numbers():
    return "Write numbers as integers or 'p/q' rationals, floating point values are rejected"
