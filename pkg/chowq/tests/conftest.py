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

import random

import pytest

from chowq.api.document import ProblemDocument
from chowq.tests.shell import ChowQ

SEED = 20181103


@pytest.fixture(name='dp3_document')
def _dp3_document():
    return ProblemDocument.fixture('dp3')


@pytest.fixture(name='triangle_document')
def _triangle_document():
    return ProblemDocument.fixture('triangle')


@pytest.fixture(name='dp3_lattice')
def _dp3_lattice(dp3_document):
    return dp3_document.lattice()


@pytest.fixture(name='dp3_quiver')
def _dp3_quiver(dp3_document):
    return dp3_document.quiver()


@pytest.fixture(name='triangle_lattice')
def _triangle_lattice(triangle_document):
    return triangle_document.lattice()


@pytest.fixture(name='triangle_quiver')
def _triangle_quiver(triangle_document):
    return triangle_document.quiver()


# instances are expensive to validate and immutable once built
@pytest.fixture(name='dp3', scope='session')
def _dp3():
    return ProblemDocument.fixture('dp3').instance()


@pytest.fixture(name='triangle', scope='session')
def _triangle():
    return ProblemDocument.fixture('triangle').instance()


@pytest.fixture(name='rng')
def _rng():
    return random.Random(SEED)


@pytest.fixture(name='chowq', scope='session')
def _chowq():
    return ChowQ()
