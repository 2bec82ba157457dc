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

from boltons.cacheutils import cachedproperty

from chowq.api.document import ProblemDocument
from chowq.api.orbit.orbit import ProblemInstance
from chowq.shell import logger

TEXT = 'text'
STRUCTURED = 'structured'

FORMATS = (TEXT, STRUCTURED)

DEFAULT_FIXTURE = 'dp3'

log = logger.get()


class Context(object):

    """
    Shell state shared by all commands (ctx.obj). The document and everything derived from it is
    loaded lazily, on first use by a command.

    Args:
        fixture (str): Name of a bundled fixture, ignored when document_path is given.
        document_path (str): Path to a JSON problem document.
        fmt (str): TEXT or STRUCTURED.
    """

    def __init__(self, fixture=None, document_path=None, fmt=TEXT):
        super(Context, self).__init__()
        self.fixture = fixture
        self.document_path = document_path
        self.fmt = fmt

    @property
    def structured(self):
        return self.fmt == STRUCTURED

    @cachedproperty
    def document(self):
        if self.document_path:
            return ProblemDocument.load(self.document_path)
        return ProblemDocument.fixture(self.fixture or DEFAULT_FIXTURE)

    @cachedproperty
    def lattice(self):
        return self.document.lattice()

    @cachedproperty
    def quiver(self):
        return self.document.quiver()

    @cachedproperty
    def instance(self):
        return ProblemInstance.create(self.lattice, self.quiver, self.document.epsilon_assignment())

    def emit(self, text, data):

        """
        Prints a command result: the text in text mode, or data as sorted, indented JSON in
        structured mode.
        """

        if self.structured:
            log.result(json.dumps(data, indent=2, sort_keys=True))
        else:
            log.result(text)
