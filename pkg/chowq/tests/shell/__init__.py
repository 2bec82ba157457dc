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

import shlex

from click.testing import CliRunner

from chowq.api import logger
from chowq.shell.main import app


class CommandFailedException(Exception):

    def __init__(self, response):
        self.response = response
        super(CommandFailedException, self).__init__(
            'Command {0} exited with {1}: {2}'.format(response.command,
                                                     response.return_code,
                                                     response.std_err))


# pylint: disable=too-few-public-methods
class CommandResponse(object):

    def __init__(self, command, std_out, std_err, return_code):
        self.command = command
        self.std_out = std_out
        self.std_err = std_err
        self.return_code = return_code


# pylint: disable=too-few-public-methods
class ChowQ(object):

    """
    Invokes the chowq command line in process. Results and progress are captured separately.
    """

    def __init__(self, log=None):
        self._logger = log or logger.Logger(__name__)
        self._click_runner = CliRunner(mix_stderr=False)

    def run(self, command, catch_exceptions=False):

        self._logger.info('Invoking command: {0}'.format(command))

        result = self._click_runner.invoke(app, shlex.split(command), catch_exceptions=True)

        response = CommandResponse(command=command,
                                   std_out=result.stdout,
                                   std_err=result.stderr,
                                   return_code=result.exit_code)

        if response.return_code != 0 and not catch_exceptions:
            raise CommandFailedException(response)

        return response
