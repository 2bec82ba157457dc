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
import os
import platform

import click

from chowq.api.logger import Logger as ApiLogger

CHECK_MARK = '✓'
X_MARK = '✗'

ASTRIX = '*'


def get():
    return log


def is_windows():
    return platform.system().lower() == 'windows'


class _Logger(object):

    """
    Human facing output of the shell.

    Progress lines (echo, checkmark, xmark, error) go to stderr. Command results go to stdout
    through result, unprefixed, so that they can be piped and compared byte by byte.
    """

    INDENT_SIZE = 2

    def __init__(self):

        self._indent = 0
        self._last_break_line = True

        self._logger = ApiLogger(name='chowq')

    @property
    def logger(self):
        return self._logger

    def sub(self):
        self._indent = self._indent - self.INDENT_SIZE

    def add(self):
        self._indent = self._indent + self.INDENT_SIZE

    def checkmark(self):
        self._unicode(' {}'.format(CHECK_MARK), break_line=True, fg='green')
        self._last_break_line = True

    def xmark(self):
        self._unicode(' {}'.format(X_MARK), break_line=True, fg='red')
        self._last_break_line = True

    def echo(self, message, fg=None, break_line=True, prefix=True):
        if self._is_debug():
            self.debug(message)
            return

        if self._last_break_line and prefix:
            click.echo(' ' * self._indent, nl=False, err=True)
            click.secho('{} '.format(ASTRIX), nl=False, err=True)

        if break_line:
            message = message + os.linesep

        self._last_break_line = break_line
        click.secho(message, nl=False, fg=fg, err=True)

    def result(self, text):
        click.echo(text)

    def info(self, message):
        self._logger.info(message)

    def debug(self, message):
        self._logger.debug(message)

    def warn(self, message):
        self._logger.warn(message)

    def error(self, message):
        if self._is_debug():
            self._logger.error(message)
        else:
            self.echo('ERROR: {}'.format(message), prefix=False, fg='red')

    def _is_debug(self):
        return self._logger.logger.isEnabledFor(logging.DEBUG)

    def _unicode(self, char, fg=None, break_line=True):
        if self._is_debug():
            return
        if is_windows():
            # the legacy windows console cannot always encode these
            click.echo('', nl=break_line, err=True)
        else:
            click.secho(char, nl=break_line, fg=fg, err=True)


log = _Logger()
