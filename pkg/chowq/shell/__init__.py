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

import traceback
from functools import wraps

import click

from chowq.api import exceptions as api_exceptions
from chowq.api.document import FIXTURES
from chowq.shell import causes
from chowq.shell import solutions
from chowq.shell.exceptions import ShellException
from chowq.shell.exceptions import TerminationException

PARSE_ERROR_EXIT_CODE = 2


def explain(e):

    """
    Attaches a cause and possible solutions to well known API errors, unless the command already
    did.
    """

    if getattr(e, 'cause', None) or getattr(e, 'possible_solutions', None):
        return e

    if isinstance(e, api_exceptions.FixtureNotFoundException):
        e.cause = causes.unknown_fixture(e.name)
        e.possible_solutions = [solutions.use_fixture(FIXTURES)]
    elif isinstance(e, api_exceptions.DocumentParseException):
        e.possible_solutions = [solutions.fix_document(e.source), solutions.check_exact_numbers()]
    elif isinstance(e, api_exceptions.ConditionViolatedException):
        e.cause = causes.condition_violated(e.condition)
        e.possible_solutions = [solutions.run_validate()]
    elif isinstance(e, api_exceptions.InfeasibleEpsilonsException):
        e.cause = causes.infeasible_epsilons(e.infeasibility.certificate)
        e.possible_solutions = [solutions.run_validate()]
    elif isinstance(e, api_exceptions.TorsionException):
        e.cause = causes.torsion(e.torsion_order)
    elif isinstance(e, api_exceptions.DegenerateEvaluationException):
        e.cause = causes.degenerate(e.what)
        e.possible_solutions = [solutions.general_position('point or line')]
    return e


def handle_exceptions(func):

    @wraps(func)
    def wrapper(*args, **kwargs):

        try:
            return func(*args, **kwargs)
        except api_exceptions.DocumentParseException as e:
            raise TerminationException(str(e), explain(e), traceback.format_exc(),
                                       exit_code=PARSE_ERROR_EXIT_CODE)
        except (api_exceptions.ApiException, ShellException) as e:
            raise TerminationException(str(e), explain(e), traceback.format_exc())
        except click.ClickException:
            raise
        except BaseException as be:
            message = str(be) \
                      + '\n\n' \
                      + 'If you see this message, you probably encountered a bug. ' \
                        'Please report it together with the command you ran.'
            raise TerminationException(message, be, traceback.format_exc())

    return wrapper
