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

from chowq.resources import render_template


# pylint: disable=too-few-public-methods
class Violation(object):

    def __init__(self, check, subject, message):
        self.check = check
        self.subject = subject
        self.message = message

    def __eq__(self, other):
        return isinstance(other, Violation) and \
            (self.check, self.subject, self.message) == (other.check, other.subject, other.message)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.check, self.subject, self.message))

    def __repr__(self):
        return 'Violation({0}, {1}, {2})'.format(self.check, self.subject, self.message)

    def to_dict(self):
        return {
            'check': self.check,
            'subject': self.subject,
            'message': self.message
        }


class ValidationReport(object):

    """
    Collects the outcome of one or more named checks.

    Checks are registered in the order they run, whether they pass or not, so a rendered report
    lists every check together with its verdict. Violations carry the name of the check that
    produced them and the offending subject (a node, edge, cell, chamber or weight).

    Args:
        checks (:list, optional): Names of checks that ran.
        violations (:list, optional): Violations found so far.
    """

    def __init__(self, checks=None, violations=None):
        self._checks = list(checks or [])
        self._violations = list(violations or [])

    @property
    def checks(self):
        return list(self._checks)

    @property
    def violations(self):
        return list(self._violations)

    @property
    def ok(self):
        return not self._violations

    def ran(self, check):
        if check not in self._checks:
            self._checks.append(check)
        return self

    def add(self, check, subject, message):
        self.ran(check)
        self._violations.append(Violation(check=check, subject=subject, message=message))
        return self

    def merge(self, other):
        for check in other.checks:
            self.ran(check)
        self._violations.extend(other.violations)
        return self

    def violations_of(self, check):
        return [violation for violation in self._violations if violation.check == check]

    def passed(self, check):
        return check in self._checks and not self.violations_of(check)

    def summary(self):
        if self.ok:
            return 'all checks passed'
        return '; '.join('[{0}] {1}: {2}'.format(v.check, v.subject, v.message)
                         for v in self._violations)

    def render(self):
        return render_template('report',
                               checks=[(check, self.passed(check)) for check in self._checks],
                               violations=self._violations,
                               ok=self.ok)

    def to_dict(self):
        return {
            'ok': self.ok,
            'checks': [{'name': check, 'passed': self.passed(check)} for check in self._checks],
            'violations': [violation.to_dict() for violation in self._violations]
        }
