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

class ApiException(BaseException):
    pass


class InvalidArgumentsException(ApiException):

    def __init__(self, message):
        self.message = message
        super(InvalidArgumentsException, self).__init__(self.__str__())

    def __str__(self):
        return self.message


class DocumentParseException(ApiException):

    def __init__(self, source, reason):
        self.source = source
        self.reason = reason
        super(DocumentParseException, self).__init__(self.__str__())

    def __str__(self):
        return 'Failed parsing {0}: {1}'.format(self.source, self.reason)


class FixtureNotFoundException(DocumentParseException):

    def __init__(self, name, available):
        self.name = name
        self.available = available
        super(FixtureNotFoundException, self).__init__(
            source='fixture {0}'.format(name),
            reason='no such fixture (available: {0})'.format(', '.join(available)))


class PolyParseException(DocumentParseException):

    def __init__(self, text, reason):
        self.text = text
        super(PolyParseException, self).__init__(source="polynomial '{0}'".format(text),
                                                 reason=reason)


class ValidationFailedException(ApiException):
    pass


class LatticeValidationException(ValidationFailedException):

    def __init__(self, report):
        self.report = report
        super(LatticeValidationException, self).__init__(self.__str__())

    def __str__(self):
        return 'Invalid lattice: {0}'.format(self.report.summary())


class ConditionViolatedException(ValidationFailedException):

    def __init__(self, condition, report):
        self.condition = condition
        self.report = report
        super(ConditionViolatedException, self).__init__(self.__str__())

    def __str__(self):
        return '{0} does not hold: {1}'.format(self.condition, self.report.summary())


class InfeasibleEpsilonsException(ValidationFailedException):

    def __init__(self, infeasibility):
        self.infeasibility = infeasibility
        super(InfeasibleEpsilonsException, self).__init__(self.__str__())

    def __str__(self):
        return 'Condition 2 has no solution: {0}'.format(self.infeasibility.message)


class ZeroPolynomialException(ApiException):

    def __init__(self, operation):
        self.operation = operation
        super(ZeroPolynomialException, self).__init__(self.__str__())

    def __str__(self):
        return 'Cannot {0} the zero polynomial'.format(self.operation)


class VariableSpaceMismatchException(ApiException):

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super(VariableSpaceMismatchException, self).__init__(self.__str__())

    def __str__(self):
        return 'Polynomials live in different variable spaces: {0} and {1}'.format(
            self.first, self.second)


class UnknownVariableException(ApiException):

    def __init__(self, name, space):
        self.name = name
        self.space = space
        super(UnknownVariableException, self).__init__(self.__str__())

    def __str__(self):
        return 'Variable {0} does not exist in {1}'.format(self.name, self.space)


class UnknownEdgeVariableException(UnknownVariableException):

    def __init__(self, edge, space):
        self.edge = edge
        super(UnknownEdgeVariableException, self).__init__(name='z{0}'.format(edge), space=space)

    def __str__(self):
        return 'Variable z{0} does not correspond to an edge of the quiver'.format(self.edge)


class NonSquareMatrixException(ApiException):

    def __init__(self, n_rows, n_cols):
        self.n_rows = n_rows
        self.n_cols = n_cols
        super(NonSquareMatrixException, self).__init__(self.__str__())

    def __str__(self):
        return 'Determinant requires a non-empty square matrix, got {0}x{1}'.format(
            self.n_rows, self.n_cols)


class RankDeficientException(ApiException):

    def __init__(self, what):
        self.what = what
        super(RankDeficientException, self).__init__(self.__str__())

    def __str__(self):
        return '{0} does not have rank 2'.format(self.what)


class VectorOnRayException(ApiException):

    def __init__(self, vector):
        self.vector = vector
        super(VectorOnRayException, self).__init__(self.__str__())

    def __str__(self):
        return 'Vector {0} lies on a ray of the secondary fan'.format(list(self.vector))


class KernelMembershipException(ApiException):

    def __init__(self, vector):
        self.vector = vector
        super(KernelMembershipException, self).__init__(self.__str__())

    def __str__(self):
        return 'Vector {0} is not annihilated by the lattice basis'.format(list(self.vector))


class InconsistentWeightException(ApiException):

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super(InconsistentWeightException, self).__init__(self.__str__())

    def __str__(self):
        return 'Chamber weights {0} and {1} are not congruent modulo the lattice'.format(
            list(self.first), list(self.second))


class DegenerateEvaluationException(ApiException):

    def __init__(self, what):
        self.what = what
        super(DegenerateEvaluationException, self).__init__(self.__str__())

    def __str__(self):
        return '{0} vanishes identically'.format(self.what)


class TorsionException(ApiException):

    def __init__(self, torsion_order):
        self.torsion_order = torsion_order
        super(TorsionException, self).__init__(self.__str__())

    def __str__(self):
        return 'The quotient by the lattice has torsion of order {0}; the principal ' \
               'A-determinant formula requires a torsion free quotient'.format(self.torsion_order)


class DegreeMismatchException(ApiException):

    def __init__(self, degree, nu):
        self.degree = degree
        self.nu = nu
        super(DegreeMismatchException, self).__init__(self.__str__())

    def __str__(self):
        return 'Pluecker degree {0} differs from nu = {1}'.format(self.degree, self.nu)
