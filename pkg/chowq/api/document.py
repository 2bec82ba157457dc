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
import os

from chowq.api import exceptions
from chowq.api import logger
from chowq.api import utils
from chowq.api.compat.compat import EpsilonAssignment
from chowq.api.core.poly import Poly
from chowq.api.grassmann.grassmann import Line
from chowq.api.lattice.lattice import Lattice
from chowq.api.lattice.lattice import Weight
from chowq.api.orbit.orbit import OrbitPoint
from chowq.api.orbit.orbit import ProblemInstance
from chowq.api.quiver.quiver import Edge
from chowq.api.quiver.quiver import Quiver
from chowq.resources import fixture_resource
from chowq.resources import get_text_resource

FIXTURES = ('dp3', 'triangle')

_logger = logger.Logger(__name__)


def _require(data, key, source, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise exceptions.DocumentParseException(source=source,
                                                reason="missing key '{0}'".format(key))
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise exceptions.DocumentParseException(
            source=source, reason="'{0}' must be of type {1}".format(key, kind.__name__))
    return value


def _exact(value, source, integer=False):
    try:
        return utils.to_integer(value) if integer else utils.to_fraction(value)
    except exceptions.InvalidArgumentsException as e:
        raise exceptions.DocumentParseException(source=source, reason=str(e))


def _vector(values, source, integer=False):
    if not isinstance(values, list):
        raise exceptions.DocumentParseException(source=source, reason='expected a list')
    return tuple(_exact(value, source, integer=integer) for value in values)


class ProblemDocument(object):

    """
    The serialized form of a problem: a lattice presentation, a quiver with superpotential and
    optional epsilon weights, named points, named lines and factors of the principal
    A-determinant.

    Documents are JSON objects:

        {
          "name": "triangle",
          "lattice": {"rows": [[1, -1, 0], [0, 1, -1]]},
          "quiver": {"nodes": 3, "edges": [{"id": 1, "s": 1, "t": 2, "black": "b1", "white": "w1"}, ...]},
          "epsilons": {"black": {"b1": [...]}, "white": {"w1": [...]}, "k": 0},
          "points": {"sample": [1, 2, 3]},
          "lines": {"coordinate": [[1, 0, 0], [0, 1, 0]]},
          "factors": ["u1 + u2 + u3"]
        }

    Numbers are integers or 'p/q' strings.
    """

    def __init__(self, name, rows, n_nodes, edges, epsilons=None, points=None, lines=None,
                 factors=None, source=None):
        self.name = name
        self.rows = rows
        self.n_nodes = n_nodes
        self.edges = edges
        self.epsilons = epsilons
        self.points = points or {}
        self.lines = lines or {}
        self.factors = factors or []
        self.source = source or name
        self._logger = logger.Logger(__name__)
        self._log_ctx = {'document': self.source}

    @staticmethod
    def parse(data, source='document'):

        """
        Raises:
            DocumentParseException: Missing keys, wrong types or non exact numbers.
        """

        if not isinstance(data, dict):
            raise exceptions.DocumentParseException(source=source, reason='expected an object')

        name = data.get('name', source)

        lattice = _require(data, 'lattice', source, dict)
        rows = [_vector(row, '{0} lattice'.format(source), integer=True)
                for row in _require(lattice, 'rows', source, list)]
        if len(set(len(row) for row in rows)) > 1:
            raise exceptions.DocumentParseException(
                source='{0} lattice'.format(source),
                reason='rows have different lengths {0}'.format([len(row) for row in rows]))

        quiver = _require(data, 'quiver', source, dict)
        n_nodes = _exact(_require(quiver, 'nodes', source), '{0} quiver'.format(source),
                         integer=True)
        edges = []
        for entry in _require(quiver, 'edges', source, list):
            where = '{0} edge {1}'.format(source, entry.get('id') if isinstance(entry, dict)
                                          else entry)
            edges.append(Edge(edge_id=_exact(_require(entry, 'id', where), where, integer=True),
                              s=_exact(_require(entry, 's', where), where, integer=True),
                              t=_exact(_require(entry, 't', where), where, integer=True),
                              black=str(_require(entry, 'black', where)),
                              white=str(_require(entry, 'white', where))))

        epsilons = None
        if data.get('epsilons') is not None:
            block = _require(data, 'epsilons', source, dict)
            where = '{0} epsilons'.format(source)
            epsilons = {
                'black': dict((str(cell), _vector(vector, where, integer=True))
                              for cell, vector in _require(block, 'black', where, dict).items()),
                'white': dict((str(cell), _vector(vector, where, integer=True))
                              for cell, vector in _require(block, 'white', where, dict).items()),
                'k': None if block.get('k') is None else _exact(block['k'], where, integer=True)
            }

        points = dict((str(key), _vector(value, '{0} point {1}'.format(source, key)))
                      for key, value in (data.get('points') or {}).items())

        lines = {}
        for key, value in (data.get('lines') or {}).items():
            where = '{0} line {1}'.format(source, key)
            if not isinstance(value, list):
                raise exceptions.DocumentParseException(source=where, reason='expected two rows')
            lines[str(key)] = tuple(_vector(row, where) for row in value)

        factors = data.get('factors') or []
        if not isinstance(factors, list) or not all(isinstance(f, str) for f in factors):
            raise exceptions.DocumentParseException(source=source,
                                                    reason="'factors' must be a list of strings")

        return ProblemDocument(name=name, rows=rows, n_nodes=n_nodes, edges=edges,
                               epsilons=epsilons, points=points, lines=lines, factors=factors,
                               source=source)

    @staticmethod
    def loads(text, source='document'):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise exceptions.DocumentParseException(source=source, reason=str(e))
        return ProblemDocument.parse(data, source=source)

    @staticmethod
    def load(path):

        """
        Raises:
            DocumentParseException: The file cannot be read or parsed.
        """

        path = os.path.abspath(path)
        try:
            with open(path) as stream:
                text = stream.read()
        except (IOError, OSError) as e:
            raise exceptions.DocumentParseException(source=path, reason=str(e))
        return ProblemDocument.loads(text, source=path)

    @staticmethod
    def fixture(name):

        """
        Loads one of the bundled fixtures.

        Raises:
            FixtureNotFoundException: No fixture by that name.
        """

        if name not in FIXTURES:
            raise exceptions.FixtureNotFoundException(name, FIXTURES)
        return ProblemDocument.loads(get_text_resource(fixture_resource(name)), source=name)

    def lattice(self):
        return Lattice.create(self.rows)

    def quiver(self):

        """
        Raises:
            DocumentParseException: Edges refer to nodes that do not exist, or ids repeat.
        """

        try:
            return Quiver(self.n_nodes, self.edges)
        except exceptions.InvalidArgumentsException as e:
            raise exceptions.DocumentParseException(source='{0} quiver'.format(self.source),
                                                    reason=str(e))

    def epsilon_assignment(self):
        if self.epsilons is None:
            return None
        return EpsilonAssignment(
            eps_black=dict((cell, Weight(vector)) for cell, vector in self.epsilons['black'].items()),
            eps_white=dict((cell, Weight(vector)) for cell, vector in self.epsilons['white'].items()),
            k=self.epsilons['k'])

    def instance(self):

        """
        Runs the validation pipeline.

        Raises:
            ValidationFailedException: Any check failed.
        """

        self._debug('Building problem instance')
        return ProblemInstance.create(self.lattice(), self.quiver(), self.epsilon_assignment())

    def point(self, value, n):

        """
        Resolves a point given either as the name of one of the document's points or as comma
        separated rationals.

        Raises:
            DocumentParseException: value is neither.
            InvalidArgumentsException: The point is not in the torus.
        """

        if value in self.points:
            values = self.points[value]
        else:
            try:
                values = utils.parse_vector(value)
            except exceptions.InvalidArgumentsException as e:
                raise exceptions.DocumentParseException(source="point '{0}'".format(value),
                                                        reason=str(e))
        return OrbitPoint.create(values, n)

    def line(self, value):

        """
        Resolves a line given either by name or as two ';' separated rows.
        """

        if value in self.lines:
            rows = self.lines[value]
        else:
            try:
                rows = utils.parse_matrix(value)
            except exceptions.InvalidArgumentsException as e:
                raise exceptions.DocumentParseException(source="line '{0}'".format(value),
                                                        reason=str(e))
        return Line(rows)

    def factor_polys(self, space, extra=None):
        return [Poly.from_expression(space, text) for text in list(self.factors) + list(extra or [])]

    def to_dict(self):
        data = {
            'name': self.name,
            'lattice': {'rows': [list(row) for row in self.rows]},
            'quiver': {'nodes': self.n_nodes, 'edges': [edge.to_dict() for edge in self.edges]}
        }
        if self.epsilons is not None:
            data['epsilons'] = {
                'black': dict((cell, list(v)) for cell, v in self.epsilons['black'].items()),
                'white': dict((cell, list(v)) for cell, v in self.epsilons['white'].items()),
                'k': self.epsilons['k']
            }
        if self.points:
            data['points'] = dict((key, [utils.format_rational(value) for value in values])
                                  for key, values in self.points.items())
        if self.lines:
            data['lines'] = dict((key, [[utils.format_rational(value) for value in row]
                                        for row in rows])
                                 for key, rows in self.lines.items())
        if self.factors:
            data['factors'] = list(self.factors)
        return data

    def _debug(self, message, **kwargs):
        kwargs = dict(kwargs)
        kwargs.update(self._log_ctx)
        self._logger.debug(message, **kwargs)
