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

import numbers
import re
from fractions import Fraction

from chowq.api import exceptions


def to_fraction(value):

    """
    Converts a number or a numeric string to an exact rational.

    Floats are rejected, all input must be exact.

    For example:

        "3/2" --> Fraction(3, 2)
        -4 --> Fraction(-4, 1)

    Args:
        value: An int, a Fraction or a string in the form 'p' or 'p/q'.

    Returns:
        Fraction: The value.

    Raises:
        InvalidArgumentsException: The value is not an exact rational.
    """

    if isinstance(value, bool) or isinstance(value, float):
        raise exceptions.InvalidArgumentsException(
            'Expected an exact rational, got {0!r}'.format(value))

    if isinstance(value, Fraction):
        return value

    if isinstance(value, numbers.Integral):
        return Fraction(int(value))

    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))

    if isinstance(value, str):
        text = value.strip()
        if '.' in text or 'e' in text.lower():
            raise exceptions.InvalidArgumentsException(
                'Expected an exact rational, got {0!r}'.format(value))
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise exceptions.InvalidArgumentsException(
                'Expected an exact rational, got {0!r}'.format(value))

    raise exceptions.InvalidArgumentsException(
        'Expected an exact rational, got {0!r}'.format(value))


def to_integer(value):

    fraction = to_fraction(value)
    if fraction.denominator != 1:
        raise exceptions.InvalidArgumentsException('Expected an integer, got {0}'.format(value))
    return fraction.numerator


def format_rational(value):
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{0}/{1}'.format(value.numerator, value.denominator)


def parse_vector(text, integer=False):

    """
    Parses a comma separated list of rationals.

    For example:

        "1, 2, 3/2" --> (Fraction(1), Fraction(2), Fraction(3, 2))

    Args:
        text (str): The list.
        integer (:bool, optional): Require integer entries.

    Returns:
        tuple: The entries, as ints when integer is True and as Fractions otherwise.
    """

    if text is None or not text.strip():
        raise exceptions.InvalidArgumentsException('Expected a comma separated vector, got nothing')

    convert = to_integer if integer else to_fraction
    return tuple(convert(entry) for entry in text.split(','))


def parse_matrix(text, integer=False):

    """
    Parses rows separated by ';', each a comma separated list of rationals.

    For example:

        "1,0,0;0,1,0" --> ((1, 0, 0), (0, 1, 0))
    """

    if text is None or not text.strip():
        raise exceptions.InvalidArgumentsException('Expected a matrix, got nothing')

    rows = tuple(parse_vector(row, integer=integer) for row in text.split(';'))
    if len(set(len(row) for row in rows)) != 1:
        raise exceptions.InvalidArgumentsException('Matrix rows have different lengths: {0}'
                                                   .format(text))
    return rows


def dot(first, second):
    return sum(a * b for a, b in zip(first, second))


def add_vectors(first, second):
    return tuple(a + b for a, b in zip(first, second))


def sub_vectors(first, second):
    return tuple(a - b for a, b in zip(first, second))


def unit_vector(size, index):

    """
    The standard basis vector e_index of Z^size, with 1-based index.
    """

    return tuple(1 if position == index else 0 for position in range(1, size + 1))


def natural_key(label):

    """
    Sort key that orders embedded numbers numerically, so that 'b2' < 'b10'.
    """

    return [int(chunk) if chunk.isdigit() else chunk for chunk in re.split(r'(\d+)', str(label))]


def format_vector(vector):
    return '({0})'.format(', '.join(format_rational(entry) for entry in vector))
