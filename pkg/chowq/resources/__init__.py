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

import pkgutil

from jinja2 import Template

FIXTURES_DIRECTORY = 'fixtures'
TEMPLATES_DIRECTORY = 'templates'


def get_text_resource(path):

    """
    Reads a text file bundled with the package.

    Args:
        path (str): The path of the resource relative to this package.

    Returns:
        str: The UTF-8 decoded content.

    Raises:
        IOError: No such resource.
    """

    data = pkgutil.get_data(__name__, path)
    if data is None:
        raise IOError('Resource not found: {0}'.format(path))
    return data.decode('UTF-8')


def fixture_resource(name):
    return '{0}/{1}.json'.format(FIXTURES_DIRECTORY, name)


def template_resource(name):
    return '{0}/{1}.jinja'.format(TEMPLATES_DIRECTORY, name)


def render_template(name, **kwargs):

    """
    Renders one of the bundled jinja templates. Block tags do not leave blank lines behind.
    """

    template = Template(get_text_resource(template_resource(name)),
                        trim_blocks=True,
                        lstrip_blocks=True)
    return template.render(**kwargs)
