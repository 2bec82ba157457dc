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

from setuptools import setup


BASE_PACKAGE_NAME = 'chowq'

PROGRAM_NAME = 'chowq'

setup(
    name='chowq',
    version='0.1.0',
    packages=[
        BASE_PACKAGE_NAME,
        '{0}.resources'.format(BASE_PACKAGE_NAME),
        '{0}.api'.format(BASE_PACKAGE_NAME),
        '{0}.api.biadjacency'.format(BASE_PACKAGE_NAME),
        '{0}.api.compat'.format(BASE_PACKAGE_NAME),
        '{0}.api.core'.format(BASE_PACKAGE_NAME),
        '{0}.api.grassmann'.format(BASE_PACKAGE_NAME),
        '{0}.api.lattice'.format(BASE_PACKAGE_NAME),
        '{0}.api.model'.format(BASE_PACKAGE_NAME),
        '{0}.api.orbit'.format(BASE_PACKAGE_NAME),
        '{0}.api.quiver'.format(BASE_PACKAGE_NAME),
        '{0}.shell'.format(BASE_PACKAGE_NAME),
        '{0}.shell.commands'.format(BASE_PACKAGE_NAME)
    ],
    package_data={
        BASE_PACKAGE_NAME: [
            'resources/fixtures/dp3.json',
            'resources/fixtures/triangle.json',
            'resources/templates/fan.jinja',
            'resources/templates/quotient.jinja',
            'resources/templates/report.jinja'
        ],
    },
    license='LICENSE',
    description="Chow quotients of toric varieties from quivers with superpotential",
    entry_points={
        'console_scripts': [
            '{0} = {1}.shell.main:app'.format(PROGRAM_NAME, BASE_PACKAGE_NAME)
        ]
    },
    install_requires=[
        'click==7.1.2',
        'jinja2==3.1.2',
        'boltons==23.0.0',
        'colorama==0.4.6',
        'sympy==1.12',
        'networkx==3.1'
    ],
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Natural Language :: English',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: POSIX :: Linux',
        'Operating System :: Microsoft',
        'Topic :: Scientific/Engineering :: Mathematics'
    ]
)
