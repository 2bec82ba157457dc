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


def test_fixture_and_document(chowq):

    result = chowq.run('--fixture dp3 --document doc.json det', catch_exceptions=True)

    assert result.return_code == 2
    assert 'Use either --fixture or --document, not both' in result.std_err


def test_unknown_fixture(chowq):

    result = chowq.run('--fixture nope det', catch_exceptions=True)

    assert result.return_code == 2
    assert "There is no bundled fixture named 'nope'" in result.std_err


def test_missing_document(chowq, tmp_path):

    result = chowq.run('--document {0} det'.format(tmp_path / 'missing.json'),
                       catch_exceptions=True)

    assert result.return_code == 2


def test_unknown_command(chowq):

    result = chowq.run('nope', catch_exceptions=True)

    assert result.return_code == 2


def test_default_fixture(chowq):

    assert chowq.run('quotient').std_out == chowq.run('--fixture dp3 quotient').std_out
