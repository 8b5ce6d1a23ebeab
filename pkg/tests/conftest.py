# Copyright Justin R. Goheen.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

from order2phi.core.modulus import Semiprime, construct_semiprime


@pytest.fixture(scope="session")
def n143() -> Semiprime:
    return Semiprime.from_primes(11, 13)


@pytest.fixture(scope="session")
def n77() -> Semiprime:
    return Semiprime.from_primes(7, 11)


@pytest.fixture(scope="session")
def n481() -> Semiprime:
    return Semiprime.from_primes(13, 37)


@pytest.fixture(scope="session")
def n35() -> Semiprime:
    return Semiprime.from_primes(5, 7)


@pytest.fixture(scope="session")
def constructed_2048() -> Semiprime:
    return construct_semiprime(2048, seed=1)
