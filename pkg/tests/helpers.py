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

from functools import lru_cache
from typing import List

from sympy import primerange

from order2phi.core.modulus import Semiprime


@lru_cache(maxsize=None)
def small_semiprimes(limit: int) -> List[Semiprime]:
    """Every N = pq <= limit with p < q odd primes."""
    primes = list(primerange(3, limit // 3 + 1))
    moduli = []
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            if p * q > limit:
                break
            moduli.append(Semiprime.from_primes(p, q))
    return moduli
