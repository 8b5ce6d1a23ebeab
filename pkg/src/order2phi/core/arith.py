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

"""Big-integer primitives. Everything returns plain ``int``; gmpy2 does the work."""

from typing import Tuple

import gmpy2

from order2phi.core.errors import DomainError, NoSolutionError, NotInvertibleError

Natural = int


def _natural(*values: int) -> None:
    for value in values:
        if value < 0:
            raise DomainError(f"expected a non-negative integer, got {value}")


def gcd(a: Natural, b: Natural) -> Natural:
    _natural(a, b)
    return int(gmpy2.gcd(a, b))


def lcm(a: Natural, b: Natural) -> Natural:
    _natural(a, b)
    if a == 0 and b == 0:
        raise DomainError("lcm(0, 0) is undefined")
    return int(gmpy2.lcm(a, b))


def mod_pow(base: Natural, exp: Natural, modulus: Natural) -> Natural:
    _natural(base, exp, modulus)
    if modulus < 2:
        raise DomainError(f"modulus must be at least 2, got {modulus}")
    return int(gmpy2.powmod(base, exp, modulus))


def mod_inverse(a: Natural, m: Natural) -> Natural:
    _natural(a, m)
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")
    g = gcd(a, m)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m}", divisor=g)
    return int(gmpy2.invert(a, m))


def integer_sqrt(n: Natural) -> Tuple[Natural, bool]:
    """floor(sqrt(n)) and whether n is a perfect square."""
    _natural(n)
    root, remainder = gmpy2.isqrt_rem(n)
    return int(root), remainder == 0


def solve_quadratic_factors(B: Natural, N: Natural) -> Tuple[Natural, Natural]:
    """Roots p < q of x^2 - Bx + N = 0, i.e. p + q = B and p * q = N.

    Raises:
        NoSolutionError: the discriminant is negative, zero or not a square, the roots are
            not integers, their product is not N, or the smaller root is below 2.
    """
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    discriminant = B * B - 4 * N
    if discriminant < 0:
        raise NoSolutionError(f"negative discriminant for B={B}")
    root, exact = integer_sqrt(discriminant)
    if not exact:
        raise NoSolutionError(f"discriminant {discriminant} is not a perfect square")
    if root == 0:
        raise NoSolutionError(f"repeated root {B // 2}: N={N} is not a product of distinct primes")
    if (B - root) % 2:
        raise NoSolutionError("roots are not integral")
    p, q = (B - root) // 2, (B + root) // 2
    if p < 2 or p * q != N:
        raise NoSolutionError(f"roots ({p}, {q}) do not factor {N}")
    return p, q
