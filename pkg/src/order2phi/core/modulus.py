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

"""RSA-style moduli with known group structure.

Two sources of moduli exist. ``generate_semiprime`` draws uniform random primes of an
exact bit length and factors p - 1 and q - 1 with sympy, which keeps it at desk scale.
``construct_semiprime`` builds p = 2 * (product of random small primes) + 1, so the
factorization of p - 1 is known without any factoring and the bit length can be large.
"""

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import prod
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import gmpy2
from sympy import factorint, sieve

from order2phi import config
from order2phi.core.arith import Natural, lcm
from order2phi.core.errors import DomainError, ResourceError
from order2phi.logger import get_logger

log = get_logger(__name__)


def is_probable_prime(n: Natural) -> bool:
    if n < 2:
        return False
    return bool(gmpy2.is_prime(n, config.MILLER_RABIN_ROUNDS))


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer with its prime factorization as (prime, exponent) pairs, primes increasing."""

    value: Natural
    factors: Tuple[Tuple[Natural, int], ...] = ()

    def __post_init__(self) -> None:
        primes = [prime for prime, _ in self.factors]
        if primes != sorted(set(primes)) or any(exponent < 1 for _, exponent in self.factors):
            raise DomainError(f"malformed factor list {self.factors}")
        if prod(prime**exponent for prime, exponent in self.factors) != self.value:
            raise DomainError(f"factors {self.factors} do not multiply to {self.value}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "FactoredInteger":
        factors = tuple(sorted((int(prime), int(exponent)) for prime, exponent in mapping.items() if exponent))
        return cls(prod(prime**exponent for prime, exponent in factors), factors)

    @property
    def primes(self) -> List[Natural]:
        return [prime for prime, _ in self.factors]

    @property
    def divisor_count(self) -> int:
        return prod(exponent + 1 for _, exponent in self.factors)

    def as_dict(self) -> Dict[Natural, int]:
        return dict(self.factors)

    def iter_divisors(self) -> Iterator[Natural]:
        powers = [[prime**k for k in range(exponent + 1)] for prime, exponent in self.factors]
        for combination in itertools.product(*powers):
            yield prod(combination)

    def divisors(self) -> List[Natural]:
        return sorted(self.iter_divisors())

    def factor_of(self, divisor: Natural) -> "FactoredInteger":
        """Factorization of a divisor, read off this factorization without factoring."""
        if divisor < 1 or self.value % divisor:
            raise DomainError(f"{divisor} does not divide {self.value}")
        exponents: Dict[int, int] = {}
        rest = divisor
        for prime, _ in self.factors:
            while rest % prime == 0:
                rest //= prime
                exponents[prime] = exponents.get(prime, 0) + 1
        return FactoredInteger.from_mapping(exponents)

    def lcm_with(self, other: "FactoredInteger") -> "FactoredInteger":
        merged = Counter(self.as_dict())
        for prime, exponent in other.factors:
            merged[prime] = max(merged[prime], exponent)
        return FactoredInteger.from_mapping(merged)

    def totient(self) -> Natural:
        return prod(prime ** (exponent - 1) * (prime - 1) for prime, exponent in self.factors)

    def to_dict(self) -> Dict[str, str]:
        return {str(prime): str(exponent) for prime, exponent in self.factors}

    @classmethod
    def from_dict(cls, data: Mapping[str, str]) -> "FactoredInteger":
        return cls.from_mapping({int(prime): int(exponent) for prime, exponent in data.items()})


def factor_integer(n: Natural) -> FactoredInteger:
    """Complete factorization of a desk-scale integer.

    sympy's ``factorint`` runs trial division, Pollard rho and p - 1; every prime it returns
    is re-certified here with Miller-Rabin.

    Raises:
        DomainError: n < 1.
        ResourceError: n has more than ``config.FACTOR_BITS_CEILING`` bits.
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    if n.bit_length() > config.FACTOR_BITS_CEILING:
        raise ResourceError(
            f"{n.bit_length()}-bit input exceeds the {config.FACTOR_BITS_CEILING}-bit factoring ceiling; "
            "use construct_semiprime for large moduli"
        )
    factored = FactoredInteger.from_mapping(factorint(n))
    if factored.value != n or not all(is_probable_prime(prime) for prime in factored.primes):
        raise ResourceError(f"factorization of {n} could not be certified")
    return factored


@dataclass(frozen=True)
class Semiprime:
    n: Natural
    p: Natural
    q: Natural
    p_minus_1: FactoredInteger
    q_minus_1: FactoredInteger
    phi: Natural
    carmichael: Natural
    bits: int
    seed: Optional[int] = None
    mode: str = "given"

    @classmethod
    def from_primes(
        cls,
        p: Natural,
        q: Natural,
        p_minus_1: Optional[FactoredInteger] = None,
        q_minus_1: Optional[FactoredInteger] = None,
        seed: Optional[int] = None,
        mode: str = "given",
    ) -> "Semiprime":
        if p == q:
            raise DomainError(f"p and q must be distinct, both are {p}")
        if p > q:
            p, q = q, p
            p_minus_1, q_minus_1 = q_minus_1, p_minus_1
        for prime in (p, q):
            if prime < 3 or not is_probable_prime(prime):
                raise DomainError(f"{prime} is not an odd prime")
        p_minus_1 = p_minus_1 or factor_integer(p - 1)
        q_minus_1 = q_minus_1 or factor_integer(q - 1)
        if p_minus_1.value != p - 1 or q_minus_1.value != q - 1:
            raise DomainError("recorded factorizations do not match p - 1 and q - 1")
        return cls(
            n=p * q,
            p=p,
            q=q,
            p_minus_1=p_minus_1,
            q_minus_1=q_minus_1,
            phi=(p - 1) * (q - 1),
            carmichael=lcm(p - 1, q - 1),
            bits=q.bit_length(),
            seed=seed,
            mode=mode,
        )

    @cached_property
    def carmichael_factors(self) -> FactoredInteger:
        return self.p_minus_1.lcm_with(self.q_minus_1)

    def is_balanced(self) -> bool:
        """Both primes have exactly ``bits`` bits: 2^(L-1) < p < q < 2^L."""
        return 2 ** (self.bits - 1) < self.p < self.q < 2**self.bits

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": str(self.n),
            "p": str(self.p),
            "q": str(self.q),
            "p1_factors": self.p_minus_1.to_dict(),
            "q1_factors": self.q_minus_1.to_dict(),
            "phi": str(self.phi),
            "lambda": str(self.carmichael),
            "bits": str(self.bits),
            "seed": None if self.seed is None else str(self.seed),
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Semiprime":
        semiprime = cls.from_primes(
            int(data["p"]),
            int(data["q"]),
            p_minus_1=FactoredInteger.from_dict(data["p1_factors"]),
            q_minus_1=FactoredInteger.from_dict(data["q1_factors"]),
            seed=None if data.get("seed") is None else int(data["seed"]),
            mode=data.get("mode", "given"),
        )
        if str(semiprime.n) != data["n"]:
            raise DomainError("n does not equal p * q")
        return semiprime


def semiprime_from_modulus(n: Natural) -> Semiprime:
    """Factor a desk-scale N and require it to be a product of two distinct odd primes."""
    factored = factor_integer(n)
    if len(factored.factors) != 2 or any(exponent != 1 for _, exponent in factored.factors) or n % 2 == 0:
        raise DomainError(f"{n} is not a product of two distinct odd primes")
    p, q = factored.primes
    return Semiprime.from_primes(p, q)


def _random_prime(bits: int, rng: random.Random) -> Natural:
    # uniform over odd integers in (2^(bits-1), 2^bits), rejecting composites
    while True:
        candidate = 2 * rng.randrange(2 ** (bits - 2), 2 ** (bits - 1)) + 1
        if is_probable_prime(candidate):
            return candidate


def generate_semiprime(bits: int, seed: int) -> Semiprime:
    """Two distinct uniform random primes of exactly `bits` bits; deterministic in `seed`."""
    if not config.GENERATE_MIN_BITS <= bits <= config.GENERATE_MAX_BITS:
        raise DomainError(
            f"generate needs {config.GENERATE_MIN_BITS} <= bits <= {config.GENERATE_MAX_BITS}, got {bits}"
        )
    rng = random.Random(seed)
    p = _random_prime(bits, rng)
    q = p
    while q == p:
        q = _random_prime(bits, rng)
    return Semiprime.from_primes(p, q, seed=seed, mode="generate")


def generate_unbalanced_semiprime(bits: int, seed: int, small_bits: Optional[int] = None) -> Semiprime:
    """A `bits`-bit prime q and a shorter `small_bits`-bit prime p that still exceeds N^(1/4).

    p > N^(1/4) is p^3 > q, guaranteed for every draw once 3 (small_bits - 1) >= bits.
    ``small_bits`` defaults to half of `bits`, rounded up.
    """
    small_bits = (bits + 1) // 2 if small_bits is None else small_bits
    if not config.GENERATE_MIN_BITS <= small_bits < bits <= config.GENERATE_MAX_BITS:
        raise DomainError(
            f"unbalanced generation needs {config.GENERATE_MIN_BITS} <= small_bits < bits <= "
            f"{config.GENERATE_MAX_BITS}, got small_bits={small_bits}, bits={bits}"
        )
    if 3 * (small_bits - 1) < bits:
        raise DomainError(f"a {small_bits}-bit prime can fall below N^(1/4) when the other has {bits} bits")
    rng = random.Random(seed)
    q = _random_prime(bits, rng)
    p = _random_prime(small_bits, rng)
    return Semiprime.from_primes(p, q, seed=seed, mode="unbalanced")


def _prime_between(low: int, high: int, rng: random.Random, tries: int = 10_000) -> Optional[int]:
    for _ in range(tries):
        candidate = rng.randrange(low, high + 1)
        if is_probable_prime(candidate):
            return candidate
    return None


def _constructed_prime(bits: int, rng: random.Random, pool: Sequence[int]) -> Tuple[Natural, FactoredInteger]:
    # p = 2m + 1 has exactly `bits` bits iff 2^(bits-2) <= m < 2^(bits-1)
    low, high = 2 ** (bits - 2), 2 ** (bits - 1) - 1
    slack = min(20, (bits - 2) // 2)
    for attempt in range(config.CONSTRUCT_MAX_ATTEMPTS):
        exponents: Counter = Counter({2: 1})
        m = 1
        while True:
            ell = rng.choice(pool)
            if (m * ell).bit_length() > bits - 2 - slack:
                break
            m *= ell
            exponents[ell] += 1
        closing = _prime_between(-(-low // m), high // m, rng)
        if closing is None:
            continue
        m *= closing
        exponents[closing] += 1
        candidate = 2 * m + 1
        if is_probable_prime(candidate):
            log.debug("constructed a %d-bit prime after %d attempts", bits, attempt + 1)
            return candidate, FactoredInteger.from_mapping(exponents)
    raise ResourceError(f"no {bits}-bit prime constructed within {config.CONSTRUCT_MAX_ATTEMPTS} attempts")


def construct_semiprime(bits: int, seed: int) -> Semiprime:
    """Semiprime with `bits`-bit primes whose p - 1 and q - 1 factorizations are known by construction."""
    if bits < config.CONSTRUCT_MIN_BITS:
        raise DomainError(f"construct needs bits >= {config.CONSTRUCT_MIN_BITS}, got {bits}")
    rng = random.Random(seed)
    pool = list(sieve.primerange(2, config.SMALL_PRIME_BOUND))
    p, p_minus_1 = _constructed_prime(bits, rng, pool)
    q, q_minus_1 = p, p_minus_1
    while q == p:
        q, q_minus_1 = _constructed_prime(bits, rng, pool)
    return Semiprime.from_primes(p, q, p_minus_1=p_minus_1, q_minus_1=q_minus_1, seed=seed, mode="construct")


class ModulusMode(str, Enum):
    GENERATE = "generate"
    CONSTRUCT = "construct"
    UNBALANCED = "unbalanced"


def make_semiprime(bits: int, seed: int, mode: ModulusMode = ModulusMode.GENERATE) -> Semiprime:
    if mode is ModulusMode.CONSTRUCT:
        return construct_semiprime(bits, seed)
    if mode is ModulusMode.UNBALANCED:
        return generate_unbalanced_semiprime(bits, seed)
    return generate_semiprime(bits, seed)


@dataclass(frozen=True)
class CommonPrime:
    prime: Natural
    a: int
    b: int

    @property
    def minimum(self) -> int:
        return min(self.a, self.b)

    @property
    def maximum(self) -> int:
        return max(self.a, self.b)


@dataclass(frozen=True)
class CommonStructure:
    """p - 1 = (prod prime^a) * p_cofactor and q - 1 = (prod prime^b) * q_cofactor over the shared primes."""

    common: Tuple[CommonPrime, ...]
    p_cofactor: Natural
    q_cofactor: Natural

    @property
    def shared_primes(self) -> List[Natural]:
        return [entry.prime for entry in self.common]

    @property
    def gcd_part(self) -> Natural:
        return prod(entry.prime**entry.minimum for entry in self.common)

    @property
    def lcm_part(self) -> Natural:
        return prod(entry.prime**entry.maximum for entry in self.common) * self.p_cofactor * self.q_cofactor

    def minimum_exponent(self, prime: Natural) -> int:
        for entry in self.common:
            if entry.prime == prime:
                return entry.minimum
        return 0


def common_structure(s: Semiprime) -> CommonStructure:
    p_side, q_side = s.p_minus_1.as_dict(), s.q_minus_1.as_dict()
    shared = sorted(set(p_side) & set(q_side))
    return CommonStructure(
        common=tuple(CommonPrime(prime, p_side[prime], q_side[prime]) for prime in shared),
        p_cofactor=prod(prime**exponent for prime, exponent in p_side.items() if prime not in shared),
        q_cofactor=prod(prime**exponent for prime, exponent in q_side.items() if prime not in shared),
    )
