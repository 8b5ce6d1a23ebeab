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

"""Exact census of element orders in (Z/NZ)*.

N(x) counts the units of order exactly x. For x dividing lambda(N), with g = (x, N-1),

    N(x) = phi(x) * sum over squarefree d | g coprime to x/g of g/d

which is the integer form of phi(x) g sum mu^2(d)/d. All arithmetic is exact: integers
for counts and ``Fraction`` for probabilities.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from order2phi import config
from order2phi.core.arith import Natural, gcd
from order2phi.core.errors import DomainError, ResourceError
from order2phi.core.modulus import FactoredInteger, Semiprime, common_structure
from order2phi.core.recovery import order_is_large, recover_phi_from_order
from order2phi.logger import get_logger

log = get_logger(__name__)


def _fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class CensusTable:
    n: Natural
    phi: Natural
    entries: Dict[Natural, Natural]

    @property
    def total(self) -> Natural:
        return sum(self.entries.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": str(self.n),
            "phi": str(self.phi),
            "entries": {str(x): str(count) for x, count in self.entries.items()},
        }


@dataclass(frozen=True)
class SuccessProfile:
    n: Natural
    phi: Natural
    success_count: Natural
    succeeding_orders: Tuple[Natural, ...]
    probability: Fraction

    @property
    def failure_probability(self) -> Fraction:
        return 1 - self.probability

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": str(self.n),
            "phi": str(self.phi),
            "success_count": str(self.success_count),
            "succeeding_orders": [str(x) for x in self.succeeding_orders],
            "probability": _fraction(self.probability),
        }


@dataclass(frozen=True)
class MultiplicativityCheck:
    x1: Natural
    x2: Natural
    product_count: Natural
    count_product: Natural

    @property
    def ok(self) -> bool:
        return self.product_count == self.count_product


@dataclass(frozen=True)
class MultiplicativityReport:
    n: Natural
    checks: Tuple[MultiplicativityCheck, ...]

    @property
    def failures(self) -> List[MultiplicativityCheck]:
        return [check for check in self.checks if not check.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": str(self.n),
            "pairs": len(self.checks),
            "passed": self.passed,
            "failures": [[str(check.x1), str(check.x2)] for check in self.failures],
        }


def moebius(n: FactoredInteger) -> int:
    if any(exponent >= 2 for _, exponent in n.factors):
        return 0
    return -1 if len(n.factors) % 2 else 1


def _divisor_of_lambda(x: Natural, s: Semiprime) -> FactoredInteger:
    if x < 1 or s.carmichael % x:
        raise DomainError(f"{x} does not divide lambda(N)={s.carmichael}")
    return s.carmichael_factors.factor_of(x)


def _lambda_divisors(s: Semiprime, budget: int) -> List[Natural]:
    factors = s.carmichael_factors
    if factors.divisor_count > budget:
        raise ResourceError(f"lambda(N) has {factors.divisor_count} divisors, budget is {budget}")
    return factors.divisors()


def count_order_formula(x: Natural, s: Semiprime) -> Natural:
    factored = _divisor_of_lambda(x, s)
    g = gcd(x, s.n - 1)
    rest = x // g
    weighted = 0
    for d in factored.factor_of(g).iter_divisors():
        if gcd(d, rest) == 1:
            weighted += moebius(factored.factor_of(d)) ** 2 * (g // d)
    return factored.totient() * weighted


def count_order_product(x: Natural, s: Semiprime) -> Natural:
    """N(x) as a product over the prime powers of x, split by the shared primes of p-1 and q-1."""
    factored = _divisor_of_lambda(x, s)
    structure = common_structure(s)
    count = 1
    for prime, alpha in factored.factors:
        local = prime ** (alpha - 1) * (prime - 1)
        shared = structure.minimum_exponent(prime)
        if shared == 0:
            count *= local
        elif alpha <= shared:
            count *= local * (prime**alpha + prime ** (alpha - 1))
        else:
            count *= local * prime**shared
    return count


def order_count_bound(x: Natural, s: Semiprime) -> Fraction:
    """x (x, N-1) prod over primes l | (x, N-1) of (1 - 1/l^2); never below N(x)."""
    factored = _divisor_of_lambda(x, s)
    g = gcd(x, s.n - 1)
    bound = Fraction(x * g)
    for prime in factored.factor_of(g).primes:
        bound *= 1 - Fraction(1, prime * prime)
    return bound


def order_census(s: Semiprime) -> CensusTable:
    divisors = _lambda_divisors(s, config.DIVISOR_BUDGET)
    return CensusTable(s.n, s.phi, {x: count_order_formula(x, s) for x in divisors})


def brute_force_census(n: Natural) -> CensusTable:
    """Tally orders of every unit mod n by walking powers.

    Walking the powers of a lists its cyclic subgroup of size r; a^k for (k, r) = 1 has
    the same order r, so those are tallied from the same walk.
    """
    if n < 2:
        raise DomainError(f"modulus must be at least 2, got {n}")
    if n > config.BRUTE_FORCE_CENSUS_CEILING:
        raise ResourceError(f"brute force census is limited to n <= {config.BRUTE_FORCE_CENSUS_CEILING}")
    orders: Dict[int, int] = {}
    for a in range(1, n):
        if a in orders or gcd(a, n) != 1:
            continue
        powers = [a]
        while powers[-1] != 1:
            powers.append(powers[-1] * a % n)
        size = len(powers)
        for k, element in enumerate(powers, start=1):
            if gcd(k, size) == 1:
                orders[element] = size
    tally = Counter(orders.values())
    return CensusTable(n, len(orders), dict(sorted(tally.items())))


def verify_multiplicativity(s: Semiprime) -> MultiplicativityReport:
    divisors = _lambda_divisors(s, config.MULTIPLICATIVITY_BUDGET)
    counts = {x: count_order_formula(x, s) for x in divisors}
    checks = []
    for i, x1 in enumerate(divisors):
        for x2 in divisors[i:]:
            if gcd(x1, x2) == 1:
                checks.append(MultiplicativityCheck(x1, x2, counts[x1 * x2], counts[x1] * counts[x2]))
    report = MultiplicativityReport(s.n, tuple(checks))
    if not report.passed:
        log.warning("multiplicativity fails on %d pairs for N=%d", len(report.failures), s.n)
    return report


def exact_success_probability(s: Semiprime) -> SuccessProfile:
    """Run the order-based recovery on every divisor x of lambda(N) and weight successes by N(x)."""
    succeeding = []
    success_count = 0
    for x in _lambda_divisors(s, config.DIVISOR_BUDGET):
        if recover_phi_from_order(s.n, x).succeeded:
            succeeding.append(x)
            success_count += count_order_formula(x, s)
    return SuccessProfile(s.n, s.phi, success_count, tuple(succeeding), Fraction(success_count, s.phi))


def small_order_mass(s: Semiprime) -> Fraction:
    """Probability of drawing an order x with x < 4 sqrt(N) and N(x) < 4 sqrt(N).

    Outside this set D = x (x, N-1) is a divisor of phi(N) above p + q, so for
    same-length primes the exact failure probability never exceeds this mass.
    """
    mass = 0
    for x in _lambda_divisors(s, config.DIVISOR_BUDGET):
        if order_is_large(s.n, x):
            continue
        count = count_order_formula(x, s)
        if count * count < 16 * s.n:
            mass += count
    return Fraction(mass, s.phi)
