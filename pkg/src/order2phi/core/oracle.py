"""Classical stand-in for an order-finding oracle.

The oracle draws a uniform unit a mod N and reports its exact multiplicative order. Each
unit has exactly one order, so drawing a uniform (unit, order) pair is the same as drawing
a uniform unit. Computing the order needs the factorization of lambda(N), which is why
everything here takes a ``Semiprime`` and never a bare N.
"""

import random
from collections import Counter
from dataclasses import dataclass
from typing import Dict

from order2phi import config
from order2phi.core.arith import Natural, gcd, mod_pow
from order2phi.core.errors import DomainError, NotAUnitError, ResourceError
from order2phi.core.modulus import Semiprime
from order2phi.logger import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class OrderSample:
    a: Natural
    order: Natural
    lucky_events: int = 0

    def to_dict(self) -> Dict[str, str]:
        return {"a": str(self.a), "order": str(self.order)}


def _require_unit(a: Natural, n: Natural) -> None:
    shared = gcd(a, n)
    if shared != 1:
        raise NotAUnitError(f"{a} shares the factor {shared} with {n}", divisor=shared)


def multiplicative_order(a: Natural, s: Semiprime) -> Natural:
    """Exact order of a mod N, divided down from lambda(N) one prime at a time."""
    a %= s.n
    _require_unit(a, s.n)
    order = s.carmichael
    for prime, exponent in s.carmichael_factors.factors:
        for _ in range(exponent):
            if mod_pow(a, order // prime, s.n) != 1:
                break
            order //= prime
    return order


def brute_force_order(a: Natural, n: Natural) -> Natural:
    """Smallest k >= 1 with a^k = 1 mod n, by repeated multiplication."""
    if n < 2:
        raise DomainError(f"modulus must be at least 2, got {n}")
    if n > config.BRUTE_FORCE_ORDER_CEILING:
        raise ResourceError(f"brute force order is limited to n <= {config.BRUTE_FORCE_ORDER_CEILING}")
    a %= n
    _require_unit(a, n)
    k, power = 1, a
    while power != 1:
        power = power * a % n
        k += 1
    return k


def sample_order(s: Semiprime, rng: random.Random, resample_lucky: bool = True) -> OrderSample:
    """One oracle call: a uniform unit a in [1, N - 1] and its order.

    Candidates sharing a factor with N are counted in ``lucky_events`` and redrawn. With
    ``resample_lucky=False`` the first such candidate raises NotAUnitError instead.
    """
    lucky = 0
    while True:
        a = rng.randrange(1, s.n)
        try:
            return OrderSample(a=a, order=multiplicative_order(a, s), lucky_events=lucky)
        except NotAUnitError as exc:
            if not resample_lucky:
                raise
            lucky += 1
            log.debug("lucky draw a=%d exposes the factor %d of N=%d", a, exc.divisor, s.n)


def order_histogram(s: Semiprime, samples: int, rng: random.Random) -> Dict[Natural, int]:
    histogram: Counter = Counter(sample_order(s, rng).order for _ in range(samples))
    return dict(sorted(histogram.items()))
