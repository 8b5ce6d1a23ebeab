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

"""Recovering phi(N) from partial information, and factoring N with it.

Every routine takes a bare modulus N: recovery never looks at the hidden factorization.
Each one computes a candidate phi and then proves it by solving x^2 - (N - phi + 1)x + N = 0.
A candidate that does not factor N comes back as a verified failure, so a success is
always a correct factorization.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from order2phi.core.arith import Natural, gcd, solve_quadratic_factors
from order2phi.core.errors import DomainError, NoSolutionError
from order2phi.logger import get_logger

log = get_logger(__name__)


class Status(str, Enum):
    SUCCESS = "success"
    VERIFIED_FAILURE = "verified_failure"


class Method(str, Enum):
    ORDER = "order"
    DIVISOR = "divisor"
    GCD = "gcd"
    ED = "ed"
    BOOST = "boost"


@dataclass(frozen=True)
class RecoveryOutcome:
    method: Method
    n: Natural
    status: Status
    trace: Dict[str, Natural] = field(default_factory=dict)
    phi: Optional[Natural] = None
    p: Optional[Natural] = None
    q: Optional[Natural] = None
    candidate: Optional[Natural] = None
    reason: Optional[str] = None

    @property
    def succeeded(self) -> bool:
        return self.status is Status.SUCCESS

    def to_dict(self) -> Dict[str, Any]:
        def decimal(value: Optional[int]) -> Optional[str]:
            return None if value is None else str(value)

        return {
            "status": self.status.value,
            "method": self.method.value,
            "n": str(self.n),
            "phi": decimal(self.phi),
            "p": decimal(self.p),
            "q": decimal(self.q),
            "candidate": decimal(self.candidate),
            "trace": {name: str(value) for name, value in self.trace.items()},
            "reason": self.reason,
        }


def _check_modulus(n: Natural) -> None:
    if n < 15 or n % 2 == 0:
        raise DomainError(f"N must be an odd composite of two odd primes, got {n}")


def _fail(
    method: Method, n: Natural, trace: Dict[str, Natural], reason: str, candidate: Optional[Natural] = None
) -> RecoveryOutcome:
    log.debug("%s on N=%d rejected: %s", method.value, n, reason)
    return RecoveryOutcome(method, n, Status.VERIFIED_FAILURE, trace, candidate=candidate, reason=reason)


def _verify(method: Method, n: Natural, candidate: Natural, trace: Dict[str, Natural]) -> RecoveryOutcome:
    try:
        p, q = factor_from_phi(n, candidate)
    except NoSolutionError as exc:
        return _fail(method, n, trace, f"candidate {candidate} rejected: {exc}", candidate=candidate)
    return RecoveryOutcome(method, n, Status.SUCCESS, trace, phi=candidate, p=p, q=q)


def factor_from_phi(n: Natural, phi: Natural) -> Tuple[Natural, Natural]:
    """p < q from N and phi(N), since p + q = N - phi + 1.

    Raises:
        NoSolutionError: phi is not phi(N).
    """
    return solve_quadratic_factors(n - phi + 1, n)


def recover_phi_from_order(n: Natural, x: Natural) -> RecoveryOutcome:
    """phi(N) from the order x of a random unit: w = (x, N-1), D = xw, phi = floor((N+1)/D) * D.

    D divides phi(N) for every order x, and once D > p + q the floor picks out phi(N) exactly.
    """
    _check_modulus(n)
    if x < 1:
        raise DomainError(f"an order is at least 1, got {x}")
    w = gcd(x, n - 1)
    divisor = x * w
    trace = {"w": w, "D": divisor}
    if divisor > n + 1:
        return _fail(Method.ORDER, n, trace, f"D={divisor} exceeds N+1")
    quotient = (n + 1) // divisor
    trace["X"] = quotient
    return _verify(Method.ORDER, n, quotient * divisor, trace)


def phi_from_large_divisor(n: Natural, d: Natural) -> RecoveryOutcome:
    """phi(N) = floor((N+1)/D) * D, exact when D divides phi(N) and D > p + q."""
    _check_modulus(n)
    if d < 1:
        raise DomainError(f"D must be positive, got {d}")
    trace = {"D": d}
    if d > n + 1:
        return _fail(Method.DIVISOR, n, trace, f"D={d} exceeds N+1")
    quotient = (n + 1) // d
    trace["X"] = quotient
    return _verify(Method.DIVISOR, n, quotient * d, trace)


def factor_from_gcd(n: Natural, d: Natural) -> RecoveryOutcome:
    """Factor N from D = (p-1, q-1) when p + q < D^2.

    With p = 1 + R_p D and q = 1 + R_q D, N - 1 = (R_p + R_q) D + R_p R_q D^2, so the
    quotient (N-1) // D reduced mod D is R_p + R_q, and p + q = 2 + (R_p + R_q) D.
    """
    _check_modulus(n)
    if d < 2:
        raise DomainError(f"D must be at least 2, got {d}")
    quotient = (n - 1) // d
    residue = quotient % d
    total = 2 + residue * d
    trace = {"D": d, "T": quotient, "S": residue, "sum": total}
    return _verify(Method.GCD, n, n - total + 1, trace)


def phi_from_ed(n: Natural, e: Natural, d: Natural) -> RecoveryOutcome:
    """phi(N) = M / (floor(M/N) + 1) with M = ed - 1, for a small public exponent e."""
    _check_modulus(n)
    if e < 1 or d < 1 or e * d <= 1:
        raise DomainError(f"need e, d >= 1 with ed > 1, got e={e}, d={d}")
    multiple = e * d - 1
    k = multiple // n + 1
    trace = {"M": multiple, "k": k}
    if multiple % k:
        return _fail(Method.ED, n, trace, f"k={k} does not divide M={multiple}")
    return _verify(Method.ED, n, multiple // k, trace)


def dj_fixpoint(d: Natural, n: Natural) -> Tuple[Natural, int]:
    """Iterate D <- D / (D, N-1) until (D, N-1) = 1; returns the fixpoint and the number of reductions."""
    if d < 1:
        raise DomainError(f"D must be positive, got {d}")
    reductions = 0
    shared = gcd(d, n - 1)
    while shared != 1:
        d //= shared
        reductions += 1
        shared = gcd(d, n - 1)
    return d, reductions


def factor_with_cofactor_boost(n: Natural, d: Natural) -> RecoveryOutcome:
    """Factor N from a divisor D of lambda(N) boosted by F = (C_D, N-1).

    D F divides phi(N); once D_j0 > (p + q - 2) / F^2 the quotient floor((N-1) / (D F))
    is exactly phi(N) / (D F).
    """
    _check_modulus(n)
    fixpoint, reductions = dj_fixpoint(d, n)
    common_part = d // fixpoint
    boost = gcd(common_part, n - 1)
    boosted = d * boost
    trace = {"D": d, "D_j0": fixpoint, "j0": reductions, "C_D": common_part, "F": boost}
    if boosted > n - 1:
        return _fail(Method.BOOST, n, trace, f"DF={boosted} exceeds N-1")
    quotient = (n - 1) // boosted
    trace["X"] = quotient
    return _verify(Method.BOOST, n, boosted * quotient, trace)


def large_divisor_threshold(bits: int) -> Natural:
    """Any divisor D of phi(N) with D >= 2^(L+1) exceeds p + q when p < q <= 2^L."""
    return 2 ** (bits + 1)


def ed_exponent_admissible(n: Natural, e: Natural) -> bool:
    """e < (sqrt(2)/3) sqrt(N), tested exactly as 9 e^2 < 2 N."""
    return 9 * e * e < 2 * n


def order_is_large(n: Natural, x: Natural) -> bool:
    """x >= 4 sqrt(N), tested exactly as x^2 >= 16 N."""
    return x * x >= 16 * n


def recover(
    method: Method,
    n: Natural,
    x: Optional[Natural] = None,
    divisor: Optional[Natural] = None,
    e: Optional[Natural] = None,
    d: Optional[Natural] = None,
) -> RecoveryOutcome:
    """Dispatch to one recovery routine by method name."""

    def needed(name: str, value: Optional[Natural]) -> Natural:
        if value is None:
            raise DomainError(f"method '{method.value}' needs {name}")
        return value

    if method is Method.ORDER:
        return recover_phi_from_order(n, needed("x", x))
    if method is Method.DIVISOR:
        return phi_from_large_divisor(n, needed("divisor", divisor))
    if method is Method.GCD:
        return factor_from_gcd(n, needed("divisor", divisor))
    if method is Method.ED:
        return phi_from_ed(n, needed("e", e), needed("d", d))
    return factor_with_cofactor_boost(n, needed("divisor", divisor))
