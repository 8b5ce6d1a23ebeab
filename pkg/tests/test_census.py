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

from fractions import Fraction

import pytest

from order2phi.core.arith import gcd
from order2phi.core.census import (
    brute_force_census,
    count_order_formula,
    count_order_product,
    exact_success_probability,
    moebius,
    order_census,
    order_count_bound,
    small_order_mass,
    verify_multiplicativity,
)
from order2phi.core.errors import DomainError, ResourceError
from order2phi.core.modulus import FactoredInteger, Semiprime, generate_semiprime
from tests.helpers import small_semiprimes

CENSUS_143 = {1: 1, 2: 3, 3: 2, 4: 4, 5: 4, 6: 6, 10: 12, 12: 8, 15: 8, 20: 16, 30: 24, 60: 32}


def test_census_143_formula_and_brute_force(n143):
    assert order_census(n143).entries == CENSUS_143
    assert brute_force_census(143).entries == CENSUS_143
    assert brute_force_census(143).phi == 120


@pytest.mark.parametrize("x, expected", [(2, 3), (30, 24), (1, 1)])
def test_count_order_formula(n77, x, expected):
    assert count_order_formula(x, n77) == expected


def test_count_order_rejects_non_divisor(n143):
    with pytest.raises(DomainError):
        count_order_formula(7, n143)


def test_brute_force_small_tables():
    assert brute_force_census(15).total == 8
    assert brute_force_census(35).entries[1] == 1


def test_brute_force_ceiling():
    with pytest.raises(ResourceError):
        brute_force_census(10**6 + 1)


@pytest.mark.parametrize("factors, expected", [({}, 1), ({2: 1, 3: 1}, 1), ({2: 2, 3: 1}, 0), ({7: 1}, -1)])
def test_moebius(factors, expected):
    assert moebius(FactoredInteger.from_mapping(factors)) == expected


def test_multiplicativity_143(n143):
    report = verify_multiplicativity(n143)
    assert report.passed
    pair = next(check for check in report.checks if (check.x1, check.x2) == (4, 15))
    assert pair.product_count == 32 == pair.count_product


def test_multiplicativity_77(n77):
    report = verify_multiplicativity(n77)
    assert report.passed
    assert any((check.x1, check.x2) == (2, 15) for check in report.checks)


def test_exact_success_probability_143(n143):
    profile = exact_success_probability(n143)
    assert profile.succeeding_orders == (20, 30, 60)
    assert profile.success_count == 72
    assert profile.probability == Fraction(72, 120)
    assert profile.to_dict()["probability"] == "3/5"


def test_profile_35(n35):
    profile = exact_success_probability(n35)
    assert order_census(n35).total == 24
    assert 0 <= profile.probability <= 1
    assert profile.success_count <= profile.phi


def test_census_matches_brute_force_up_to_ten_thousand():
    for s in small_semiprimes(10_000):
        formula = order_census(s)
        assert formula.entries == brute_force_census(s.n).entries
        assert formula.total == s.phi


def test_product_form_agrees_with_formula():
    for s in small_semiprimes(3_000):
        for x in s.carmichael_factors.divisors():
            assert count_order_product(x, s) == count_order_formula(x, s)


def test_partition_identity_on_generated_moduli():
    for seed in range(200):
        s = generate_semiprime(9 + seed % 8, seed)
        assert order_census(s).total == s.phi


def test_multiplicativity_on_generated_moduli():
    for seed in range(30):
        assert verify_multiplicativity(generate_semiprime(12, seed)).passed


def test_order_count_bound_chain():
    for s in small_semiprimes(5_000):
        for x in s.carmichael_factors.divisors():
            count, width = count_order_formula(x, s), x * gcd(x, s.n - 1)
            bound = order_count_bound(x, s)
            assert count <= bound <= width
            if x > 1:
                assert count < width


def test_failure_mass_below_small_order_mass():
    for seed in range(100):
        s = generate_semiprime(6 + seed % 12, seed)
        profile = exact_success_probability(s)
        assert profile.failure_probability <= small_order_mass(s)


def test_failure_mass_143(n143):
    # 4 sqrt(143) is about 47.8: every order below 60 counts toward the mass
    assert exact_success_probability(n143).failure_probability == Fraction(48, 120)
    assert small_order_mass(n143) == Fraction(88, 120)


def test_census_serialization(n143):
    payload = order_census(n143).to_dict()
    assert payload["entries"]["60"] == "32"
    assert payload["phi"] == "120"
    assert Semiprime.from_primes(11, 13).carmichael == 60
