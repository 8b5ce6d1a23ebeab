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

from order2phi.core.arith import (  # noqa: F401
    gcd,
    integer_sqrt,
    lcm,
    mod_inverse,
    mod_pow,
    solve_quadratic_factors,
)
from order2phi.core.census import (  # noqa: F401
    CensusTable,
    SuccessProfile,
    brute_force_census,
    count_order_formula,
    exact_success_probability,
    moebius,
    order_census,
    verify_multiplicativity,
)
from order2phi.core.modulus import (  # noqa: F401
    CommonStructure,
    FactoredInteger,
    ModulusMode,
    Semiprime,
    common_structure,
    construct_semiprime,
    factor_integer,
    generate_semiprime,
    generate_unbalanced_semiprime,
    make_semiprime,
)
from order2phi.core.oracle import OrderSample, brute_force_order, multiplicative_order, sample_order  # noqa: F401
from order2phi.core.recovery import (  # noqa: F401
    Method,
    RecoveryOutcome,
    Status,
    dj_fixpoint,
    factor_from_gcd,
    factor_from_phi,
    factor_with_cofactor_boost,
    phi_from_ed,
    phi_from_large_divisor,
    recover,
    recover_phi_from_order,
)
