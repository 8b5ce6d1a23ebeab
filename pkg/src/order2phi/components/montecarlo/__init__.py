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

from order2phi.components.montecarlo.records import ExperimentRecord, RunSummary  # noqa: F401
from order2phi.components.montecarlo.run import (  # noqa: F401
    MonteCarloConfig,
    benchmark,
    derive_seed,
    run_montecarlo,
    run_trial,
)
