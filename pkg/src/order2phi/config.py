import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# SET PATHS
filepath = Path(__file__)
PROJECTPATH = filepath.parents[2]
DATAPATH = os.path.join(PROJECTPATH, "data")
RUNSPATH = os.path.join(DATAPATH, "runs")
LOGSPATH = os.path.join(PROJECTPATH, "logs")

# ENVIRONMENT DEFAULTS
SEED_ENV = "ORDER2PHI_SEED"
LOG_LEVEL_ENV = "ORDER2PHI_LOG_LEVEL"
WORKERS_ENV = "ORDER2PHI_WORKERS"
GLOBALSEED = int(os.getenv(SEED_ENV, "42"))
LOG_LEVEL = os.getenv(LOG_LEVEL_ENV, "WARNING")
WORKERS = int(os.getenv(WORKERS_ENV, "1"))

# PRIMALITY AND FACTORING
MILLER_RABIN_ROUNDS = 64
FACTOR_BITS_CEILING = 80

# MODULUS SOURCES
GENERATE_MIN_BITS = 3
GENERATE_MAX_BITS = 80
CONSTRUCT_MIN_BITS = 16
CONSTRUCT_MAX_ATTEMPTS = 200_000
SMALL_PRIME_BOUND = 2**12
RNG_ALGORITHM = "mt19937"

# BRUTE FORCE ORACLES
BRUTE_FORCE_ORDER_CEILING = 10**7
BRUTE_FORCE_CENSUS_CEILING = 10**6

# ENUMERATION BUDGETS
DIVISOR_BUDGET = 200_000
MULTIPLICATIVITY_BUDGET = 2_000

# EXIT CODES
EXIT_OK = 0
EXIT_VERIFIED_FAILURE = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70
