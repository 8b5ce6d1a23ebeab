import hashlib
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Any, Dict, List, Optional, Tuple

from order2phi import config
from order2phi.components.montecarlo.records import ExperimentRecord, RunSummary, dumps
from order2phi.core.census import exact_success_probability
from order2phi.core.errors import ResourceError
from order2phi.core.modulus import ModulusMode, Semiprime, construct_semiprime, make_semiprime
from order2phi.core.oracle import sample_order
from order2phi.core.recovery import recover_phi_from_order
from order2phi.logger import get_logger

log = get_logger(__name__)


def derive_seed(master: int, index: int) -> int:
    """64-bit seed for item `index`, independent of how items are split across workers."""
    digest = hashlib.blake2b(f"{master}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


@dataclass(frozen=True)
class MonteCarloConfig:
    bits: int
    trials: int
    seed: int = config.GLOBALSEED
    mode: ModulusMode = ModulusMode.GENERATE
    fixed: bool = False
    disclose: bool = False
    timings: bool = False
    exact: bool = True
    workers: int = 1

    @property
    def experiment_id(self) -> str:
        settings = asdict(self)
        settings.pop("workers")
        settings["mode"] = self.mode.value
        return "mc-" + hashlib.blake2b(dumps(settings).encode(), digest_size=6).hexdigest()


@lru_cache(maxsize=16)
def _modulus(bits: int, seed: int, mode: ModulusMode) -> Semiprime:
    return make_semiprime(bits, seed, mode)


@lru_cache(maxsize=16)
def _exact_probability(s: Semiprime) -> Optional[Fraction]:
    try:
        return exact_success_probability(s).probability
    except ResourceError as exc:
        log.info("no exact probability for N=%d: %s", s.n, exc)
        return None


def run_trial(cfg: MonteCarloConfig, trial: int) -> ExperimentRecord:
    """Fresh (or fixed) modulus, one oracle call, one order-based recovery."""
    trial_seed = derive_seed(cfg.seed, trial)
    modulus_seed = cfg.seed if cfg.fixed else trial_seed
    rng = random.Random(derive_seed(trial_seed, 1))
    start = time.perf_counter_ns()
    try:
        s = _modulus(cfg.bits, modulus_seed, cfg.mode)
        sample = sample_order(s, rng)
        outcome = recover_phi_from_order(s.n, sample.order)
    except ResourceError as exc:
        log.warning("trial %d: %s", trial, exc)
        return ExperimentRecord(
            cfg.experiment_id,
            cfg.seed,
            trial,
            trial_seed,
            cfg.bits,
            modulus={"seed": str(modulus_seed)},
            error=str(exc),
        )
    elapsed = time.perf_counter_ns() - start
    if outcome.succeeded and outcome.phi != s.phi:
        raise RuntimeError(f"unsound success on N={s.n}: reported phi {outcome.phi}, true phi {s.phi}")
    return ExperimentRecord(
        experiment_id=cfg.experiment_id,
        seed=cfg.seed,
        trial=trial,
        trial_seed=trial_seed,
        bits=cfg.bits,
        modulus=s.to_dict() if cfg.disclose else {"n": str(s.n)},
        oracle=sample.to_dict(),
        outcome=outcome.to_dict(),
        lucky_events=sample.lucky_events,
        exact_probability=_exact_probability(s) if cfg.exact else None,
        wall_time_ns=elapsed if cfg.timings else None,
    )


def run_montecarlo(cfg: MonteCarloConfig) -> Tuple[List[ExperimentRecord], RunSummary]:
    log.info("experiment %s: %d trials at %d bits", cfg.experiment_id, cfg.trials, cfg.bits)
    trial = partial(run_trial, cfg)
    if cfg.workers > 1:
        chunksize = max(1, cfg.trials // (cfg.workers * 8))
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(trial, range(cfg.trials), chunksize=chunksize))
    else:
        records = [trial(index) for index in range(cfg.trials)]
    records.sort(key=lambda record: record.trial)
    summary = RunSummary.from_records(cfg.experiment_id, cfg.seed, cfg.bits, records)
    log.info("experiment %s: %d/%d successes", cfg.experiment_id, summary.successes, summary.trials)
    return records, summary


def benchmark(
    bits: int = 2048, calls: int = 100, seed: int = config.GLOBALSEED, sampled: bool = False
) -> Dict[str, Any]:
    """Time the order-based recovery on a constructed modulus.

    The order fed in is lambda(N), which is the order of some unit, unless `sampled` asks
    for the order of a random unit (much slower to compute at 2048 bits).
    """
    s = construct_semiprime(bits, seed)
    order = sample_order(s, random.Random(seed)).order if sampled else s.carmichael
    timings = []
    outcome = None
    for _ in range(calls):
        start = time.perf_counter_ns()
        outcome = recover_phi_from_order(s.n, order)
        timings.append(time.perf_counter_ns() - start)
    median = int(statistics.median(timings))
    return {
        "record": "benchmark",
        "bits": bits,
        "seed": str(seed),
        "n_bits": s.n.bit_length(),
        "order": str(order),
        "calls": calls,
        "succeeded": bool(outcome and outcome.succeeded),
        "median_ns": str(median),
        "max_ns": str(max(timings)),
        "under_50ms": median < 50_000_000,
    }
