import json
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from order2phi import config


def _fraction(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else f"{value.numerator}/{value.denominator}"


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, separators=(",", ":"))


@dataclass(frozen=True)
class ExperimentRecord:
    """One Monte Carlo trial: a modulus, one oracle call, one recovery.

    Replaying (seed, bits, trial) regenerates the record exactly; ``wall_time_ns`` is only
    filled when timings were requested, since it is the one field that differs per run.
    """

    experiment_id: str
    seed: int
    trial: int
    trial_seed: int
    bits: int
    modulus: Dict[str, Any]
    oracle: Optional[Dict[str, str]] = None
    outcome: Optional[Dict[str, Any]] = None
    lucky_events: int = 0
    exact_probability: Optional[Fraction] = None
    error: Optional[str] = None
    wall_time_ns: Optional[int] = None

    @property
    def succeeded(self) -> bool:
        return self.outcome is not None and self.outcome["status"] == "success"

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "record": "trial",
            "experiment_id": self.experiment_id,
            "seed": str(self.seed),
            "rng": config.RNG_ALGORITHM,
            "trial": self.trial,
            "trial_seed": str(self.trial_seed),
            "bits": self.bits,
            "modulus": self.modulus,
            "oracle": self.oracle,
            "outcome": self.outcome,
            "lucky_events": self.lucky_events,
            "exact_probability": _fraction(self.exact_probability),
            "error": self.error,
        }
        if self.wall_time_ns is not None:
            payload["wall_time_ns"] = str(self.wall_time_ns)
        return payload

    def to_json(self) -> str:
        return dumps(self.to_dict())


@dataclass(frozen=True)
class RunSummary:
    experiment_id: str
    seed: int
    bits: int
    trials: int
    successes: int
    failures: int
    errors: int
    lucky_factor_events: int
    exact_probability: Optional[Fraction] = None
    z_score: Optional[float] = None
    median_wall_time_ns: Optional[int] = None

    @property
    def empirical_rate(self) -> float:
        return self.successes / self.trials

    @classmethod
    def from_records(
        cls, experiment_id: str, seed: int, bits: int, records: Sequence[ExperimentRecord]
    ) -> "RunSummary":
        """Aggregate trials; counters are order independent.

        The expected rate is the mean of the per-trial exact probabilities, and the z-score
        compares the observed successes against it with variance sum P(1-P) / n^2.
        """
        trials = len(records)
        successes = sum(record.succeeded for record in records)
        errors = sum(record.error is not None for record in records)
        exact: Optional[Fraction] = None
        z_score: Optional[float] = None
        probabilities = [record.exact_probability for record in records]
        if trials and all(probability is not None for probability in probabilities):
            known: List[Fraction] = [probability for probability in probabilities if probability is not None]
            exact = sum(known, Fraction(0)) / trials
            variance = sum((p * (1 - p) for p in known), Fraction(0)) / (trials * trials)
            if variance > 0:
                z_score = (successes / trials - float(exact)) / float(variance) ** 0.5
        timings = [record.wall_time_ns for record in records if record.wall_time_ns is not None]
        return cls(
            experiment_id=experiment_id,
            seed=seed,
            bits=bits,
            trials=trials,
            successes=successes,
            failures=trials - successes - errors,
            errors=errors,
            lucky_factor_events=sum(record.lucky_events for record in records),
            exact_probability=exact,
            z_score=z_score,
            median_wall_time_ns=int(statistics.median(timings)) if timings else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "record": "summary",
            "experiment_id": self.experiment_id,
            "seed": str(self.seed),
            "rng": config.RNG_ALGORITHM,
            "bits": self.bits,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "errors": self.errors,
            "lucky_factor_events": self.lucky_factor_events,
            "empirical_rate": self.empirical_rate,
            "exact_probability": _fraction(self.exact_probability),
            "z_score": self.z_score,
            "median_wall_time_ns": None if self.median_wall_time_ns is None else str(self.median_wall_time_ns),
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())
