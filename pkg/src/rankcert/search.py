"""Random search for small injective ensembles.

Each trial draws an ensemble of uniform random integer matrices and runs
the certifier on it.  Trial ``t`` of seed ``s`` uses its own
``random.Random("rankcert:s:t")`` stream (string seeds are hashed with
SHA-512 by CPython, so streams are identical on every platform) and is
therefore reproducible on its own and independent of worker scheduling.
"""

from __future__ import annotations

import json
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .certify import (
    FAIL,
    INDETERMINATE,
    INJECTIVE,
    CertifyConfig,
    Certificate,
    MeasurementEnsemble,
    vinzant_certify,
)
from .groebner import Limits

log = logging.getLogger(__name__)


@dataclass
class SearchConfig:
    n: int
    r: int = 1
    symmetric: bool = False
    m: int = 1
    lo: int = -4
    hi: int = 4
    trials: int = 1
    seed: int = 0
    max_pairs: int = 10**6
    max_degree: int = 64
    timeout: float | None = None  # per trial
    workers: int = 1

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty entry range [{self.lo}, {self.hi}]")
        if self.m < 1:
            raise ValueError("ensemble size must be at least 1")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.n < 2 or self.r < 1 or 2 * self.r > self.n:
            raise ValueError(f"need n >= 2 and 1 <= r <= n/2, got n={self.n}, r={self.r}")

    @property
    def limits(self) -> Limits:
        return Limits(self.max_pairs, self.max_degree, self.timeout)


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"rankcert:{seed}:{trial}")


def random_ensemble(config: SearchConfig, trial: int) -> MeasurementEnsemble:
    rng = trial_rng(config.seed, trial)
    n = config.n
    mats = [[[rng.randint(config.lo, config.hi) for _ in range(n)] for _ in range(n)] for _ in range(config.m)]
    return MeasurementEnsemble(n=n, matrices=mats, r=config.r, symmetric=config.symmetric)


def _scrub_timings(obj):
    """Drop wall-clock fields so reports are byte-reproducible."""
    if isinstance(obj, dict):
        return {k: _scrub_timings(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [_scrub_timings(v) for v in obj]
    return obj


def _run_trial(args) -> tuple[int, dict, dict]:
    config, trial = args
    E = random_ensemble(config, trial)
    try:
        cert = vinzant_certify(E, CertifyConfig(limits=config.limits))
    except Exception as exc:  # noqa: BLE001 - every failure becomes a tally
        cert = Certificate(verdict=INDETERMINATE, reason=f"error: {exc}", n=E.n, r=E.r, symmetric=E.symmetric, m=E.m)
    return trial, E.to_json(), _scrub_timings(cert.to_json())


@dataclass
class SearchReport:
    config: SearchConfig
    tallies: dict = field(default_factory=dict)
    reasons: dict = field(default_factory=dict)
    found: list = field(default_factory=list)  # {"trial", "ensemble", "certificate"}

    def to_json(self) -> dict:
        return {
            "config": asdict(self.config),
            "tallies": self.tallies,
            "reasons": self.reasons,
            "found": self.found,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    def injective_ensembles(self) -> list[MeasurementEnsemble]:
        return [MeasurementEnsemble.from_json(f["ensemble"]) for f in self.found]


def search_minimal(config: SearchConfig) -> SearchReport:
    jobs = [(config, t) for t in range(config.trials)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_trial, jobs))
    else:
        results = [_run_trial(j) for j in jobs]
    results.sort(key=lambda x: x[0])
    tallies = Counter({INJECTIVE: 0, FAIL: 0, INDETERMINATE: 0})
    reasons: Counter = Counter()
    found = []
    for trial, ens, cert in results:
        tallies[cert["verdict"]] += 1
        if cert["verdict"] == INJECTIVE:
            found.append({"trial": trial, "ensemble": ens, "certificate": cert})
        else:
            reasons[cert["reason"]] += 1
        log.debug("trial %d: %s %s", trial, cert["verdict"], cert["reason"])
    return SearchReport(config, dict(tallies), dict(sorted(reasons.items())), found)
