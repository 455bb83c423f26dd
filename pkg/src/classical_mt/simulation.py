"""Monte Carlo oracle for the host/emperor story.

The simulation plays the generative story directly, without going through
:mod:`classical_mt.core`: the car (the pardon) is placed according to the
prior, then the host opens a door that is neither the picked one nor the
car, tossing an ``alpha`` coin when both remaining doors qualify.  Counts of
(true state, utterance) pairs are compared against analytic posteriors with
normal-approximation z-scores.

Trials are split into fixed-size blocks, each with its own generator derived
from ``(seed, block index)``.  The report therefore depends only on the
configuration, not on how many worker processes ran the blocks.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .core import MixedState
from .errors import (
    InvalidAlphaError,
    InvalidProblemError,
    InvalidStateError,
    NoConditioningEventsError,
    UnknownOutcomeError,
)
from .scalar import ONE, ZERO, as_scalar

__all__ = ["SimConfig", "SimReport", "simulate", "compare"]

BLOCK_SIZE = 1 << 16


@dataclass(frozen=True)
class SimConfig:
    prior: tuple[Fraction, ...] = (Fraction(1, 3),) * 3
    alpha: Fraction = Fraction(1, 2)
    trials: int = 100_000
    seed: int = 0
    picked: int = 0
    labels: tuple[str, ...] = ("A1", "A2", "A3")
    workers: int = 1

    def __post_init__(self):
        prior = tuple(as_scalar(p) for p in self.prior)
        if len(prior) != 3 or any(p < 0 for p in prior) or sum(prior, ZERO) != ONE:
            raise InvalidStateError(f"prior must be three non-negative weights summing to 1, got {prior}")
        alpha = as_scalar(self.alpha)
        if not ZERO < alpha < ONE:
            raise InvalidAlphaError(f"alpha must lie strictly between 0 and 1, got {alpha}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise InvalidProblemError(f"trials must be a positive integer, got {self.trials!r}")
        if self.picked not in (0, 1, 2):
            raise InvalidProblemError(f"picked must be a door index 0..2, got {self.picked!r}")
        if len(self.labels) != 3 or len(set(self.labels)) != 3:
            raise InvalidProblemError("three distinct labels are required")
        if self.workers < 1:
            raise InvalidProblemError("workers must be at least 1")
        object.__setattr__(self, "prior", prior)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "labels", tuple(self.labels))


@dataclass(frozen=True)
class SimReport:
    """Outcome of :func:`simulate`.

    ``counts[i][k]`` counts trials with the car behind door ``i`` in which
    door ``k`` was opened; the utterance for door ``k`` is ``str(k + 1)``.
    """

    config: SimConfig
    counts: tuple[tuple[int, ...], ...]
    opened_picked: int
    opened_car: int

    @property
    def trials(self) -> int:
        return sum(map(sum, self.counts))

    def _column(self, utterance: str) -> int:
        if utterance not in ("1", "2", "3"):
            raise UnknownOutcomeError(f"utterance must be '1', '2' or '3', got {utterance!r}")
        return int(utterance) - 1

    def utterance_count(self, utterance: str) -> int:
        k = self._column(utterance)
        return sum(row[k] for row in self.counts)

    def marginal_frequencies(self) -> dict[str, float]:
        n = self.trials
        return {str(k + 1): self.utterance_count(str(k + 1)) / n for k in range(3)}

    def conditional_frequencies(self, utterance: str) -> dict[str, float]:
        """Empirical law of the true state given the utterance."""
        k = self._column(utterance)
        n = self.utterance_count(utterance)
        if n == 0:
            raise NoConditioningEventsError(f"utterance {utterance!r} never occurred")
        return {label: row[k] / n for label, row in zip(self.config.labels, self.counts)}

    def to_dict(self, analytic: Mapping[str, MixedState] | None = None) -> dict:
        """JSON-ready summary; ``analytic`` maps utterances to posteriors to score."""
        cfg = self.config
        out = {
            "config": {
                "prior": [[p.numerator, p.denominator] for p in cfg.prior],
                "alpha": [cfg.alpha.numerator, cfg.alpha.denominator],
                "trials": cfg.trials,
                "seed": cfg.seed,
                "picked": cfg.labels[cfg.picked],
                "labels": list(cfg.labels),
            },
            "counts": [list(row) for row in self.counts],
            "validity": {"opened_picked": self.opened_picked, "opened_car": self.opened_car},
            "marginal": self.marginal_frequencies(),
            "conditional": {},
        }
        for k in range(3):
            u = str(k + 1)
            if self.utterance_count(u):
                out["conditional"][u] = self.conditional_frequencies(u)
        if analytic:
            out["z_scores"] = {u: compare(self, post, u) for u, post in analytic.items()}
        return out

    def counts_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["true_state", *(f"utterance_{k + 1}" for k in range(3))])
        for label, row in zip(self.config.labels, self.counts):
            writer.writerow([label, *row])
        return buf.getvalue()


def _run_block(args):
    seed, block, size, cdf, alpha, picked = args
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))
    car = np.searchsorted(cdf, rng.random(size), side="right")
    coin = rng.random(size) < alpha
    first, second = [i for i in range(3) if i != picked]
    # door indices sum to 3, so the forced door is 3 - picked - car
    opened = np.where(car == picked, np.where(coin, first, second), 3 - picked - car)
    counts = np.bincount(car * 3 + opened, minlength=9).reshape(3, 3)
    return counts, int(np.count_nonzero(opened == picked)), int(np.count_nonzero(opened == car))


def simulate(config: SimConfig) -> SimReport:
    """Run ``config.trials`` independent games; deterministic given the config."""
    # cumulative sums taken exactly, so a zero tail weight gives cdf == 1.0
    cdf = np.array([float(sum(config.prior[: i + 1], ZERO)) for i in range(3)])
    nblocks = math.ceil(config.trials / BLOCK_SIZE)
    jobs = [
        (config.seed, b, min(BLOCK_SIZE, config.trials - b * BLOCK_SIZE), cdf,
         float(config.alpha), config.picked)
        for b in range(nblocks)
    ]
    if config.workers > 1 and nblocks > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_block, jobs))
    else:
        results = [_run_block(job) for job in jobs]
    counts = sum(r[0] for r in results)
    return SimReport(
        config,
        tuple(tuple(int(c) for c in row) for row in counts),
        sum(r[1] for r in results),
        sum(r[2] for r in results),
    )


def compare(report: SimReport, analytic, utterance: str) -> dict[str, float]:
    """z-scores of the empirical conditional law against ``analytic``.

    ``analytic`` is a :class:`MixedState` or a ``label -> probability`` map.
    A point with analytic probability 0 or 1 scores 0 on exact agreement and
    ±inf otherwise.
    """
    freqs = report.conditional_frequencies(utterance)
    n = report.utterance_count(utterance)
    if isinstance(analytic, MixedState):
        analytic = analytic.as_dict()
    z = {}
    for label, freq in freqs.items():
        a = float(analytic[label])
        sigma = math.sqrt(a * (1 - a) / n)
        if sigma == 0:
            z[label] = 0.0 if freq == a else math.copysign(math.inf, freq - a)
        else:
            z[label] = (freq - a) / sigma
    return z
