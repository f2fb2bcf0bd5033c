"""Seeded Monte Carlo harness for two-group normal experiments.

Each trial draws two groups of n normal variates (the first group
shifted by the standardized mean difference, sigma fixed at 1), runs
the pooled t-test, classifies the statistic with the configured
procedure, and tallies the decision.  Frequencies estimate the
per-decision probabilities; the wrong-rejection rate scores decisions
against the true side of the effect.

Reproducibility contract: every trial owns a fixed, block-aligned slice
of a Philox counter stream derived from (seed, trial index), and
normals come from a Box-Muller transform of those uniforms.  Trial
data is therefore a pure function of seed and trial index, and integer
tallies merge associatively, so any chunking or worker count yields
identical reports.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .decisions import decision_regions
from .distributions import student_t

__all__ = [
    "Procedure",
    "SimulationConfig",
    "SimulationReport",
    "run_simulation",
    "wrong_rejection_grid",
]

# Trials processed per batch; bounds memory at chunk * 2n doubles.
_CHUNK_TRIALS = 16384
# Refuse configurations that would stream more uniforms than this.
_MAX_DRAWS = 1 << 40

# Five-decision index -> reported index under each procedure.
_MERGE = {
    "five-decision": np.array([0, 1, 2, 3, 4, 5]),
    "kaiser": np.array([0, 1, 3, 3, 3, 5]),
    "jones-tukey": np.array([0, 2, 2, 3, 4, 4]),
}


class Procedure(enum.Enum):
    FIVE_DECISION = "five-decision"
    KAISER = "kaiser"
    JONES_TUKEY = "jones-tukey"

    @property
    def index_set(self) -> tuple[int, ...]:
        if self is Procedure.FIVE_DECISION:
            return (1, 2, 3, 4, 5)
        if self is Procedure.KAISER:
            return (1, 3, 5)
        return (2, 3, 4)


@dataclass(frozen=True)
class SimulationConfig:
    n_per_group: int
    mean_diff_over_sigma: float
    alpha: float
    trials: int
    seed: int
    procedure: Procedure = Procedure.FIVE_DECISION

    def __post_init__(self) -> None:
        if self.n_per_group < 2:
            raise ValueError(f"n_per_group must be at least 2, got {self.n_per_group}")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not math.isfinite(self.mean_diff_over_sigma):
            raise ValueError("mean_diff_over_sigma must be finite")
        if not 0.0 < self.alpha <= 0.5:
            raise ValueError(f"alpha must lie in (0, 0.5], got {self.alpha!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit an unsigned 64-bit integer")
        if not isinstance(self.procedure, Procedure):
            raise ValueError(f"unknown procedure {self.procedure!r}")
        if 2 * self.n_per_group * self.trials > _MAX_DRAWS:
            raise ValueError("trials * n_per_group is too large to simulate")


@dataclass(frozen=True)
class SimulationReport:
    config: SimulationConfig
    counts: dict[int, int]
    freq: dict[int, float]
    mc_se: dict[int, float]
    wrong_rejection_rate: float
    wrong_rejection_mc_se: float
    seed: int

    def to_dict(self) -> dict:
        """JSON-ready form; keys are stable and values full precision."""
        return {
            "schema_version": 1,
            "procedure": self.config.procedure.value,
            "n_per_group": self.config.n_per_group,
            "mean_diff_over_sigma": self.config.mean_diff_over_sigma,
            "alpha": self.config.alpha,
            "trials": self.config.trials,
            "seed": self.seed,
            "counts": {str(k): v for k, v in self.counts.items()},
            "freq": {str(k): v for k, v in self.freq.items()},
            "mc_se": {str(k): v for k, v in self.mc_se.items()},
            "wrong_rejection_rate": self.wrong_rejection_rate,
            "wrong_rejection_mc_se": self.wrong_rejection_mc_se,
        }


def _trial_uniforms(seed: int, start: int, count: int, n_per_group: int) -> np.ndarray:
    """Uniforms for trials [start, start+count), shape (count, 2n).

    Philox advance() moves the counter in blocks of four 64-bit
    outputs, so each trial is padded to whole blocks: trial i owns
    blocks [i*bpt, (i+1)*bpt) with bpt = ceil(2n/4).  Slicing off the
    padding keeps every trial's draws independent of chunking.
    """
    need = 2 * n_per_group
    bpt = (need + 3) // 4
    bit_gen = np.random.Philox(key=seed)
    bit_gen.advance(start * bpt)
    u = np.random.Generator(bit_gen).random(count * bpt * 4)
    return u.reshape(count, bpt * 4)[:, :need]


def _simulate_chunk(args: tuple) -> np.ndarray:
    """Decision tallies (length-6 array indexed by decision) for one
    chunk of trials.  Top level so process pools can pickle it."""
    seed, start, count, n, effect, boundaries, procedure_value = args
    u = _trial_uniforms(seed, start, count, n)
    u1 = u[:, 0::2]
    u2 = u[:, 1::2]
    radius = np.sqrt(-2.0 * np.log1p(-u1))  # log1p keeps u=0 finite
    angle = (2.0 * np.pi) * u2
    normals = np.empty_like(u)
    normals[:, 0::2] = radius * np.cos(angle)
    normals[:, 1::2] = radius * np.sin(angle)

    group_a = normals[:, :n] + effect
    group_b = normals[:, n:]
    mean_a = group_a.mean(axis=1)
    mean_b = group_b.mean(axis=1)
    var_a = np.square(group_a - mean_a[:, None]).sum(axis=1) / (n - 1)
    var_b = np.square(group_b - mean_b[:, None]).sum(axis=1) / (n - 1)
    se = np.sqrt((var_a + var_b) / n)  # pooled s * sqrt(2/n)
    t = (mean_a - mean_b) / se

    q1, q2, q3, q4 = boundaries
    idx = 1 + (t >= q1) + (t >= q2) + (t > q3) + (t > q4)
    merged = _MERGE[procedure_value][idx]
    return np.bincount(merged, minlength=6)


def _wrong_indices(effect: float, procedure: Procedure) -> tuple[int, ...]:
    # Decisions that misstate the true side of the effect.  With the
    # effect exactly at zero the two-one-sided procedure has no valid
    # no-rejection guarantee; its directional decisions are counted and
    # reported without an alpha bound.
    if effect > 0:
        wrong = {1, 2}
    elif effect < 0:
        wrong = {4, 5}
    elif procedure is Procedure.JONES_TUKEY:
        wrong = {2, 4}
    else:
        wrong = {1, 5}
    return tuple(sorted(wrong & set(procedure.index_set)))


def run_simulation(cfg: SimulationConfig, workers: int = 1) -> SimulationReport:
    """Run all trials and tally decisions.

    workers > 1 distributes fixed-size chunks over a process pool; the
    report is identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    null = student_t(2 * cfg.n_per_group - 2)
    boundaries = decision_regions(null, cfg.alpha).boundaries

    tasks = [
        (
            cfg.seed,
            start,
            min(_CHUNK_TRIALS, cfg.trials - start),
            cfg.n_per_group,
            cfg.mean_diff_over_sigma,
            boundaries,
            cfg.procedure.value,
        )
        for start in range(0, cfg.trials, _CHUNK_TRIALS)
    ]
    totals = np.zeros(6, dtype=np.int64)
    if workers == 1 or len(tasks) == 1:
        for task in tasks:
            totals += _simulate_chunk(task)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for counts in pool.map(_simulate_chunk, tasks):
                totals += counts

    keys = cfg.procedure.index_set
    counts = {k: int(totals[k]) for k in keys}
    freq = {k: counts[k] / cfg.trials for k in keys}
    mc_se = {
        k: math.sqrt(freq[k] * (1.0 - freq[k]) / cfg.trials) for k in keys
    }
    wrong_count = sum(counts[k] for k in _wrong_indices(cfg.mean_diff_over_sigma, cfg.procedure))
    wrong_rate = wrong_count / cfg.trials
    wrong_se = math.sqrt(wrong_rate * (1.0 - wrong_rate) / cfg.trials)
    return SimulationReport(
        config=cfg,
        counts=counts,
        freq=freq,
        mc_se=mc_se,
        wrong_rejection_rate=wrong_rate,
        wrong_rejection_mc_se=wrong_se,
        seed=cfg.seed,
    )


def wrong_rejection_grid(
    effects: Sequence[float], cfg_template: SimulationConfig, workers: int = 1
) -> list[tuple[float, float, float]]:
    """Wrong-rejection rate at each effect, holding everything else
    (including the seed) fixed.  Returns (effect, rate, mc_se) rows."""
    rows = []
    for effect in effects:
        cfg = dataclasses.replace(cfg_template, mean_diff_over_sigma=float(effect))
        report = run_simulation(cfg, workers=workers)
        rows.append(
            (float(effect), report.wrong_rejection_rate, report.wrong_rejection_mc_se)
        )
    return rows
