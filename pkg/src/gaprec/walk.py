"""The increasing random walk ``X_t = X_{t-1} + a_i`` (probability ``p_i``).

With weights normalised to a probability vector, ``g_k`` from the recurrence
is the probability that the walk ever sits at ``k`` and ``F_t`` is the
distribution of ``X_t``. Both are computed exactly here, and the visit
probabilities are also estimated by simulation.

RNG contract
------------
Walk ``i`` of a run seeded with ``seed`` draws from its own SplitMix64 stream
started at ``sub_seed(seed, i) = mix64(seed ^ mix64(i))``, where ``mix64`` is
the SplitMix64 finaliser. Draw ``j`` (0-based) of that stream is
``mix64(sub_seed + (j + 1) * 0x9E3779B97F4A7C15 mod 2**64)``. A 64-bit draw
``u`` selects generator ``i`` when ``T_{i-1} <= u < T_i``, with
``T_i = floor(2**64 * (p_1 + ... + p_i))`` computed exactly. Because every
draw is a pure function of ``(seed, walk, step)`` the result does not depend
on how walks are split between workers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import GapRecError, NonPositiveWeight
from .rational import as_rational
from .recurrence import SequenceWindow, run_recurrence, weight_vector
from .semigroup import NumericalSemigroup
from .series import PowerSeries, f_t

RNG_FAMILY = "splitmix64-counter"

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_CHUNK = 8192


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def sub_seeds(seed: int, walk_indices: np.ndarray) -> np.ndarray:
    base = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    return _mix64(base ^ _mix64(walk_indices.astype(np.uint64)))


def normalize_weights(w: Sequence) -> tuple[Fraction, ...]:
    """Scale positive weights to an exact probability vector."""
    ws = tuple(as_rational(x) for x in w)
    for x in ws:
        if x <= 0:
            raise NonPositiveWeight(x)
    total = sum(ws)
    return tuple(x / total for x in ws)


def _probabilities(S: NumericalSemigroup, p: Sequence) -> tuple[Fraction, ...]:
    p = weight_vector(S, p)
    if sum(p) != 1:
        raise GapRecError(f"probabilities sum to {sum(p)}, not 1")
    return p


def exact_visit_probabilities(S: NumericalSemigroup, p: Sequence, D: int) -> SequenceWindow:
    return run_recurrence(S, _probabilities(S, p), D)


def step_distribution(S: NumericalSemigroup, p: Sequence, t: int, D: int) -> PowerSeries:
    """Exact law of ``X_t`` restricted to ``0..D``."""
    return f_t(S, _probabilities(S, p), t, D)


@dataclass(frozen=True)
class WalkConfig:
    semigroup: NumericalSemigroup
    probabilities: tuple[Fraction, ...]
    num_walks: int
    max_state: int
    seed: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "probabilities", _probabilities(self.semigroup, self.probabilities)
        )
        if self.num_walks < 1:
            raise GapRecError("num_walks must be at least 1")
        if self.max_state < 1:
            raise GapRecError("max_state must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise GapRecError("seed must be an unsigned 64-bit integer")

    def thresholds(self) -> np.ndarray:
        cum = Fraction(0)
        out = []
        for pi in self.probabilities[:-1]:
            cum += pi
            out.append(math.floor(cum * 2**64))
        return np.array(out, dtype=np.uint64)


@dataclass(frozen=True)
class VisitEstimate:
    num_walks: int
    hit_counts: tuple[int, ...]

    @property
    def max_state(self) -> int:
        return len(self.hit_counts) - 1

    def estimate(self, k: int) -> float:
        return self.hit_counts[k] / self.num_walks

    def standard_error(self, k: int) -> float:
        p = self.estimate(k)
        return math.sqrt(p * (1.0 - p) / self.num_walks)


def _run_block(config: WalkConfig, start: int, stop: int) -> np.ndarray:
    gens = np.array(config.semigroup.generators, dtype=np.int64)
    thresholds = config.thresholds()
    hits = np.zeros(config.max_state + 1, dtype=np.int64)
    hits[0] = stop - start
    state = sub_seeds(config.seed, np.arange(start, stop, dtype=np.uint64))
    pos = np.zeros(stop - start, dtype=np.int64)
    with np.errstate(over="ignore"):
        while state.size:
            state = state + _GAMMA
            u = _mix64(state)
            pos = pos + gens[np.searchsorted(thresholds, u, side="right")]
            alive = pos <= config.max_state
            pos = pos[alive]
            state = state[alive]
            hits += np.bincount(pos, minlength=config.max_state + 1)
    return hits


def worker_count() -> int:
    env = os.environ.get("GAPREC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def simulate(config: WalkConfig, workers: int | None = None) -> VisitEstimate:
    """Run ``num_walks`` walks and count, per state, how many walks visit it."""
    if workers is None:
        workers = worker_count()
    blocks = [
        (lo, min(lo + _CHUNK, config.num_walks))
        for lo in range(0, config.num_walks, _CHUNK)
    ]
    if workers <= 1 or len(blocks) == 1:
        parts = [_run_block(config, lo, hi) for lo, hi in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _run_block(config, *b), blocks))
    total = np.sum(parts, axis=0)
    return VisitEstimate(config.num_walks, tuple(int(h) for h in total))
