"""The revisited stochastic-hill-climbing kernel with quake perturbations.

One run repeatedly probes every single-bit flip from a random offset and
keeps the first flip that strictly lowers the fitness; a pass with no
improvement triggers a quake (2-4 random distinct flips) before probing
resumes.  The run stops after a fixed number of loop iterations.

Two interchangeable engines execute the inner loop: a numba int64 engine and
an exact arbitrary-precision reference.  Both consume the same random draws,
so they produce identical trajectories whenever the fast path's fitness
values fit in int64; on overflow the run transparently restarts on the
reference engine.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, seqcore
from .flip import FitnessSpec, SidelobeState, fitness, flip

__all__ = ["SearchConfig", "SearchOutcome", "RNG_ID", "quake", "shc_run"]

RNG_ID = "python-random-mt19937"


@dataclass
class SearchConfig:
    n: int
    threshold: int
    fitness: FitnessSpec = field(default_factory=FitnessSpec)
    seed: int = 0
    initial: np.ndarray | None = None
    # Stop early once this PSL is reached (None = run the full threshold).
    target_psl: int | None = None
    engine: str = "auto"  # "auto" | "reference"

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.threshold < 1:
            raise ValueError("threshold must be positive")
        if self.initial is not None:
            self.initial = seqcore.as_sequence(self.initial)
            if len(self.initial) != self.n:
                raise ValueError("initial sequence length must equal n")
        if self.engine not in ("auto", "reference"):
            raise ValueError(f"unknown engine {self.engine!r}")


@dataclass
class SearchOutcome:
    best_fitness_sequence: np.ndarray
    best_fitness_value: int
    best_psl_sequence: np.ndarray
    best_psl: int
    iterations_used: int
    quakes_performed: int
    elapsed_seconds: float
    rng_id: str = RNG_ID


class _EngineOverflow(Exception):
    """Fast-path int64 fitness is no longer trustworthy for this state."""


class _FastEngine:
    """int64 state with numba-updated sidelobes and table-lookup fitness."""

    def __init__(self, psi: np.ndarray, alpha: int):
        self.psi = psi.astype(np.int64)
        self.omega = seqcore.sidelobes(self.psi)
        self.alpha = alpha
        self.table = _kernels.build_power_table(len(psi), alpha)
        # Largest magnitude whose power is still sentinel-free (suffix of -1s).
        self.safe_v = len(self.table) - 1 - int(np.sum(self.table < 0))
        if np.any(self.table[np.abs(self.omega)] < 0):
            raise _EngineOverflow
        self.v = int(np.sum(self.table[np.abs(self.omega)]))

    def psl(self) -> int:
        return int(np.max(np.abs(self.omega)))

    def probe(self, r: int, v_star: int, best_psl: int):
        n = len(self.psi)
        # head_max[k] = max |omega[0..k-1]|: the part of the state a flip
        # with that d_min leaves untouched.
        head_max = np.zeros(n, dtype=np.int64)
        head_max[1:] = np.maximum.accumulate(np.abs(self.omega))[: n - 1]
        pos, nv, snap_pos, _ = _kernels.probe_pass(
            self.psi, self.omega, head_max, self.table, self.alpha, self.safe_v,
            r, self.v, v_star, best_psl,
        )
        if pos == _kernels.OVERFLOW:
            raise _EngineOverflow
        if pos >= 0:
            self.v = int(nv)
            return int(pos), int(snap_pos)
        return None, int(snap_pos)

    def quake(self, positions) -> None:
        for f in positions:
            delta, ok = _kernels.flip_update(self.psi, self.omega, self.table, f)
            if not ok:
                raise _EngineOverflow
            self.v += int(delta)

    def _raw_flip(self, f: int) -> None:
        _kernels.flip_update(self.psi, self.omega, self.table, f)

    def extract_state(self, snap_pos: int, applied_pos: int | None):
        """PSL and sequence of the probe state recorded at snap_pos."""
        if applied_pos is not None:
            self._raw_flip(applied_pos)
        self._raw_flip(snap_pos)
        p, seq = self.psl(), self.psi.copy()
        self._raw_flip(snap_pos)
        if applied_pos is not None:
            self._raw_flip(applied_pos)
        return p, seq


class _ReferenceEngine:
    """Exact mirror of the fast engine using arbitrary-precision fitness."""

    def __init__(self, psi: np.ndarray, alpha: int):
        self.state = SidelobeState.from_sequence(psi)
        self.spec = FitnessSpec(alpha)
        self.v = fitness(self.state.omega, self.spec)

    @property
    def psi(self) -> np.ndarray:
        return self.state.psi

    def psl(self) -> int:
        return self.state.psl()

    def probe(self, r: int, v_star: int, best_psl: int):
        n = self.state.n
        snap_pos, snap_psl = None, best_psl
        for i in range(n):
            f = (r + i) % n
            flip(f, self.state)
            nv = fitness(self.state.omega, self.spec)
            if nv < v_star:
                self.v = nv
                return f, -1 if snap_pos is None else snap_pos
            peak = self.state.psl()
            if peak < snap_psl:
                snap_pos, snap_psl = f, peak
            flip(f, self.state)
        return None, -1 if snap_pos is None else snap_pos

    def quake(self, positions) -> None:
        for f in positions:
            flip(f, self.state)
        self.v = fitness(self.state.omega, self.spec)

    def extract_state(self, snap_pos: int, applied_pos: int | None):
        if applied_pos is not None:
            flip(applied_pos, self.state)
        flip(snap_pos, self.state)
        p, seq = self.psl(), self.psi.copy()
        flip(snap_pos, self.state)
        if applied_pos is not None:
            flip(applied_pos, self.state)
        return p, seq


def quake(x: int, state: SidelobeState, rng: random.Random) -> SidelobeState:
    """Flip x distinct uniformly random positions, keeping omega consistent."""
    n = state.n
    if not 1 <= x <= n:
        raise ValueError(f"quake flip count {x} out of range [1, {n}]")
    for f in rng.sample(range(n), x):
        flip(f, state)
    return state


def shc_run(config: SearchConfig) -> SearchOutcome:
    """Run the hill-climbing kernel; deterministic given (config, seed)."""
    if config.engine == "reference":
        return _run(config, fast=False)
    try:
        return _run(config, fast=True)
    except _EngineOverflow:
        return _run(config, fast=False)


def _run(config: SearchConfig, fast: bool) -> SearchOutcome:
    t0 = time.perf_counter()
    rng = random.Random(config.seed)
    n = config.n
    alpha = config.fitness.alpha
    if config.initial is not None:
        psi = config.initial.copy()
    else:
        psi = np.array([1 if rng.getrandbits(1) else -1 for _ in range(n)], dtype=np.int64)
    engine = (_FastEngine if fast else _ReferenceEngine)(psi, alpha)

    v_star = engine.v
    best_fit_seq = engine.psi.copy()
    best_psl = engine.psl()
    best_psl_seq = engine.psi.copy()

    iterations = 0
    quakes = 0
    improving = True  # the G flag: probe while set, quake otherwise
    while iterations < config.threshold:
        if config.target_psl is not None and best_psl <= config.target_psl:
            break
        iterations += 1
        if improving:
            r = rng.randrange(1, n)
            # Accept the first flip that strictly improves the current
            # fitness; a failed pass therefore certifies a local optimum.
            pos, snap_pos = engine.probe(r, engine.v, best_psl)
            if snap_pos >= 0:
                p, seq = engine.extract_state(snap_pos, pos)
                if p < best_psl:
                    best_psl, best_psl_seq = p, seq
            if pos is not None:
                if engine.v < v_star:
                    v_star = engine.v
                    best_fit_seq = engine.psi.copy()
                p = engine.psl()
                if p < best_psl:
                    best_psl, best_psl_seq = p, engine.psi.copy()
            else:
                improving = False
        else:
            x = min(1 + rng.randrange(1, 4), n)  # quake cannot flip more than n bits
            engine.quake(rng.sample(range(n), x))
            quakes += 1
            improving = True
            p = engine.psl()
            if p < best_psl:
                best_psl, best_psl_seq = p, engine.psi.copy()

    return SearchOutcome(
        best_fitness_sequence=best_fit_seq,
        best_fitness_value=v_star if isinstance(v_star, int) else int(v_star),
        best_psl_sequence=best_psl_seq,
        best_psl=best_psl,
        iterations_used=iterations,
        quakes_performed=quakes,
        elapsed_seconds=time.perf_counter() - t0,
    )
