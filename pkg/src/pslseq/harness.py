"""Experiment orchestration: multi-restart runs, hybrid seeding pipelines,
the exhaustive small-n oracle, and the embedded known-results check.

Restart i of an experiment uses seed master_seed + i; this derivation is part
of the output contract and must stay stable across releases.  Aggregation is
keyed by restart index, so results do not depend on completion order.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, seqcore, tables
from .flip import FitnessSpec
from .generators import LfsrSpec, legendre, mseq
from .rotation import rotate_left, scan_rotations
from .search import RNG_ID, SearchConfig, shc_run

__all__ = [
    "ExperimentRecord",
    "run_experiment",
    "hybrid_mseq",
    "hybrid_legendre",
    "exhaustive_psl",
    "verify_known_table",
    "default_workers",
    "EXHAUSTIVE_CAP",
]

EXHAUSTIVE_CAP = 24
THREADS_ENV = "PSLSEQ_THREADS"


def default_workers() -> int:
    value = os.environ.get(THREADS_ENV, "")
    if value.strip():
        return max(1, int(value))
    return 1


@dataclass
class ExperimentRecord:
    n: int
    alpha: int
    restarts: int
    threshold: int
    master_seed: int
    per_restart_psl: list[int]
    v_star: int  # minimum best PSL over restarts
    v_nabla: float  # arithmetic mean of per-restart bests
    best_hex: str
    elapsed_seconds: float
    seed_provenance: str = "random"
    stage_psl: int | None = None  # rotation-stage PSL for hybrid pipelines
    rng_id: str = RNG_ID
    timestamp: float = field(default_factory=time.time)

    def to_json(self) -> dict:
        return {
            "timestamp": self.timestamp,
            "n": self.n,
            "alpha": self.alpha,
            "restarts": self.restarts,
            "threshold": self.threshold,
            "master_seed": self.master_seed,
            "rng_id": self.rng_id,
            "best_psl": self.v_star,
            "best_hex": self.best_hex,
            "v_nabla": self.v_nabla,
            "elapsed_seconds": self.elapsed_seconds,
            "seed_provenance": self.seed_provenance,
        }


def _append_record(record: ExperimentRecord, path: str) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record.to_json(), sort_keys=True) + "\n")


def _run_restart(args) -> tuple[int, int, str]:
    index, config = args
    outcome = shc_run(config)
    return index, outcome.best_psl, seqcore.encode_hex(outcome.best_psl_sequence)


def run_experiment(
    n: int,
    alpha: int,
    restarts: int,
    threshold: int,
    master_seed: int,
    initial: np.ndarray | None = None,
    target_psl: int | None = None,
    workers: int | None = None,
    results_path: str | None = None,
    seed_provenance: str = "random",
    stage_psl: int | None = None,
) -> ExperimentRecord:
    """Run `restarts` independent hill-climbs and aggregate their best PSLs."""
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    t0 = time.perf_counter()
    jobs = [
        (
            i,
            SearchConfig(
                n=n,
                threshold=threshold,
                fitness=FitnessSpec(alpha),
                seed=master_seed + i,
                initial=initial,
                target_psl=target_psl,
            ),
        )
        for i in range(restarts)
    ]
    workers = default_workers() if workers is None else max(1, workers)
    if workers > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_restart, jobs))
    else:
        results = [_run_restart(job) for job in jobs]
    results.sort(key=lambda item: item[0])
    bests = [psl for _, psl, _ in results]
    v_star = min(bests)
    best_hex = next(h for _, psl, h in results if psl == v_star)
    record = ExperimentRecord(
        n=n,
        alpha=alpha,
        restarts=restarts,
        threshold=threshold,
        master_seed=master_seed,
        per_restart_psl=bests,
        v_star=v_star,
        v_nabla=sum(bests) / restarts,
        best_hex=best_hex,
        elapsed_seconds=time.perf_counter() - t0,
        seed_provenance=seed_provenance,
        stage_psl=stage_psl,
    )
    if results_path:
        _append_record(record, results_path)
    return record


def hybrid_mseq(
    spec: LfsrSpec,
    alpha: int,
    threshold: int,
    master_seed: int = 0,
    restarts: int = 1,
    target_psl: int | None = None,
    workers: int | None = None,
    results_path: str | None = None,
) -> ExperimentRecord:
    """m-sequence -> best rotation -> hill-climb, as one pipeline."""
    base = mseq(spec)
    scan = scan_rotations(base)
    seed_seq = rotate_left(base, scan.rho_max)
    return run_experiment(
        n=len(base),
        alpha=alpha,
        restarts=restarts,
        threshold=threshold,
        master_seed=master_seed,
        initial=seed_seq,
        target_psl=target_psl,
        workers=workers,
        results_path=results_path,
        seed_provenance=(
            f"mseq:poly={spec.poly:#x},state={spec.state:#x},rotation={scan.rho_max}"
        ),
        stage_psl=scan.min_psl,
    )


def hybrid_legendre(
    p: int,
    alpha: int,
    threshold: int,
    master_seed: int = 0,
    restarts: int = 1,
    target_psl: int | None = None,
    workers: int | None = None,
    results_path: str | None = None,
) -> ExperimentRecord:
    """Legendre sequence -> best rotation -> hill-climb, as one pipeline."""
    base = legendre(p)
    scan = scan_rotations(base)
    seed_seq = rotate_left(base, scan.rho_max)
    return run_experiment(
        n=p,
        alpha=alpha,
        restarts=restarts,
        threshold=threshold,
        master_seed=master_seed,
        initial=seed_seq,
        target_psl=target_psl,
        workers=workers,
        results_path=results_path,
        seed_provenance=f"legendre:p={p},rotation={scan.rho_max}",
        stage_psl=scan.min_psl,
    )


def exhaustive_psl(n: int, cap: int = EXHAUSTIVE_CAP) -> tuple[int, np.ndarray]:
    """True minimum PSL over all 2^n sequences, with one witness.

    Negation symmetry fixes the first element to +1 and reversal symmetry
    skips non-canonical patterns; both transforms preserve the PSL.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > cap:
        raise ValueError(f"n={n} above exhaustive cap {cap}")
    best, bits = _kernels.exhaustive_min_psl(n)
    return int(best), seqcore.decode_hex(format(int(bits), "x"), n)


def verify_known_table() -> list[dict]:
    """Recompute the PSL of every embedded published sequence.

    Mismatches are reported, not raised: each row carries the expected and
    computed values plus an ok flag.
    """
    report = []
    for n, hex_text, expected in tables.KNOWN_OPTIMAL + tables.NEAR_OPTIMAL:
        computed = seqcore.psl(seqcore.decode_hex(hex_text, n))
        report.append(
            {
                "n": n,
                "hex": hex_text,
                "expected_psl": expected,
                "computed_psl": computed,
                "ok": computed == expected,
            }
        )
    return report
