#!/usr/bin/env python3
"""Restart-sweep experiment: best and mean PSL for a grid of (n, alpha).

Reproduces the style of the published fitness-exponent sweeps: for each
configuration, R independent restarts of the hill climb are run and the
best PSL (V*) and mean PSL (V-nabla) across restarts are reported.

Example:
    python3 scripts/fitness_sweep.py --n 100 --alphas 2 3 4 --restarts 30 \
        --threshold 10000 --seed 1
"""

from __future__ import annotations

import argparse
import json

from pslseq.harness import run_experiment


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, required=True, help="sequence length")
    ap.add_argument("--alphas", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--restarts", type=int, default=30)
    ap.add_argument("--threshold", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=1, help="master seed")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="emit one JSON record per row")
    args = ap.parse_args()

    for alpha in args.alphas:
        rec = run_experiment(
            n=args.n,
            alpha=alpha,
            restarts=args.restarts,
            threshold=args.threshold,
            master_seed=args.seed,
            workers=args.workers,
        )
        if args.json:
            print(json.dumps(rec.to_json()))
        else:
            print(
                f"n={args.n} alpha={alpha} R={args.restarts} T={args.threshold}: "
                f"V*={rec.v_star} V^={rec.v_nabla:.2f} best={rec.best_hex} "
                f"({rec.elapsed_seconds:.1f}s)"
            )


if __name__ == "__main__":
    main()
