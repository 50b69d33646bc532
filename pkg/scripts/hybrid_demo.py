#!/usr/bin/env python3
"""Hybrid pipeline demo: structured seed -> best rotation -> hill climb.

Generates an m-sequence (or Legendre sequence), finds its PSL-minimal
cyclic rotation with the O(n) incremental scan, then polishes that rotation
with the stochastic hill climb. Prints the PSL after each stage.

Example (degree-13 m-sequence, best known rotation PSL 85):
    python3 scripts/hybrid_demo.py mseq --poly 0x213b --alpha 4 \
        --threshold 3000 --seed 1 --target-psl 84
"""

from __future__ import annotations

import argparse

from pslseq.generators import LfsrSpec
from pslseq.harness import hybrid_legendre, hybrid_mseq


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    sub = ap.add_subparsers(dest="kind", required=True)

    ap_m = sub.add_parser("mseq", help="seed from an LFSR m-sequence")
    ap_m.add_argument("--poly", type=lambda s: int(s, 0), required=True,
                      help="primitive polynomial bit mask, e.g. 0x213b")
    ap_m.add_argument("--state", type=lambda s: int(s, 0), default=1)

    ap_l = sub.add_parser("legendre", help="seed from a Legendre sequence")
    ap_l.add_argument("--p", type=int, required=True, help="odd prime length")

    for p in (ap_m, ap_l):
        p.add_argument("--alpha", type=int, default=4)
        p.add_argument("--threshold", type=int, default=3000)
        p.add_argument("--restarts", type=int, default=1)
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--target-psl", type=int, default=None)

    args = ap.parse_args()
    kwargs = dict(
        alpha=args.alpha,
        threshold=args.threshold,
        restarts=args.restarts,
        master_seed=args.seed,
        target_psl=args.target_psl,
    )
    if args.kind == "mseq":
        rec = hybrid_mseq(LfsrSpec(args.poly, args.state), **kwargs)
    else:
        rec = hybrid_legendre(args.p, **kwargs)

    print(f"seed: {rec.seed_provenance}")
    print(f"best-rotation PSL: {rec.stage_psl}")
    print(f"final PSL: {rec.v_star} (hex {rec.best_hex}, {rec.elapsed_seconds:.1f}s)")


if __name__ == "__main__":
    main()
