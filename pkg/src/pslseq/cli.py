"""Command-line interface; hex strings are the interchange format throughout.

Machine-readable mode (--format json) emits one JSON object per line after a
version header line.  Timing fields are omitted there so that identical seeds
reproduce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys

import numpy as np

from . import harness, seqcore
from .generators import LfsrSpec, legendre, mseq
from .rotation import scan_rotations
from .search import RNG_ID

FORMAT_HEADER = {"pslseq_format": 1}


def default_alpha(n: int) -> int:
    """Length-banded fitness exponent: longer sequences get a larger alpha."""
    if n <= 500:
        return 3
    if n <= 1500:
        return 4
    if n <= 3000:
        return 5
    return 6


def _emit_json(payload: dict) -> None:
    print(json.dumps(FORMAT_HEADER, sort_keys=True))
    print(json.dumps(payload, sort_keys=True))


def _parse_seq(text: str) -> np.ndarray:
    mapping = {"+": 1, "1": 1, "-": -1, "0": -1}
    try:
        return seqcore.as_sequence([mapping[ch] for ch in text.strip()])
    except KeyError as exc:
        raise ValueError(f"unexpected sequence character {exc.args[0]!r}") from None


def _seq_text(b: np.ndarray) -> str:
    return "".join("+" if e > 0 else "-" for e in b)


def _resolve_seed(args) -> int:
    return args.seed if args.seed is not None else secrets.randbits(32)


def _record_payload(record: harness.ExperimentRecord) -> dict:
    payload = record.to_json()
    del payload["elapsed_seconds"]
    del payload["timestamp"]
    return payload


def cmd_psl(args) -> int:
    value = seqcore.psl(seqcore.decode_hex(args.hex, args.n))
    if args.format == "json":
        _emit_json({"command": "psl", "n": args.n, "hex": args.hex, "psl": value})
    else:
        print(value)
    return 0


def cmd_decode(args) -> int:
    b = seqcore.decode_hex(args.hex, args.n)
    if args.format == "json":
        _emit_json({"command": "decode", "n": args.n, "hex": args.hex, "sequence": _seq_text(b)})
    else:
        print(_seq_text(b))
    return 0


def cmd_encode(args) -> int:
    b = _parse_seq(args.seq)
    text = seqcore.encode_hex(b)
    if args.format == "json":
        _emit_json({"command": "encode", "n": len(b), "hex": text})
    else:
        print(text)
    return 0


def cmd_optimize(args) -> int:
    seed = _resolve_seed(args)
    n = args.n
    initial = seqcore.decode_hex(args.init_hex, n) if args.init_hex else None
    alpha = args.alpha if args.alpha is not None else default_alpha(n)
    record = harness.run_experiment(
        n=n,
        alpha=alpha,
        restarts=args.restarts,
        threshold=args.threshold,
        master_seed=seed,
        initial=initial,
        target_psl=args.target_psl,
        workers=args.threads,
        results_path=args.results,
        seed_provenance="random" if initial is None else "given",
    )
    if args.format == "json":
        _emit_json({"command": "optimize", **_record_payload(record)})
    else:
        print(f"seed: {seed}  rng: {RNG_ID}")
        print(f"best PSL: {record.v_star}")
        print(f"best hex: {record.best_hex}")
        print(f"mean-of-bests: {record.v_nabla:.2f}  elapsed: {record.elapsed_seconds:.2f}s")
    return 0


def cmd_sweep(args) -> int:
    seed = _resolve_seed(args)
    alphas = [int(a) for a in args.alphas.split(",") if a.strip()]
    records = []
    for offset, alpha in enumerate(alphas):
        records.append(
            harness.run_experiment(
                n=args.n,
                alpha=alpha,
                restarts=args.restarts,
                threshold=args.threshold,
                master_seed=seed + offset * 1_000_003,
                workers=args.threads,
                results_path=args.results,
            )
        )
    if args.format == "json":
        print(json.dumps(FORMAT_HEADER, sort_keys=True))
        for record in records:
            print(json.dumps({"command": "sweep", **_record_payload(record)}, sort_keys=True))
    else:
        print(f"seed: {seed}  rng: {RNG_ID}")
        header = f"{'n':>6} {'alpha':>5} {'R':>5} {'T':>8} {'V*':>5} {'V_mean':>8}"
        print(header)
        for record in records:
            print(
                f"{record.n:>6} {record.alpha:>5} {record.restarts:>5} "
                f"{record.threshold:>8} {record.v_star:>5} {record.v_nabla:>8.2f}"
            )
    return 0


def cmd_rotate_scan(args) -> int:
    b = seqcore.decode_hex(args.hex, args.n)
    result = scan_rotations(b)
    if args.profile_out:
        with open(args.profile_out, "w", encoding="utf-8") as fh:
            fh.writelines(f"{rho},{p}\n" for rho, p in enumerate(result.psl_per_rotation))
    if args.format == "json":
        _emit_json(
            {
                "command": "rotate-scan",
                "n": args.n,
                "hex": args.hex,
                "rho_max": result.rho_max,
                "min_psl": result.min_psl,
                "psl_per_rotation": result.psl_per_rotation.tolist(),
            }
        )
    else:
        print(f"rho_max: {result.rho_max}")
        print(f"min PSL: {result.min_psl}")
    return 0


def cmd_gen(args) -> int:
    if args.kind == "mseq":
        spec = LfsrSpec(poly=int(args.poly, 16), state=int(args.state, 16))
        b = mseq(spec)
    else:
        b = legendre(args.p)
    text = seqcore.encode_hex(b)
    if args.format == "json":
        _emit_json({"command": "gen", "kind": args.kind, "n": len(b), "hex": text})
    else:
        print(f"n: {len(b)}")
        print(f"hex: {text}")
    return 0


def cmd_exhaustive(args) -> int:
    best, witness = harness.exhaustive_psl(args.n)
    text = seqcore.encode_hex(witness)
    if args.format == "json":
        _emit_json({"command": "exhaustive", "n": args.n, "optimal_psl": best, "hex": text})
    else:
        print(f"optimal PSL: {best}")
        print(f"witness hex: {text}")
    return 0


def cmd_verify_table(args) -> int:
    report = harness.verify_known_table()
    bad = [row for row in report if not row["ok"]]
    if args.format == "json":
        print(json.dumps(FORMAT_HEADER, sort_keys=True))
        for row in report:
            print(json.dumps({"command": "verify-table", **row}, sort_keys=True))
    else:
        print(f"{len(report)} entries checked, {len(bad)} mismatches")
        for row in bad:
            print(
                f"  n={row['n']} hex={row['hex']} expected {row['expected_psl']} "
                f"computed {row['computed_psl']}"
            )
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pslseq",
        description="Low peak-sidelobe-level binary sequence toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("psl", help="PSL of a hex-encoded sequence")
    p.add_argument("--hex", required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_psl)

    p = sub.add_parser("decode", help="hex to +- sequence text")
    p.add_argument("--hex", required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", help="+-/01 sequence text to hex")
    p.add_argument("--seq", required=True)
    add_format(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("optimize", help="multi-restart hill-climb search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=None, help="fitness exponent (default: by length)")
    p.add_argument("--threshold", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--init-hex", default=None)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--target-psl", type=int, default=None)
    p.add_argument("--results", default=None, help="append a JSON record to this file")
    add_format(p)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("sweep", help="compare fitness exponents at one length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphas", required=True, help="comma-separated exponents")
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--threshold", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--results", default=None)
    add_format(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("rotate-scan", help="PSL over all cyclic rotations")
    p.add_argument("--hex", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile-out", default=None, help="write rho,psl lines to this file")
    add_format(p)
    p.set_defaults(func=cmd_rotate_scan)

    p = sub.add_parser("gen", help="algebraic seed sequences")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    g = gen_sub.add_parser("mseq", help="LFSR m-sequence")
    g.add_argument("--poly", required=True, help="polynomial mask in hex, incl. leading term")
    g.add_argument("--state", required=True, help="initial register state in hex, nonzero")
    add_format(g)
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("legendre", help="quadratic-residue sequence")
    g.add_argument("--p", type=int, required=True)
    add_format(g)
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("exhaustive", help="true optimum by pruned enumeration")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_exhaustive)

    p = sub.add_parser("verify-table", help="recheck the embedded published sequences")
    add_format(p)
    p.set_defaults(func=cmd_verify_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
