"""Cyclic rotations and the incremental full-rotation PSL scan.

Advancing a rotation by one step changes each stored sidelobe by a two-term
product of sequence elements, so the whole profile over all n rotations costs
O(n^2) instead of O(n^3).  The per-step correction for sidelobe index i is

    b[(rho-1) % n] * (b[(i+rho) % n] - b[(n-i+rho-2) % n])

which, over i = 0..n-2, is one contiguous window of the doubled sequence
minus its own reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import seqcore

__all__ = ["RotationScanResult", "rotate_left", "rotation_delta", "scan_rotations"]


@dataclass
class RotationScanResult:
    """PSL of every left-rotation, plus the best rotation found."""

    psl_per_rotation: np.ndarray  # length n, index rho
    rho_max: int  # smallest rotation index achieving the minimum
    min_psl: int


def rotate_left(b: np.ndarray, rho: int) -> np.ndarray:
    """Left-rotate rho positions: element i of the result is b[(i+rho) % n]."""
    seqcore.check_sequence(b)
    if rho < 0:
        raise ValueError("rotation count must be non-negative")
    return np.roll(b, -(rho % len(b)))


def rotation_delta(b: np.ndarray, rho: int, i: int) -> int:
    """Change of sidelobe i when the rotation advances from rho-1 to rho."""
    n = len(b)
    if rho < 1:
        raise ValueError("rho must be at least 1")
    if not 0 <= i < n - 1:
        raise ValueError(f"sidelobe index {i} out of range [0, {n - 1})")
    return int(b[(rho - 1) % n] * (b[(i + rho) % n] - b[(n - i + rho - 2) % n]))


def scan_rotations(b: np.ndarray) -> RotationScanResult:
    """PSL profile over all n left-rotations via the incremental update."""
    seqcore.check_sequence(b)
    n = len(b)
    omega = seqcore.sidelobes(b)
    profile = np.empty(n, dtype=np.int64)
    profile[0] = np.max(np.abs(omega))
    doubled = np.concatenate([b, b])
    for rho in range(1, n):
        window = doubled[rho : rho + n - 1]
        omega += b[rho - 1] * (window - window[::-1])
        profile[rho] = np.max(np.abs(omega))
    rho_max = int(np.argmin(profile))  # argmin takes the smallest index on ties
    return RotationScanResult(
        psl_per_rotation=profile, rho_max=rho_max, min_psl=int(profile[rho_max])
    )
