"""Seed-sequence constructions: LFSR m-sequences, Legendre sequences, random.

LFSR convention: a degree-m polynomial is an integer bit mask with bit m and
bit 0 set (leading and constant terms).  The register holds the next m output
bits with the oldest in the least significant position; each step emits that
bit and shifts in the parity of (register & low-order taps).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LfsrSpec",
    "NonPrimitivePolynomialError",
    "mseq",
    "legendre",
    "random_sequence",
    "is_prime",
]


class NonPrimitivePolynomialError(ValueError):
    """The LFSR revisited its initial state before reaching full period."""


@dataclass(frozen=True)
class LfsrSpec:
    poly: int  # coefficient mask including the x^m and constant terms
    state: int  # initial register contents, m bits, nonzero

    def __post_init__(self) -> None:
        if self.poly < 0b11 or not self.poly & 1:
            raise ValueError("polynomial must have nonzero constant and leading terms")
        m = self.degree
        if m < 2:
            raise ValueError("polynomial degree must be at least 2")
        if not 0 < self.state < (1 << m):
            raise ValueError("initial state must be a nonzero m-bit value")

    @property
    def degree(self) -> int:
        return self.poly.bit_length() - 1


def mseq(spec: LfsrSpec) -> np.ndarray:
    """Expand the LFSR to its full period of 2^m - 1 output bits, as +-1.

    Raises NonPrimitivePolynomialError if the state sequence closes early,
    which happens exactly when the polynomial is not primitive.
    """
    m = spec.degree
    period = (1 << m) - 1
    taps = spec.poly & ((1 << m) - 1)
    reg = spec.state
    bits = np.empty(period, dtype=np.int64)
    for t in range(period):
        bits[t] = reg & 1
        fb = (reg & taps).bit_count() & 1
        reg = (reg >> 1) | (fb << (m - 1))
        if reg == spec.state and t + 1 < period:
            raise NonPrimitivePolynomialError(
                f"polynomial {spec.poly:#x} has period {t + 1} < {period}"
            )
    return 2 * bits - 1


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid for all inputs below 2^64."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def legendre(p: int) -> np.ndarray:
    """Length-p sequence: +1 at 1-based index i iff i is a quadratic residue.

    Index p (congruent to 0) is not a residue and maps to -1, keeping the
    sequence strictly two-valued.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    seq = np.full(p, -1, dtype=np.int64)
    half = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    residues = np.unique(half * half % p)
    seq[residues - 1] = 1
    return seq


def random_sequence(n: int, rng: random.Random) -> np.ndarray:
    """Each element independently +-1 with probability 1/2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return np.array([1 if rng.getrandbits(1) else -1 for _ in range(n)], dtype=np.int64)
