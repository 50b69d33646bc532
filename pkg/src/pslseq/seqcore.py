"""Binary +-1 sequences: aperiodic autocorrelation, PSL, and the hex codec.

A sequence is a 1-d numpy int64 array whose elements are all -1 or +1 and
whose length is at least 2.  The sidelobe array stores the n-1 nonzero-shift
autocorrelations in reversed shift order: values[i] = C_{n-1-i}.  That layout
is what the incremental flip update in :mod:`pslseq.flip` writes into.

Hex interchange convention: a sequence maps to an n-bit big-endian bit string
(bit 1 -> +1, bit 0 -> -1, most significant bit first), read as an unsigned
integer and printed in lowercase hex with leading zero digits dropped.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_sequence",
    "check_sequence",
    "autocorrelation",
    "sidelobes",
    "psl",
    "decode_hex",
    "encode_hex",
    "transform",
]


def as_sequence(values) -> np.ndarray:
    """Coerce an iterable of +-1 values to a validated sequence array."""
    arr = np.asarray(values, dtype=np.int64)
    check_sequence(arr)
    return arr


def check_sequence(b: np.ndarray) -> None:
    """Raise ValueError unless b is a valid +-1 sequence of length >= 2."""
    if b.ndim != 1:
        raise ValueError("sequence must be one-dimensional")
    if b.shape[0] < 2:
        raise ValueError("sequence length must be at least 2")
    if not np.all(np.abs(b) == 1):
        raise ValueError("sequence elements must be -1 or +1")


def autocorrelation(b: np.ndarray, u: int) -> int:
    """Aperiodic autocorrelation C_u = sum_j b[j]*b[j+u]; C_0 is the mainlobe n."""
    n = len(b)
    if not 0 <= u < n:
        raise ValueError(f"shift {u} out of range [0, {n})")
    return int(np.dot(b[: n - u], b[u:]))


def sidelobes(b: np.ndarray) -> np.ndarray:
    """All nonzero-shift autocorrelations, stored as values[i] = C_{n-1-i}."""
    n = len(b)
    full = np.correlate(b, b, mode="full")
    # full[n-1+u] = C_u, so C_{n-1}, ..., C_1 reversed is full[n:][::-1]
    return full[n:][::-1].astype(np.int64)


def psl(b: np.ndarray) -> int:
    """Peak sidelobe level: max |C_u| over 0 < u < n."""
    n = len(b)
    full = np.correlate(b, b, mode="full")
    return int(np.max(np.abs(full[n:])))


def decode_hex(text: str, n: int) -> np.ndarray:
    """Decode a hex string to a length-n sequence (MSB first, 1 -> +1)."""
    if n < 2:
        raise ValueError("sequence length must be at least 2")
    value = int(text, 16)
    if value < 0 or value >> n:
        raise ValueError(f"hex value {text!r} does not fit in {n} bits")
    shifts = np.arange(n - 1, -1, -1, dtype=object)
    bits = np.array([(value >> int(s)) & 1 for s in shifts], dtype=np.int64)
    return 2 * bits - 1


def encode_hex(b: np.ndarray) -> str:
    """Inverse of decode_hex; leading zero digits are dropped (0 -> "0")."""
    check_sequence(b)
    value = 0
    for e in b:
        value = (value << 1) | (1 if e > 0 else 0)
    return format(value, "x")


def transform(b: np.ndarray, kind: str) -> np.ndarray:
    """Return the negated or reversed sequence; both preserve the PSL."""
    check_sequence(b)
    if kind == "negate":
        return -b
    if kind == "reverse":
        return b[::-1].copy()
    raise ValueError(f"unknown transform {kind!r}")
