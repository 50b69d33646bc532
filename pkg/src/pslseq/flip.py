"""Single-bit flip with O(n) in-place sidelobe maintenance, plus the fitness family.

The flip keeps a sequence and its sidelobe array consistent without ever
recomputing the full autocorrelation.  The two loop families below, including
their asymmetric bounds, are deliberately kept in their original index form;
correctness is pinned by the oracle tests against a direct recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import seqcore

__all__ = ["SidelobeState", "FitnessSpec", "flip", "fitness"]


@dataclass
class SidelobeState:
    """A sequence together with its always-consistent sidelobe array."""

    psi: np.ndarray
    omega: np.ndarray

    @classmethod
    def from_sequence(cls, b) -> "SidelobeState":
        psi = seqcore.as_sequence(b).copy()
        return cls(psi=psi, omega=seqcore.sidelobes(psi))

    def copy(self) -> "SidelobeState":
        return SidelobeState(psi=self.psi.copy(), omega=self.omega.copy())

    @property
    def n(self) -> int:
        return len(self.psi)

    def psl(self) -> int:
        return int(np.max(np.abs(self.omega)))


@dataclass(frozen=True)
class FitnessSpec:
    """Exponent of the sidelobe-magnitude fitness sum(|x|**alpha)."""

    alpha: int = 4

    def __post_init__(self) -> None:
        if not isinstance(self.alpha, int) or self.alpha < 1:
            raise ValueError("alpha must be a positive integer")


def flip(f: int, state: SidelobeState) -> SidelobeState:
    """Negate psi[f] and patch omega in O(n); returns the mutated state.

    The update branches on whether f lies in the left half of the sequence;
    with d_min = min(n-f-1, f) and d_max = max(n-f, f), the touched omega
    entries split into a single-product stretch and a paired-product stretch.
    """
    psi, omega = state.psi, state.omega
    n = len(psi)
    if not 0 <= f < n:
        raise ValueError(f"flip position {f} out of range [0, {n})")
    d_min = min(n - f - 1, f)
    d_max = max(n - f, f)
    two_bf = 2 * psi[f]
    if 2 * f <= n - 1:
        # omega[d_min+q] -= 2*psi[f]*psi[n-q-1] for q in [0, d_max-d_min-1)
        m1 = d_max - d_min - 1
        omega[d_min : d_min + m1] -= two_bf * psi[n - m1 :][::-1]
        # omega[d_max+q-1] -= 2*psi[f]*(psi[2f-q] + psi[q]) for q in [0, n-d_max)
        m2 = n - d_max
        omega[d_max - 1 : d_max - 1 + m2] -= two_bf * (
            psi[2 * f - m2 + 1 : 2 * f + 1][::-1] + psi[:m2]
        )
    else:
        # omega[d_min+q] -= 2*psi[f]*psi[q] for q in [0, d_max-d_min)
        m1 = d_max - d_min
        omega[d_min : d_min + m1] -= two_bf * psi[:m1]
        # omega[d_max+q] -= 2*psi[f]*(psi[d_max-d_min+q] + psi[n-q-1])
        # for q in [0, n-d_max-1)
        m2 = n - d_max - 1
        omega[d_max : d_max + m2] -= two_bf * (
            psi[d_max - d_min : d_max - d_min + m2] + psi[n - m2 :][::-1]
        )
    psi[f] = -psi[f]
    return state


def fitness(omega: np.ndarray, spec: FitnessSpec) -> int:
    """sum(|x|**alpha) over the sidelobe array, in exact integer arithmetic.

    Python integers give the arbitrary-width accumulator: for large n with
    alpha = 8 the worst case (n-1)**(alpha+1) overflows any fixed 64-bit sum.
    """
    alpha = spec.alpha
    return sum(int(x) ** alpha for x in np.abs(np.asarray(omega)).tolist())
