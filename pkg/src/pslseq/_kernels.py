"""Numba-compiled hot paths: flip probing and the exhaustive small-n search.

These kernels mirror the pure-Python implementations in :mod:`pslseq.flip`
and :mod:`pslseq.harness`; equivalence is enforced by tests.  Fitness values
here live in int64, guarded by a sentinel power table: table[v] is v**alpha
when (n-1)*v**alpha still fits in int64, and -1 otherwise.  A kernel that
touches a sentinel entry reports failure and the caller falls back to the
exact arbitrary-precision path.
"""

from __future__ import annotations

import numpy as np
from numba import njit

INT64_MAX = np.iinfo(np.int64).max

OVERFLOW = -2  # probe_pass sentinel: int64 fitness no longer trustworthy
NO_IMPROVEMENT = -1


def build_power_table(n: int, alpha: int) -> np.ndarray:
    """Power table with -1 marking entries whose total could overflow int64."""
    limit = INT64_MAX // max(n - 1, 1)
    table = np.empty(n, dtype=np.int64)
    for v in range(n):
        p = v**alpha
        table[v] = p if p <= limit else -1
    return table


@njit(cache=True)
def flip_update(psi, omega, table, f):
    """Apply the O(n) single-flip sidelobe update; return (fitness_delta, ok)."""
    n = psi.shape[0]
    d_min = min(n - f - 1, f)
    d_max = max(n - f, f)
    two_bf = 2 * psi[f]
    delta = np.int64(0)
    ok = True
    if 2 * f <= n - 1:
        for q in range(d_max - d_min - 1):
            j = d_min + q
            old = omega[j]
            new = old - two_bf * psi[n - q - 1]
            omega[j] = new
            po = table[old if old >= 0 else -old]
            pn = table[new if new >= 0 else -new]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
        for q in range(n - d_max):
            j = d_max + q - 1
            old = omega[j]
            new = old - two_bf * (psi[2 * f - q] + psi[q])
            omega[j] = new
            po = table[old if old >= 0 else -old]
            pn = table[new if new >= 0 else -new]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
    else:
        for q in range(d_max - d_min):
            j = d_min + q
            old = omega[j]
            new = old - two_bf * psi[q]
            omega[j] = new
            po = table[old if old >= 0 else -old]
            pn = table[new if new >= 0 else -new]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
        for q in range(n - d_max - 1):
            j = d_max + q
            old = omega[j]
            new = old - two_bf * (psi[d_max - d_min + q] + psi[n - q - 1])
            omega[j] = new
            po = table[old if old >= 0 else -old]
            pn = table[new if new >= 0 else -new]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
    psi[f] = -psi[f]
    return delta, ok


@njit(cache=True)
def probe_delta(psi, omega, table, f):
    """Fitness delta the flip at f would cause, without touching the state.

    Returns (delta, ok, mx): mx is the largest |sidelobe| the flip writes.
    A flip at f rewrites exactly the contiguous range d_min..n-2, so the
    candidate state's peak is max(mx, peak of omega[0..d_min-1]).
    """
    n = psi.shape[0]
    d_min = min(n - f - 1, f)
    d_max = max(n - f, f)
    two_bf = 2 * psi[f]
    delta = np.int64(0)
    mx = np.int64(0)
    ok = True
    if 2 * f <= n - 1:
        for q in range(d_max - d_min - 1):
            old = omega[d_min + q]
            new = old - two_bf * psi[n - q - 1]
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            po = table[old if old >= 0 else -old]
            pn = table[a]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
        for q in range(n - d_max):
            old = omega[d_max + q - 1]
            new = old - two_bf * (psi[2 * f - q] + psi[q])
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            po = table[old if old >= 0 else -old]
            pn = table[a]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
    else:
        for q in range(d_max - d_min):
            old = omega[d_min + q]
            new = old - two_bf * psi[q]
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            po = table[old if old >= 0 else -old]
            pn = table[a]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
        for q in range(n - d_max - 1):
            old = omega[d_max + q]
            new = old - two_bf * (psi[d_max - d_min + q] + psi[n - q - 1])
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            po = table[old if old >= 0 else -old]
            pn = table[a]
            if po < 0 or pn < 0:
                ok = False
            else:
                delta += pn - po
    return delta, ok, mx


@njit(cache=True, inline="always")
def _pow_small(x, alpha):
    """|x| ** alpha for alpha in {2..6} via multiplies (no table gather)."""
    s = x * x
    if alpha == 2:
        return s
    if alpha == 3:
        return s * (x if x >= 0 else -x)
    if alpha == 4:
        return s * s
    if alpha == 5:
        return s * s * (x if x >= 0 else -x)
    return s * s * s


@njit(cache=True)
def _probe_delta_small(psi, omega, f, alpha, safe_v):
    """probe_delta specialized for alpha in {2..6}.

    Powers are computed inline so the loops stay branch-free and
    vectorizable; instead of per-element sentinel checks, the maximum
    touched magnitude is compared against safe_v afterwards.  The current
    state is already known to be within safe_v (every applied flip is
    checked), so only candidate values need the guard.  delta may wrap on
    the not-ok path; callers must discard it.  Returns (delta, ok, mx) like
    probe_delta.
    """
    n = psi.shape[0]
    d_min = min(n - f - 1, f)
    d_max = max(n - f, f)
    two_bf = 2 * psi[f]
    delta = np.int64(0)
    mx = np.int64(0)
    if 2 * f <= n - 1:
        for q in range(d_max - d_min - 1):
            old = omega[d_min + q]
            new = old - two_bf * psi[n - q - 1]
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            delta += _pow_small(new, alpha) - _pow_small(old, alpha)
        for q in range(n - d_max):
            old = omega[d_max + q - 1]
            new = old - two_bf * (psi[2 * f - q] + psi[q])
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            delta += _pow_small(new, alpha) - _pow_small(old, alpha)
    else:
        for q in range(d_max - d_min):
            old = omega[d_min + q]
            new = old - two_bf * psi[q]
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            delta += _pow_small(new, alpha) - _pow_small(old, alpha)
        for q in range(n - d_max - 1):
            old = omega[d_max + q]
            new = old - two_bf * (psi[d_max - d_min + q] + psi[n - q - 1])
            a = new if new >= 0 else -new
            mx = a if a > mx else mx
            delta += _pow_small(new, alpha) - _pow_small(old, alpha)
    return delta, mx <= safe_v, mx


@njit(cache=True)
def probe_pass(psi, omega, head_max, table, alpha, safe_v, r, v_cur, v_star, best_psl):
    """Try all n flips starting at offset r; keep the first strict improvement.

    Returns (pos, new_fitness, snap_pos, snap_psl) where pos is the kept
    flip position, NO_IMPROVEMENT, or OVERFLOW.  Only the accepted flip (if
    any) is applied to the state; rejected probes are evaluated read-only.

    head_max[k] must hold max(|omega[0..k-1]|) for the state at entry.  A
    flip at f rewrites exactly omega[d_min..n-2], so each candidate's peak
    sidelobe is known exactly; snap_pos >= 0 marks the rejected probe with
    the lowest peak strictly below best_psl (earliest on ties).
    """
    n = psi.shape[0]
    snap_pos = np.int64(-1)
    snap_psl = np.int64(best_psl)
    small = 2 <= alpha <= 6
    for i in range(n):
        f = (r + i) % n
        if small:
            delta, ok, mx = _probe_delta_small(psi, omega, f, alpha, safe_v)
        else:
            delta, ok, mx = probe_delta(psi, omega, table, f)
        if not ok:
            return np.int64(OVERFLOW), v_cur, snap_pos, snap_psl
        nv = v_cur + delta
        if nv < v_star:
            flip_update(psi, omega, table, f)
            return np.int64(f), nv, snap_pos, snap_psl
        d_min = min(n - f - 1, f)
        peak = max(mx, head_max[d_min])
        if peak < snap_psl:
            snap_pos = np.int64(f)
            snap_psl = peak
    return np.int64(NO_IMPROVEMENT), v_cur, snap_pos, snap_psl


@njit(cache=True)
def _psl_bits_bounded(v, n, bound, s):
    """PSL of the n-bit pattern v (MSB first), aborting once it reaches bound."""
    for j in range(n):
        s[j] = 1 if (v >> (n - 1 - j)) & 1 else -1
    m = 0
    for u in range(1, n):
        c = 0
        for j in range(n - u):
            c += s[j] * s[j + u]
        if c < 0:
            c = -c
        if c > m:
            m = c
        if m >= bound:
            return bound
    return m


@njit(cache=True)
def exhaustive_min_psl(n):
    """Minimum PSL over all length-n sequences, with one witness bit pattern.

    Negation symmetry fixes the first element to +1; reversal symmetry keeps
    only patterns not larger than their (sign-canonicalized) reversal.
    """
    half = 1 << (n - 1)
    full_mask = (1 << n) - 1
    best = n
    best_bits = np.int64(half)
    s = np.empty(n, dtype=np.int64)
    for low in range(half):
        v = half | low
        rv = 0
        t = v
        for _ in range(n):
            rv = (rv << 1) | (t & 1)
            t >>= 1
        if (rv >> (n - 1)) & 1 == 0:
            rv = (~rv) & full_mask
        if rv < v:
            continue
        p = _psl_bits_bounded(v, n, best, s)
        if p < best:
            best = p
            best_bits = np.int64(v)
    return best, best_bits
