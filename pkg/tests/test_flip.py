import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pslseq import _kernels, seqcore
from pslseq.flip import FitnessSpec, SidelobeState, fitness, flip

from conftest import random_pm1

states = st.lists(st.sampled_from([-1, 1]), min_size=2, max_size=64).map(
    SidelobeState.from_sequence
)


class TestFlip:
    def test_hand_example_n3(self):
        state = SidelobeState.from_sequence([1, 1, 1])
        flip(1, state)
        assert state.psi.tolist() == [1, -1, 1]
        assert state.omega.tolist() == [1, -2]

    def test_position_out_of_range(self):
        state = SidelobeState.from_sequence([1, -1, 1])
        with pytest.raises(ValueError):
            flip(3, state)

    @given(states, st.data())
    def test_involution(self, state, data):
        f = data.draw(st.integers(0, state.n - 1))
        before = state.copy()
        flip(f, state)
        flip(f, state)
        assert np.array_equal(state.psi, before.psi)
        assert np.array_equal(state.omega, before.omega)

    @given(states, st.data())
    def test_oracle_equivalence(self, state, data):
        f = data.draw(st.integers(0, state.n - 1))
        flip(f, state)
        assert np.array_equal(state.omega, seqcore.sidelobes(state.psi))

    @given(states, st.data())
    def test_commutativity(self, state, data):
        f1 = data.draw(st.integers(0, state.n - 1))
        f2 = data.draw(st.integers(0, state.n - 1))
        a = state.copy()
        flip(f1, a)
        flip(f2, a)
        b = state.copy()
        flip(f2, b)
        flip(f1, b)
        assert np.array_equal(a.psi, b.psi)
        assert np.array_equal(a.omega, b.omega)
        assert np.array_equal(a.omega, seqcore.sidelobes(a.psi))

    def test_bulk_random_oracle(self, rng):
        # composed flips stay consistent with a direct recomputation
        for _ in range(200):
            n = int(rng.integers(2, 257))
            state = SidelobeState.from_sequence(random_pm1(rng, n))
            for f in rng.integers(0, n, size=8):
                flip(int(f), state)
            assert np.array_equal(state.omega, seqcore.sidelobes(state.psi))


class TestKernelFlip:
    """The numba flip must match the pure-Python one exactly."""

    def test_matches_reference(self, rng):
        for _ in range(300):
            n = int(rng.integers(2, 129))
            alpha = int(rng.integers(1, 7))
            b = random_pm1(rng, n)
            f = int(rng.integers(0, n))
            spec = FitnessSpec(alpha)
            table = _kernels.build_power_table(n, alpha)
            ref = SidelobeState.from_sequence(b)
            v_before = fitness(ref.omega, spec)
            flip(f, ref)
            psi, omega = b.copy(), seqcore.sidelobes(b)
            delta, ok = _kernels.flip_update(psi, omega, table, f)
            assert ok
            assert np.array_equal(psi, ref.psi)
            assert np.array_equal(omega, ref.omega)
            assert v_before + int(delta) == fitness(ref.omega, spec)

    def test_overflow_sentinel(self):
        # alpha large enough that most power entries cannot fit in int64
        n, alpha = 64, 20
        table = _kernels.build_power_table(n, alpha)
        assert table[0] == 0 and table[1] == 1
        assert np.any(table < 0)
        b = np.ones(n, dtype=np.int64)
        omega = seqcore.sidelobes(b)
        _, ok = _kernels.flip_update(b, omega, table, 5)
        assert not ok
        # state itself stays consistent even when the delta is unusable
        assert np.array_equal(omega, seqcore.sidelobes(b))


class TestFitness:
    def test_small_cases(self):
        assert fitness(np.array([0, 0, 1]), FitnessSpec(4)) == 1
        assert fitness(np.array([3, -2]), FitnessSpec(3)) == 35

    def test_alpha_validation(self):
        with pytest.raises(ValueError):
            FitnessSpec(0)

    def test_wide_accumulator(self):
        # values this large overflow any 64-bit accumulator
        omega = np.full(100, 10**6, dtype=np.int64)
        assert fitness(omega, FitnessSpec(8)) == 100 * 10**48

    @settings(max_examples=50)
    @given(states, st.integers(1, 8))
    def test_sandwich_bound(self, state, alpha):
        value = fitness(state.omega, FitnessSpec(alpha))
        p = state.psl()
        assert p**alpha <= value <= (state.n - 1) * p**alpha

    @given(states, st.integers(1, 8))
    def test_zero_iff_all_zero(self, state, alpha):
        value = fitness(state.omega, FitnessSpec(alpha))
        assert value >= 0
        assert (value == 0) == bool(np.all(state.omega == 0))


class TestProbeDelta:
    """Read-only probe deltas must equal the apply-path delta exactly."""

    def test_generic_matches_flip_update(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 129))
            alpha = int(rng.integers(1, 7))
            b = random_pm1(rng, n)
            f = int(rng.integers(0, n))
            table = _kernels.build_power_table(n, alpha)
            psi, omega = b.copy(), seqcore.sidelobes(b)
            d_ro, ok_ro, _ = _kernels.probe_delta(psi, omega, table, f)
            assert np.array_equal(psi, b)  # read-only
            assert np.array_equal(omega, seqcore.sidelobes(b))
            d_ap, ok_ap = _kernels.flip_update(psi.copy(), omega.copy(), table, f)
            assert ok_ro == ok_ap
            if ok_ro:
                assert int(d_ro) == int(d_ap)

    def test_small_alpha_specialization_matches_generic(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 129))
            alpha = int(rng.integers(2, 7))
            b = random_pm1(rng, n)
            f = int(rng.integers(0, n))
            table = _kernels.build_power_table(n, alpha)
            safe_v = len(table) - 1 - int(np.sum(table < 0))
            psi, omega = b.copy(), seqcore.sidelobes(b)
            d_s, ok_s, mx_s = _kernels._probe_delta_small(psi, omega, f, alpha, safe_v)
            d_g, ok_g, mx_g = _kernels.probe_delta(psi, omega, table, f)
            assert ok_s == ok_g
            assert int(d_s) == int(d_g)
            assert int(mx_s) == int(mx_g)

    def test_probe_peak_is_exact(self, rng):
        # max(written-range peak, untouched-head peak) == PSL after the flip
        for _ in range(200):
            n = int(rng.integers(2, 129))
            alpha = int(rng.integers(2, 7))
            b = random_pm1(rng, n)
            f = int(rng.integers(0, n))
            table = _kernels.build_power_table(n, alpha)
            omega = seqcore.sidelobes(b)
            _, _, mx = _kernels.probe_delta(b, omega, table, f)
            d_min = min(n - f - 1, f)
            head = int(np.max(np.abs(omega[:d_min]))) if d_min else 0
            flipped = b.copy()
            flipped[f] = -flipped[f]
            assert max(int(mx), head) == seqcore.psl(flipped)
