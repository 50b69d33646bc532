import numpy as np
import pytest
from hypothesis import given, strategies as st

from pslseq import seqcore

from conftest import random_pm1

sequences = st.lists(st.sampled_from([-1, 1]), min_size=2, max_size=96).map(
    lambda xs: np.array(xs, dtype=np.int64)
)


def brute_autocorrelation(b, u):
    # independent oracle: literal sum over the defining products
    return sum(int(b[j]) * int(b[j + u]) for j in range(len(b) - u))


class TestValidation:
    def test_rejects_short(self):
        with pytest.raises(ValueError):
            seqcore.as_sequence([1])

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            seqcore.as_sequence([1, 0, -1])

    def test_rejects_2d(self):
        with pytest.raises(ValueError):
            seqcore.check_sequence(np.ones((2, 2), dtype=np.int64))


class TestAutocorrelation:
    def test_mainlobe(self):
        assert seqcore.autocorrelation(np.array([1, 1, 1]), 0) == 3

    def test_all_ones(self):
        b = np.ones(17, dtype=np.int64)
        for u in range(17):
            assert seqcore.autocorrelation(b, u) == 17 - u

    def test_barker11_sidelobes_bounded(self):
        b = seqcore.decode_hex("712", 11)
        assert all(abs(seqcore.autocorrelation(b, u)) <= 1 for u in range(1, 11))

    def test_shift_out_of_range(self):
        with pytest.raises(ValueError):
            seqcore.autocorrelation(np.array([1, 1]), 2)

    @given(sequences, st.data())
    def test_matches_brute_force(self, b, data):
        u = data.draw(st.integers(0, len(b) - 1))
        assert seqcore.autocorrelation(b, u) == brute_autocorrelation(b, u)


class TestSidelobes:
    def test_length_two(self):
        assert seqcore.sidelobes(np.array([1, 1])).tolist() == [1]

    def test_length_three(self):
        # [C_2, C_1] counted by hand
        assert seqcore.sidelobes(np.array([1, 1, 1])).tolist() == [1, 2]

    def test_reversed_shift_order(self, rng):
        b = random_pm1(rng, 64)
        values = seqcore.sidelobes(b)
        n = len(b)
        for i in range(n - 1):
            assert values[i] == brute_autocorrelation(b, n - 1 - i)

    @given(sequences)
    def test_rearrangement_identity(self, b):
        assert int(np.max(np.abs(seqcore.sidelobes(b)))) == seqcore.psl(b)

    @given(sequences)
    def test_parity(self, b):
        values = seqcore.sidelobes(b)
        for i, v in enumerate(values):
            assert (int(v) - (i + 1)) % 2 == 0


class TestPsl:
    def test_barker11(self):
        assert seqcore.psl(seqcore.decode_hex("712", 11)) == 1

    def test_all_ones(self):
        assert seqcore.psl(np.ones(23, dtype=np.int64)) == 22

    def test_n84_published(self):
        assert seqcore.psl(seqcore.decode_hex("fa87fce54c5e3d9964a49", 84)) == 5


class TestHexCodec:
    def test_decode_barker11(self):
        expected = [1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1]
        assert seqcore.decode_hex("712", 11).tolist() == expected

    def test_decode_b3(self):
        expected = [-1, -1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1]
        assert seqcore.decode_hex("b3", 12).tolist() == expected

    def test_decode_zero(self):
        assert seqcore.decode_hex("0", 2).tolist() == [-1, -1]

    def test_decode_rejects_overflow(self):
        with pytest.raises(ValueError):
            seqcore.decode_hex("10", 4)

    def test_decode_rejects_garbage(self):
        with pytest.raises(ValueError):
            seqcore.decode_hex("xyz", 8)

    def test_encode_barker11(self):
        b = seqcore.decode_hex("712", 11)
        assert seqcore.encode_hex(b) == "712"

    def test_encode_all_minus(self):
        assert seqcore.encode_hex(np.array([-1, -1])) == "0"

    def test_encode_no_leading_zeros(self, rng):
        for _ in range(50):
            b = random_pm1(rng, 100)
            text = seqcore.encode_hex(b)
            assert text == "0" or not text.startswith("0")

    @given(sequences)
    def test_round_trip(self, b):
        assert np.array_equal(seqcore.decode_hex(seqcore.encode_hex(b), len(b)), b)


class TestTransform:
    def test_negate(self):
        assert seqcore.transform(np.array([1, -1]), "negate").tolist() == [-1, 1]

    def test_reverse(self):
        assert seqcore.transform(np.array([1, 1, -1]), "reverse").tolist() == [-1, 1, 1]

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            seqcore.transform(np.array([1, 1]), "rotate")

    @given(sequences)
    def test_psl_invariance(self, b):
        p = seqcore.psl(b)
        assert seqcore.psl(seqcore.transform(b, "negate")) == p
        assert seqcore.psl(seqcore.transform(b, "reverse")) == p

    @given(sequences)
    def test_autocorrelation_invariance(self, b):
        neg = seqcore.transform(b, "negate")
        rev = seqcore.transform(b, "reverse")
        for u in range(len(b)):
            c = seqcore.autocorrelation(b, u)
            assert seqcore.autocorrelation(neg, u) == c
            assert seqcore.autocorrelation(rev, u) == c
