import random
from fractions import Fraction

import pytest

from ciskit.codes import (
    DistanceDistribution,
    LinearCode,
    UnrestrictedCode,
    krawtchouk,
    macwilliams_transform,
)
from ciskit.constructions import golay_code
from ciskit.errors import DimensionError, TooLargeError
from ciskit.gf2 import BitMatrix


def random_code(rng, k, n):
    while True:
        m = BitMatrix(k, n, [rng.getrandbits(n) for _ in range(k)])
        if m.rank() == k:
            return LinearCode(m)


EXT_HAMMING = LinearCode.from_strings(
    ["10001110", "01001011", "00101101", "00010111"]
)


class TestLinearCode:
    def test_full_rank_required(self):
        with pytest.raises(DimensionError):
            LinearCode(BitMatrix.from_strings(["110", "110"]))

    def test_repetition(self):
        c = LinearCode.from_strings(["11"])
        assert (c.length, c.dimension, c.size) == (2, 1, 2)
        assert c.min_distance() == 2
        assert c.weight_distribution().counts == (1, 0, 1)
        assert c.dual_code() == c
        assert c.dual_distance() == 2
        assert c.is_self_dual()

    def test_extended_hamming(self):
        c = EXT_HAMMING
        assert c.min_distance() == 4
        # frozen from a 16-codeword brute force
        assert c.weight_distribution().counts == (1, 0, 0, 0, 14, 0, 0, 0, 1)
        assert c.is_self_dual()
        assert c.dual_distance() == 4

    def test_golay(self):
        c = golay_code()
        assert c.min_distance() == 8
        assert c.is_self_dual()

    def test_min_distance_cap(self):
        c = EXT_HAMMING
        with pytest.raises(TooLargeError):
            c.min_distance(cap=3)

    def test_enum_cap_env(self, monkeypatch):
        monkeypatch.setenv("CISKIT_ENUM_CAP", "3")
        with pytest.raises(TooLargeError):
            EXT_HAMMING.min_distance()

    def test_min_distance_is_smallest_nonzero_count(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(4, 12)
            c = random_code(rng, rng.randint(1, min(6, n)), n)
            wd = c.weight_distribution()
            assert c.min_distance() == wd.min_nonzero

    def test_dual_of_systematic_form(self):
        # dual of span(I|A) is span(A^T|I)
        rng = random.Random(31)
        for _ in range(20):
            a = BitMatrix(4, 4, [rng.getrandbits(4) for _ in range(4)])
            if a.rank() < 4:
                continue
            c = LinearCode.from_systematic(a)
            dual = c.dual_code()
            expected = LinearCode(a.transpose().hstack(BitMatrix.identity(4)))
            assert dual == expected

    def test_dual_orthogonality(self):
        rng = random.Random(37)
        for _ in range(30):
            c = random_code(rng, 3, 8)
            d = c.dual_code()
            assert d.dimension == 5
            for r in c.generator.rows:
                for s in d.generator.rows:
                    assert (r & s).bit_count() % 2 == 0

    def test_min_weight_upper_bound(self):
        c = golay_code()
        assert c.min_weight_upper_bound(trials=500) >= 8


class TestMacWilliams:
    def test_krawtchouk_against_generating_function(self):
        # sum_j K_j(i) y^j = (1+y)^(n-i) (1-y)^i, checked coefficientwise
        # via explicit integer polynomial multiplication
        for n in range(0, 10):
            for i in range(n + 1):
                poly = [0] * (n + 1)
                poly[0] = 1
                deg = 0
                for _ in range(n - i):  # multiply by (1+y)
                    for j in range(deg, -1, -1):
                        poly[j + 1] += poly[j]
                    deg += 1
                for _ in range(i):  # multiply by (1-y)
                    for j in range(deg, -1, -1):
                        poly[j + 1] -= poly[j]
                    deg += 1
                for j in range(n + 1):
                    assert krawtchouk(n, j, i) == poly[j]

    def test_involution(self):
        rng = random.Random(41)
        for _ in range(30):
            n = rng.randint(3, 10)
            c = random_code(rng, rng.randint(1, min(5, n)), n)
            counts = c.weight_distribution().counts
            once = macwilliams_transform(counts, c.length, c.size)
            size_dual = sum(once)
            twice = macwilliams_transform(once, c.length, size_dual)
            assert tuple(twice) == tuple(Fraction(v) for v in counts)

    def test_dual_distribution_equals_dual_weight_distribution(self):
        # the Krawtchouk route and the explicit dual-code route agree
        c = EXT_HAMMING
        dd = c.distance_distribution()
        dual_wd = c.dual_code().weight_distribution()
        assert tuple(dd.b_dual) == tuple(Fraction(v) for v in dual_wd.counts)

    def test_self_dual_implies_fsd(self):
        for c in (EXT_HAMMING, golay_code(), LinearCode.from_strings(["11"])):
            assert c.is_self_dual()
            assert c.is_formally_self_dual()
            assert c.weight_distribution().is_macwilliams_fixed()

    def test_fsd_length6(self):
        # computed by 8-codeword brute force: the optimal [6,3,3] code is
        # formally self-dual but not self-dual
        c = LinearCode.from_strings(["100011", "010101", "001111"])
        assert not c.is_self_dual()
        assert c.is_formally_self_dual()

    def test_even_fsd(self):
        assert EXT_HAMMING.is_even_formally_self_dual()
        c6 = LinearCode.from_strings(["100011", "010101", "001111"])
        assert not c6.is_even_formally_self_dual()


class TestUnrestricted:
    def test_pair_counts_sum(self):
        u = UnrestrictedCode(4, [0b0000, 0b0011, 0b1100, 0b1111])
        counts = u.pair_distance_counts()
        assert sum(counts) == 16
        assert counts[0] == 4

    def test_linear_matches_unrestricted_route(self):
        rng = random.Random(43)
        for _ in range(10):
            c = random_code(rng, 3, 7)
            u = UnrestrictedCode.from_linear(c)
            du = u.distance_distribution()
            dl = c.distance_distribution()
            assert tuple(du.b) == tuple(dl.b)
            assert du.dual_distance == c.dual_distance()

    def test_nonlinear_dual_distance_nonnegative(self):
        rng = random.Random(47)
        for _ in range(20):
            words = {rng.getrandbits(6) for _ in range(8)}
            u = UnrestrictedCode(6, words)
            dd = u.distance_distribution()
            assert all(v >= 0 for v in dd.b_dual)
            assert dd.b[0] == 1

    def test_information_set(self):
        u = UnrestrictedCode(4, [0b0000, 0b0101, 0b1010, 0b1111])
        assert u.is_information_set([0, 1])
        assert not u.is_information_set([0, 2])

    def test_distance_distribution_b0(self):
        d = DistanceDistribution.from_pair_counts(2, 2, [2, 0, 2])
        assert d.b[0] == 1 and sum(d.b) == 2
