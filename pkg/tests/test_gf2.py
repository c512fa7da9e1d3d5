import random

import pytest

from ciskit.errors import DimensionError, SingularMatrixError
from ciskit.gf2 import (
    BitMatrix,
    BitVector,
    Gf2Poly,
    circulant,
    poly_gcd,
    x_pow_minus_one,
)

F30 = Gf2Poly.from_exponents([0, 1, 3, 5, 7, 8, 10])  # x^10+x^8+x^7+x^5+x^3+x+1


class TestBitVector:
    def test_basics(self):
        v = BitVector.from_string("0110")
        assert len(v) == 4 and v.weight == 2
        assert v[1] == 1 and v[0] == 0
        assert v.to_string() == "0110"
        assert list(v) == [0, 1, 1, 0]

    def test_bits_beyond_length_masked(self):
        assert BitVector(3, 0b11111).bits == 0b111

    def test_xor_and_dot(self):
        a = BitVector.from_string("1100")
        b = BitVector.from_string("0110")
        assert (a ^ b).to_string() == "1010"
        assert a.dot(b) == 1
        assert a.dot(a) == 0

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            BitVector(2) ^ BitVector(3)


class TestRankRref:
    def test_identity_rank(self):
        assert BitMatrix.identity(5).rank() == 5

    def test_zero_rank(self):
        assert BitMatrix.zeros(3, 3).rank() == 0

    def test_rref_identity(self):
        red, pivots = BitMatrix.identity(4).rref()
        assert red == BitMatrix.identity(4)
        assert pivots == (0, 1, 2, 3)

    def test_rref_duplicate_rows(self):
        m = BitMatrix.from_strings(["1011", "1011", "0110"])
        red, pivots = m.rref()
        assert len(pivots) == 2
        assert red.rows[-1] == 0

    def test_rref_length6_generator(self):
        # the optimal [6,3,3] code's generator is already reduced
        m = BitMatrix.from_strings(["100011", "010101", "001111"])
        _, pivots = m.rref()
        assert pivots == (0, 1, 2)

    def test_rref_idempotent_and_row_space(self):
        rng = random.Random(11)
        for _ in range(50):
            rows = [rng.getrandbits(8) for _ in range(4)]
            m = BitMatrix(4, 8, rows)
            red, _ = m.rref()
            red2, _ = red.rref()
            assert red == red2
            # row-space membership: every original row reduces to zero
            for r in rows:
                v = r
                for i, p in enumerate(red.rref()[1]):
                    if (v >> p) & 1:
                        v ^= red.rows[i]
                assert v == 0


class TestInvert:
    def test_identity(self):
        assert BitMatrix.identity(4).inverse() == BitMatrix.identity(4)

    def test_order2(self):
        m = BitMatrix.from_lists([[0, 1], [1, 1]])
        inv = m.inverse()
        assert inv == BitMatrix.from_lists([[1, 1], [1, 0]])
        assert m.mat_mul(inv) == BitMatrix.identity(2)

    def test_zero_column_singular(self):
        m = BitMatrix.from_strings(["10", "10"])
        with pytest.raises(SingularMatrixError):
            m.inverse()

    def test_invert_iff_full_rank_iff_det(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.choice((4, 8))
            m = BitMatrix(n, n, [rng.getrandbits(n) for _ in range(n)])
            full = m.rank() == n
            assert m.det_nonzero() == full
            if full:
                assert m.mat_mul(m.inverse()) == BitMatrix.identity(n)
            else:
                with pytest.raises(SingularMatrixError):
                    m.inverse()


class TestMatOps:
    def test_mul_identity(self):
        rng = random.Random(1)
        m = BitMatrix(3, 5, [rng.getrandbits(5) for _ in range(3)])
        assert m.mat_mul(BitMatrix.identity(5)) == m

    def test_vec_zero(self):
        m = BitMatrix.identity(4)
        assert m.mat_vec(BitVector(4)).weight == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            BitMatrix.identity(3).mat_mul(BitMatrix.identity(4))
        with pytest.raises(DimensionError):
            BitMatrix.identity(3).mat_vec(BitVector(4))

    def test_transpose_involution(self):
        rng = random.Random(2)
        m = BitMatrix(3, 7, [rng.getrandbits(7) for _ in range(3)])
        assert m.transpose().transpose() == m

    def test_nullspace_orthogonal(self):
        rng = random.Random(3)
        for _ in range(30):
            m = BitMatrix(3, 6, [rng.getrandbits(6) for _ in range(3)])
            ns = m.nullspace()
            if ns is None:
                continue
            for x in ns.rows:
                for r in m.rows:
                    assert (x & r).bit_count() % 2 == 0


class TestPoly:
    def test_degree(self):
        assert Gf2Poly(0).degree is None
        assert Gf2Poly(1).degree == 0
        assert Gf2Poly.from_exponents([3, 1]).degree == 3

    def test_mul_divmod(self):
        f = Gf2Poly.from_exponents([0, 1])  # 1+x
        g = Gf2Poly.from_exponents([0, 2])  # 1+x^2 = (1+x)^2
        q, r = divmod(g, f)
        assert r.is_zero and q == f

    def test_gcd_self(self):
        f = Gf2Poly.from_exponents([0, 2, 5])
        assert poly_gcd(f, f) == f

    def test_gcd_both_zero(self):
        with pytest.raises(ValueError):
            poly_gcd(Gf2Poly(0), Gf2Poly(0))

    def test_gcd_known_factorizations(self):
        # x^6+x^3+x^2+x+1 shares exactly x^2+x+1 with x^9+1
        f18 = Gf2Poly.from_exponents([0, 1, 2, 3, 6])
        g = poly_gcd(f18, x_pow_minus_one(9))
        assert g == Gf2Poly.from_exponents([0, 1, 2])
        # the length-30 record polynomial is coprime to x^15+1
        assert poly_gcd(F30, x_pow_minus_one(15)) == Gf2Poly(1)

    def test_string_roundtrip(self):
        s = "110101011010000"
        assert Gf2Poly.from_string(s) == F30


class TestCirculant:
    def test_shift_matrix(self):
        m = circulant(BitVector.from_string("100"))
        assert m == BitMatrix.identity(3)
        m = circulant(BitVector.from_string("010"))
        assert m.rank() == 3

    def test_all_ones(self):
        m = circulant(BitVector.from_string("111"))
        assert m.rank() == 1

    def test_record_polynomial_full_rank(self):
        assert circulant(F30.to_vector(15)).rank() == 15

    def test_rank_equals_n_minus_deg_gcd_exhaustive(self):
        # rank(circulant(f)) = n - deg gcd(f, x^n - 1), all f with deg < n <= 10
        for n in range(1, 11):
            modulus = x_pow_minus_one(n)
            for bits in range(1, 1 << n):
                f = Gf2Poly(bits)
                g = poly_gcd(f, modulus)
                assert circulant(f.to_vector(n)).rank() == n - g.degree
