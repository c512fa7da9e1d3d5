import io
import itertools
import random

import pytest

from ciskit.cis import gci_order_walsh, graph_code
from ciskit.errors import ConstructionError, NotCisError, TooLargeError
from ciskit.gf2 import Gf2Poly
from ciskit.z4 import (
    Z4FreeCode,
    Z4Matrix,
    Z4Poly,
    binary_image,
    gray,
    gray_int,
    hensel_lift,
    is_free_cis_z4,
    lee_weight,
    octacode,
    read_z4,
    sampled_lee_weight,
    write_z4,
    z4_permutation,
    z4_qr_code,
)


class TestGray:
    def test_symbol_table(self):
        assert gray([0]).to_string() == "00"
        assert gray([1]).to_string() == "01"
        assert gray([2]).to_string() == "11"
        assert gray([3]).to_string() == "10"

    def test_zero_vector(self):
        assert gray([0, 0, 0, 0]).bits == 0

    def test_lee_weight_is_gray_hamming_weight(self):
        for n in range(1, 5):
            for v in itertools.product(range(4), repeat=n):
                assert lee_weight(v) == gray(v).weight

    def test_injective(self):
        for n in range(1, 4):
            images = {gray_int(v) for v in itertools.product(range(4), repeat=n)}
            assert len(images) == 4 ** n


class TestHensel:
    def test_x_minus_one_fixed(self):
        assert hensel_lift(Gf2Poly.from_coeffs([1, 1]), 7) == Z4Poly([3, 1])

    def test_cubic_over_7(self):
        lift = hensel_lift(Gf2Poly.from_exponents([0, 1, 3]), 7)
        assert lift == Z4Poly([3, 1, 2, 1])  # x^3 + 2x^2 + x - 1
        assert lift.divides(Z4Poly([3, 0, 0, 0, 0, 0, 0, 1]))  # x^7 - 1

    def test_mod2_reduction_is_input(self):
        for exps, n in (([0, 1, 3], 7), ([0, 2, 3], 7), ([0, 1], 7)):
            f2 = Gf2Poly.from_exponents(exps)
            assert hensel_lift(f2, n).mod2() == f2

    def test_non_divisor_rejected(self):
        with pytest.raises(ConstructionError):
            hensel_lift(Gf2Poly.from_exponents([0, 1, 2]), 7)


class TestOctacode:
    def test_shape(self):
        oc = octacode()
        assert oc.length == 8 and oc.k == 4 and oc.size == 256

    def test_self_dual_and_free(self):
        oc = octacode()
        assert oc.is_self_dual()
        assert is_free_cis_z4(oc)
        assert oc.a.mod2().det_nonzero()

    def test_nordstrom_robinson_image(self):
        nr = binary_image(octacode())
        assert nr.n == 16 and nr.size == 256
        assert nr.min_distance() == 6
        dd = nr.distance_distribution()
        assert dd.b[0] == 1
        assert dd.dual_distance == 6
        # distance-invariant: the distribution is its own MacWilliams dual
        assert tuple(dd.b) == tuple(dd.b_dual)

    def test_permutation_gci_6(self):
        f = z4_permutation(octacode())
        assert gci_order_walsh(f).order == 6
        assert set(graph_code(f).words) == set(binary_image(octacode()).words)


class TestZ4Qr:
    def test_qr32_self_dual(self):
        q = z4_qr_code(31)
        assert q.length == 32 and q.k == 16
        assert q.is_self_dual()
        assert is_free_cis_z4(q)

    def test_p_1_mod_8_constructs(self):
        q = z4_qr_code(17)
        assert q.length == 18 and is_free_cis_z4(q)

    def test_bad_prime(self):
        for p in (5, 11, 15):
            with pytest.raises(ConstructionError):
                z4_qr_code(p)

    def test_sampled_lee_weight_is_upper_bound(self):
        # non-exhaustive: the observed minimum can only overestimate
        oc = octacode()
        assert sampled_lee_weight(oc, samples=4000) >= 6
        q31 = z4_qr_code(31)
        assert sampled_lee_weight(q31, samples=500) >= 14


class TestZ4Permutation:
    def test_identity(self):
        code = Z4FreeCode(Z4Matrix.identity(3))
        assert z4_permutation(code).table == tuple(range(64))

    def test_non_free_rejected(self):
        code = Z4FreeCode(Z4Matrix([[2, 0], [0, 1]]))
        assert not is_free_cis_z4(code)
        with pytest.raises(NotCisError):
            z4_permutation(code)

    def test_image_too_large(self):
        with pytest.raises(TooLargeError):
            binary_image(z4_qr_code(31))

    def test_image_is_systematic_graph_code(self):
        # theorem: the binary image is {(x, F(x))} with x on the left half
        rng = random.Random(9)
        for _ in range(10):
            while True:
                a = Z4Matrix([[rng.randrange(4) for _ in range(3)] for _ in range(3)])
                if a.is_invertible():
                    break
            code = Z4FreeCode(a)
            img = binary_image(code)
            assert img.is_information_set(range(6))
            f = z4_permutation(code)
            assert set(graph_code(f).words) == set(img.words)


class TestZ4Format:
    def test_roundtrip(self):
        m = octacode().generator()
        buf = io.StringIO()
        write_z4(m, buf)
        text = buf.getvalue()
        assert text.splitlines()[0] == "z4 4 8"
        buf.seek(0)
        assert read_z4(buf) == m

    def test_bad_header(self):
        with pytest.raises(ValueError):
            read_z4(io.StringIO("bin 2 2\n"))
