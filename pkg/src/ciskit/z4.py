"""Free Z4 codes, the Gray map, Hensel lifting, and quadratic residue codes.

The Gray map phi sends 0,1,2,3 to 00,01,11,10 componentwise; it is a
distance-preserving bijection from Lee metric to Hamming metric, so the
binary image of a free systematic Z4 code (I|A) is the graph code of the
(generally nonlinear) permutation gray . (.A) . gray^{-1}.  The extended
quadratic residue codes over Z4 supply the record nonlinear examples: the
octacode QR(8) Gray-maps onto the Nordstrom-Robinson code.
"""

from __future__ import annotations

import random
from typing import IO, Iterable, Sequence

import numpy as np

from .codes import UnrestrictedCode
from .constructions import _is_prime, qr_generator_poly
from .errors import ConstructionError, DimensionError, NotCisError, TooLargeError
from .gf2 import BitMatrix, BitVector, Gf2Poly
from .cis import PermutationTable

__all__ = [
    "Z4Matrix",
    "Z4FreeCode",
    "gray",
    "gray_int",
    "lee_weight",
    "binary_image",
    "Z4Poly",
    "hensel_lift",
    "z4_qr_code",
    "octacode",
    "is_free_cis_z4",
    "z4_permutation",
    "sampled_lee_weight",
    "write_z4",
    "read_z4",
]

_IMAGE_CAP = 12  # binary_image enumerates 4^k codewords

_LEE = (0, 1, 2, 1)
# phi(s) = (first, second): 0->00, 1->01, 2->11, 3->10
_GRAY_FIRST = (0, 0, 1, 1)
_GRAY_SECOND = (0, 1, 1, 0)


class Z4Matrix:
    """An immutable matrix over the integers mod 4."""

    __slots__ = ("nrows", "ncols", "_data")

    def __init__(self, data: Sequence[Sequence[int]] | np.ndarray):
        arr = np.asarray(data, dtype=np.int64) % 4
        if arr.ndim != 2:
            raise DimensionError("Z4Matrix needs a 2-d array")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self.nrows, self.ncols = arr.shape
        self._data = arr

    @classmethod
    def identity(cls, n: int) -> "Z4Matrix":
        return cls(np.eye(n, dtype=np.uint8))

    def array(self) -> np.ndarray:
        return self._data

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self._data[i])

    def hstack(self, other: "Z4Matrix") -> "Z4Matrix":
        return Z4Matrix(np.hstack([self._data, other._data]))

    def mat_mul(self, other: "Z4Matrix") -> "Z4Matrix":
        return Z4Matrix(self._data.astype(np.int64) @ other._data.astype(np.int64))

    def vec_mul(self, u: Sequence[int]) -> tuple[int, ...]:
        out = (np.asarray(u, dtype=np.int64) @ self._data.astype(np.int64)) % 4
        return tuple(int(v) for v in out)

    def mod2(self) -> BitMatrix:
        rows = []
        for i in range(self.nrows):
            r = 0
            for j in range(self.ncols):
                r |= int(self._data[i, j] & 1) << j
            rows.append(r)
        return BitMatrix(self.nrows, self.ncols, rows)

    def is_invertible(self) -> bool:
        """Invertible over Z4 iff the mod-2 reduction is invertible."""
        return self.nrows == self.ncols and self.mod2().det_nonzero()

    def inverse(self) -> "Z4Matrix":
        """Inverse over Z4 by lifting: X1 = X0 (2I - A X0) doubles the
        precision of an inverse mod 2."""
        if not self.is_invertible():
            raise ConstructionError("matrix is singular over Z4")
        inv2 = self.mod2().inverse()
        x0 = np.array(
            [[inv2.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)],
            dtype=np.int64,
        )
        a = self._data.astype(np.int64)
        x1 = (x0 @ (2 * np.eye(self.nrows, dtype=np.int64) - a @ x0)) % 4
        assert np.all((a @ x1) % 4 == np.eye(self.nrows, dtype=np.int64))
        return Z4Matrix(x1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Z4Matrix) and np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"Z4Matrix({self._data.tolist()})"


class Z4FreeCode:
    """A free Z4 code of length n held in systematic form (I | A)."""

    __slots__ = ("a",)

    def __init__(self, a: Z4Matrix):
        if a.nrows != a.ncols:
            raise DimensionError("free systematic form needs a square right block")
        self.a = a

    @property
    def k(self) -> int:
        return self.a.nrows

    @property
    def length(self) -> int:
        return 2 * self.a.nrows

    @property
    def size(self) -> int:
        return 4 ** self.k

    def generator(self) -> Z4Matrix:
        return Z4Matrix.identity(self.k).hstack(self.a)

    def is_self_dual(self) -> bool:
        """(I|A)(I|A)^T = I + A A^T must vanish mod 4."""
        g = self.generator().array().astype(np.int64)
        return bool(np.all((g @ g.T) % 4 == 0))

    def __repr__(self) -> str:
        return f"Z4FreeCode(length={self.length}, 4^{self.k} codewords)"


def lee_weight(v: Iterable[int]) -> int:
    """Lee weight: 0,1,2,1 per symbol 0,1,2,3."""
    return sum(_LEE[int(s) % 4] for s in v)


def gray(v: Iterable[int]) -> BitVector:
    """Componentwise Gray image; symbol i lands on coordinates 2i, 2i+1."""
    syms = [int(s) % 4 for s in v]
    return BitVector(2 * len(syms), gray_int(syms))


def gray_int(v: Sequence[int]) -> int:
    out = 0
    for i, s in enumerate(v):
        s = int(s) % 4
        out |= _GRAY_FIRST[s] << (2 * i)
        out |= _GRAY_SECOND[s] << (2 * i + 1)
    return out


def binary_image(code: Z4FreeCode) -> UnrestrictedCode:
    """The Gray image {phi(c) : c in C}, an unrestricted binary code."""
    k = code.k
    if k > _IMAGE_CAP:
        raise TooLargeError(f"4^{k} codewords exceed the image budget")
    gen = code.generator().array().astype(np.int64)
    words = np.zeros((1, gen.shape[1]), dtype=np.int64)
    for row in gen:
        words = np.concatenate([words, words + row, words + 2 * row, words + 3 * row])
        words %= 4
    first = np.array(_GRAY_FIRST, dtype=np.uint64)
    second = np.array(_GRAY_SECOND, dtype=np.uint64)
    packed = np.zeros(len(words), dtype=np.uint64)
    for i in range(gen.shape[1]):
        s = words[:, i]
        packed |= first[s] << np.uint64(2 * i)
        packed |= second[s] << np.uint64(2 * i + 1)
    out = UnrestrictedCode(2 * gen.shape[1], (int(w) for w in packed))
    assert out.size == code.size, "Gray image must be injective"
    return out


class Z4Poly:
    """A polynomial over Z4, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) % 4 for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other: "Z4Poly") -> "Z4Poly":
        if not self.coeffs or not other.coeffs:
            return Z4Poly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % 4
        return Z4Poly(out)

    def __neg__(self) -> "Z4Poly":
        return Z4Poly([-c for c in self.coeffs])

    def __mod__(self, other: "Z4Poly") -> "Z4Poly":
        if not other.is_monic:
            raise ValueError("Z4 division implemented for monic divisors only")
        rem = list(self.coeffs)
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            lead = rem[-1]
            if lead == 0:
                rem.pop()
                continue
            shift = len(rem) - 1 - d
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = (rem[shift + i] - lead * c) % 4
            while rem and rem[-1] == 0:
                rem.pop()
        return Z4Poly(rem)

    def divides(self, other: "Z4Poly") -> bool:
        return not (other % self).coeffs

    def mod2(self) -> Gf2Poly:
        return Gf2Poly.from_coeffs(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Z4Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Z4Poly({list(self.coeffs)})"


def _x_pow_minus_one_z4(n: int) -> Z4Poly:
    return Z4Poly([-1] + [0] * (n - 1) + [1])


def hensel_lift(f2: Gf2Poly, n_len: int) -> Z4Poly:
    """The unique monic divisor of x^N - 1 over Z4 reducing to f2 mod 2.

    Graeffe step: split f2 = e(x^2) + x o(x^2); the lift g satisfies
    g(x^2) = +-(e(x)^2 - x o(x)^2) computed over Z4, with the sign fixed by
    divisibility (equivalently by monicity).
    """
    if n_len % 2 == 0:
        raise ConstructionError("Hensel lifting needs odd length")
    if f2.is_zero or not f2.divides(Gf2Poly((1 << n_len) | 1)):
        raise ConstructionError("f2 must divide x^N - 1 over GF(2)")
    deg = f2.degree
    e = Z4Poly([f2.coeff(2 * i) for i in range(deg // 2 + 1)])
    o = Z4Poly([f2.coeff(2 * i + 1) for i in range((deg + 1) // 2)])
    # h(y) = e(y)^2 - y * o(y)^2
    e2 = e * e
    yo2 = Z4Poly([0] + list((o * o).coeffs))
    h = Z4Poly([(a - b) % 4 for a, b in _zip_pad(e2.coeffs, yo2.coeffs)])
    target = _x_pow_minus_one_z4(n_len)
    for cand in (h, -h):
        if cand.is_monic and cand.divides(target):
            assert cand.mod2() == f2
            return cand
    raise ConstructionError("no sign of the Graeffe iterate divides x^N - 1")


def _zip_pad(a: Sequence[int], b: Sequence[int]):
    la, lb = len(a), len(b)
    for i in range(max(la, lb)):
        yield (a[i] if i < la else 0), (b[i] if i < lb else 0)


def z4_qr_code(p: int) -> Z4FreeCode:
    """Extended quadratic residue code QR(p+1) over Z4.

    Hensel-lifts the binary QR generator of length p, extends each cyclic
    generator row by the parity symbol -(row sum), and systematizes on the
    first (p+1)/2 coordinates.
    """
    if not _is_prime(p) or p % 8 not in (1, 7):
        raise ConstructionError(f"p = {p} must be a prime = +-1 mod 8")
    g2 = qr_generator_poly(p)
    g4 = hensel_lift(g2, p)
    k = p - g4.degree  # = (p+1)/2
    rows = []
    for i in range(k):
        row = [0] * p
        for j, c in enumerate(g4.coeffs):
            row[i + j] = c
        row.append((-sum(row)) % 4)
        rows.append(row)
    gen = Z4Matrix(rows)
    left = Z4Matrix(gen.array()[:, :k])
    right = Z4Matrix(gen.array()[:, k:])
    a = left.inverse().mat_mul(right)
    return Z4FreeCode(a)


def octacode() -> Z4FreeCode:
    """The octacode: QR(8), whose Gray image is the Nordstrom-Robinson code."""
    return z4_qr_code(7)


def is_free_cis_z4(code: Z4FreeCode) -> bool:
    """CIS with the systematic partition iff the right block is invertible."""
    return code.a.is_invertible()


def z4_permutation(code: Z4FreeCode) -> PermutationTable:
    """The binary permutation F with F(gray(u)) = gray(uA) on 2k variables."""
    if not is_free_cis_z4(code):
        raise NotCisError("Z4 code is not free-CIS: right block is singular")
    k = code.k
    if 2 * k > 20:
        raise TooLargeError("permutation table above 2^20 entries")
    table = [0] * (1 << (2 * k))
    u = [0] * k
    for idx in range(4 ** k):
        t = idx
        for i in range(k):
            u[i] = t & 3
            t >>= 2
        table[gray_int(u)] = gray_int(code.a.vec_mul(u))
    return PermutationTable(2 * k, table)


def sampled_lee_weight(code: Z4FreeCode, samples: int = 20000, seed: int = 1) -> int:
    """Minimum Lee weight observed over random nonzero codewords.

    Non-exhaustive: this certifies an UPPER bound on the true minimum Lee
    weight (each sample exhibits a codeword), nothing more.  Used for the
    large quadratic residue codes whose exact minima are out of desk-scale
    reach.
    """
    rng = random.Random(seed)
    k = code.k
    a = code.a.array().astype(np.int64)
    best = 2 * code.length
    for _ in range(samples):
        while True:
            u = np.array([rng.randrange(4) for _ in range(k)], dtype=np.int64)
            if u.any():
                break
        word = np.concatenate([u, (u @ a) % 4])
        best = min(best, int(sum(_LEE[int(s)] for s in word)))
    return best


def write_z4(m: Z4Matrix, fp: IO[str]) -> None:
    """Text format: header ``z4 <rows> <cols>``, then digit rows, space-separated."""
    fp.write(f"z4 {m.nrows} {m.ncols}\n")
    for i in range(m.nrows):
        fp.write(" ".join(str(v) for v in m.row(i)) + "\n")


def read_z4(fp: IO[str]) -> Z4Matrix:
    header = fp.readline().split()
    if len(header) != 3 or header[0] != "z4":
        raise ValueError(f"bad z4 header: {header!r}")
    rows, cols = int(header[1]), int(header[2])
    data = []
    for _ in range(rows):
        parts = fp.readline().split()
        if len(parts) != cols or any(p not in "0123" for p in parts):
            raise ValueError("bad z4 row")
        data.append([int(p) for p in parts])
    return Z4Matrix(data)
