"""Dense exact linear algebra over GF(2), plus binary polynomial arithmetic.

Vectors and matrix rows are bit-packed into Python integers (bit ``i`` of the
backing integer is coordinate ``i``), which makes row operations single XORs
and keeps everything exact.  All values are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, SingularMatrixError

__all__ = [
    "BitVector",
    "BitMatrix",
    "Gf2Poly",
    "circulant",
    "poly_gcd",
    "x_pow_minus_one",
]


class BitVector:
    """An immutable GF(2) vector of fixed length."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise DimensionError("vector length must be nonnegative")
        self.n = n
        self.bits = bits & ((1 << n) - 1)

    @classmethod
    def from_bits(cls, coords: Iterable[int]) -> "BitVector":
        coords = list(coords)
        bits = 0
        for i, c in enumerate(coords):
            if c & 1:
                bits |= 1 << i
        return cls(len(coords), bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        if set(s) - {"0", "1"}:
            raise ValueError(f"bit string may contain only 0/1: {s!r}")
        return cls.from_bits(int(c) for c in s)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise DimensionError("length mismatch in vector sum")
        return BitVector(self.n, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        """Standard inner product over GF(2)."""
        if self.n != other.n:
            raise DimensionError("length mismatch in inner product")
        return (self.bits & other.bits).bit_count() & 1

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.n + other.n, self.bits | (other.bits << self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVector)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"BitVector({self.to_string()!r})"


class BitMatrix:
    """An immutable GF(2) matrix stored as bit-packed rows."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if len(rows) != nrows:
            raise DimensionError("row count does not match nrows")
        mask = (1 << ncols) - 1
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(r & mask for r in rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector]) -> "BitMatrix":
        if not rows:
            raise DimensionError("need at least one row")
        n = rows[0].n
        if any(r.n != n for r in rows):
            raise DimensionError("rows have mixed lengths")
        return cls(len(rows), n, [r.bits for r in rows])

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        return cls.from_rows([BitVector.from_string(s) for s in rows])

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls.from_rows([BitVector.from_bits(r) for r in rows])

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column_bits(self, j: int) -> int:
        """Column ``j`` packed with bit ``i`` = entry (i, j)."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def transpose(self) -> "BitMatrix":
        return BitMatrix(
            self.ncols, self.nrows, [self.column_bits(j) for j in range(self.ncols)]
        )

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise DimensionError("row count mismatch in hstack")
        rows = [a | (b << self.ncols) for a, b in zip(self.rows, other.rows)]
        return BitMatrix(self.nrows, self.ncols + other.ncols, rows)

    def submatrix_columns(self, cols: Sequence[int]) -> "BitMatrix":
        """Columns ``cols`` in the given order."""
        rows = []
        for r in self.rows:
            packed = 0
            for outpos, j in enumerate(cols):
                packed |= ((r >> j) & 1) << outpos
            rows.append(packed)
        return BitMatrix(self.nrows, len(cols), rows)

    def permute_columns(self, perm: Sequence[int]) -> "BitMatrix":
        """New matrix whose column ``p`` is old column ``perm[p]``."""
        if sorted(perm) != list(range(self.ncols)):
            raise ValueError("not a permutation of the column indices")
        return self.submatrix_columns(perm)

    def mat_mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions disagree in product")
        rows = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                i = (rr & -rr).bit_length() - 1
                acc ^= other.rows[i]
                rr &= rr - 1
            rows.append(acc)
        return BitMatrix(self.nrows, other.ncols, rows)

    def mat_vec(self, v: BitVector) -> BitVector:
        """Row-vector times matrix: returns v · M (length = ncols)."""
        if v.n != self.nrows:
            raise DimensionError("vector length must equal row count")
        acc = 0
        vv = v.bits
        while vv:
            i = (vv & -vv).bit_length() - 1
            acc ^= self.rows[i]
            vv &= vv - 1
        return BitVector(self.ncols, acc)

    def rref(self, max_col: int | None = None) -> tuple["BitMatrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns.

        Pivots are searched in columns ``0..max_col-1`` (default: all);
        eliminations always apply to the full row width, so the row space is
        preserved exactly.
        """
        rows = list(self.rows)
        ncols = self.ncols if max_col is None else max_col
        pivots = []
        pr = 0
        for col in range(ncols):
            pivot = None
            for i in range(pr, len(rows)):
                if (rows[i] >> col) & 1:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
            for i in range(len(rows)):
                if i != pr and (rows[i] >> col) & 1:
                    rows[i] ^= rows[pr]
            pivots.append(col)
            pr += 1
            if pr == len(rows):
                break
        return BitMatrix(self.nrows, self.ncols, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det_nonzero(self) -> bool:
        """True iff the matrix is square with full rank."""
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "BitMatrix":
        """Inverse of a square matrix; raises SingularMatrixError otherwise."""
        if self.nrows != self.ncols:
            raise DimensionError("only square matrices can be inverted")
        n = self.nrows
        aug = self.hstack(BitMatrix.identity(n))
        red, pivots = aug.rref(max_col=n)
        if pivots != tuple(range(n)):
            raise SingularMatrixError(f"rank {len(pivots)} < order {n}")
        return BitMatrix(n, n, [r >> n for r in red.rows])

    def nullspace(self) -> "BitMatrix | None":
        """Basis of the right nullspace {x : M xᵀ = 0}, one solution per row.

        Returns None when the nullspace is trivial.
        """
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        if not free:
            return None
        rows = []
        for f in free:
            x = 1 << f
            for i, p in enumerate(pivots):
                if (red.rows[i] >> f) & 1:
                    x |= 1 << p
            rows.append(x)
        return BitMatrix(len(rows), self.ncols, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def to_strings(self) -> list[str]:
        return [self.row(i).to_string() for i in range(self.nrows)]

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_strings()})"


def circulant(first_row: BitVector) -> BitMatrix:
    """Square matrix whose row i is the right cyclic shift of first_row by i.

    Circulant matrices are identified with the polynomial whose coefficient
    sequence (lowest degree first) is the first row.
    """
    n = first_row.n
    if n < 1:
        raise DimensionError("circulant needs length >= 1")
    mask = (1 << n) - 1
    rows = []
    r = first_row.bits
    for _ in range(n):
        rows.append(r)
        r = ((r << 1) | (r >> (n - 1))) & mask
    return BitMatrix(n, n, rows)


class Gf2Poly:
    """A polynomial over GF(2), coefficients packed lowest degree first."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient bits must be nonnegative")
        self.bits = bits

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "Gf2Poly":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "Gf2Poly":
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_string(cls, s: str) -> "Gf2Poly":
        """Parse a lowest-degree-first coefficient string such as '1101'."""
        if set(s) - {"0", "1"}:
            raise ValueError(f"coefficient string may contain only 0/1: {s!r}")
        return cls(int(s[::-1], 2) if s else 0)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_vector(self, n: int) -> BitVector:
        if self.bits >> n:
            raise DimensionError(f"degree {self.degree} does not fit in length {n}")
        return BitVector(n, self.bits)

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        a, b = self.bits, other.bits
        acc = 0
        while a:
            if a & 1:
                acc ^= b
            a >>= 1
            b <<= 1
        return Gf2Poly(acc)

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = self.bits
        d = other.bits
        dd = d.bit_length()
        q = 0
        while r.bit_length() >= dd:
            shift = r.bit_length() - dd
            q |= 1 << shift
            r ^= d << shift
        return Gf2Poly(q), Gf2Poly(r)

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Gf2Poly") -> bool:
        return (other % self).is_zero

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Gf2Poly) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("Gf2Poly", self.bits))

    def to_string(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for e in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> e) & 1:
                terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Gf2Poly({self.to_string()})"


def x_pow_minus_one(n: int) -> Gf2Poly:
    """x^n - 1, which over GF(2) is x^n + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return Gf2Poly((1 << n) | 1)


def poly_gcd(f: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    """Monic gcd by the Euclidean algorithm.

    Raises ValueError when both inputs are zero (monic gcd undefined).
    """
    a, b = f, g
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a
