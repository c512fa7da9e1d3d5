"""Linear and unrestricted binary codes: distances, weight and distance
distributions, MacWilliams machinery, duality.

Distance distributions are kept as exact rationals: the defining division by
|C| can be non-integral for nonlinear codes, and the "smallest nonzero dual
coefficient" test tolerates no floating-point noise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DimensionError, TooLargeError
from .gf2 import BitMatrix, BitVector

__all__ = [
    "LinearCode",
    "UnrestrictedCode",
    "WeightDistribution",
    "DistanceDistribution",
    "krawtchouk",
    "macwilliams_transform",
    "enumeration_cap",
]

_PAIR_BUDGET = 1 << 26  # all-pairs distance enumeration budget


def enumeration_cap() -> int:
    """Dimension cap for full codeword enumeration (CISKIT_ENUM_CAP)."""
    return int(os.environ.get("CISKIT_ENUM_CAP", "28"))


@lru_cache(maxsize=None)
def krawtchouk(n: int, j: int, i: int) -> int:
    """Krawtchouk polynomial K_j(i) = sum_s (-1)^s C(i,s) C(n-i, j-s)."""
    return sum(
        (-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(0, j + 1)
    )


def macwilliams_transform(
    counts: Sequence[int | Fraction], n: int, size: int | Fraction
) -> tuple[Fraction, ...]:
    """MacWilliams transform of a weight/distance distribution.

    Returns B'_j = (1/size) * sum_i B_i K_j(i) as exact rationals.
    """
    return tuple(
        Fraction(sum(Fraction(counts[i]) * krawtchouk(n, j, i) for i in range(n + 1)), 1)
        / size
        for j in range(n + 1)
    )


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords by Hamming weight."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise DimensionError("need n+1 weight counts")

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def min_nonzero(self) -> int | None:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    def macwilliams_dual(self) -> tuple[Fraction, ...]:
        return macwilliams_transform(self.counts, self.n, self.size)

    def is_macwilliams_fixed(self) -> bool:
        return all(
            d == c for d, c in zip(self.macwilliams_dual(), self.counts)
        )


@dataclass(frozen=True)
class DistanceDistribution:
    """Exact distance distribution B_i and its MacWilliams dual B_i^perp."""

    n: int
    size: int
    b: tuple[Fraction, ...]
    b_dual: tuple[Fraction, ...]

    @classmethod
    def from_pair_counts(
        cls, n: int, size: int, pair_counts: Sequence[int]
    ) -> "DistanceDistribution":
        """Build from ordered-pair distance counts N_i = |{(x,y): d(x,y)=i}|."""
        b = tuple(Fraction(c, size) for c in pair_counts)
        b_dual = macwilliams_transform(b, n, size)
        if any(v < 0 for v in b_dual):
            raise ValueError("dual distance distribution has a negative entry")
        return cls(n, size, b, b_dual)

    @property
    def dual_distance(self) -> int | None:
        """Smallest i > 0 with B_i^perp != 0 (None when the dual is trivial)."""
        for i in range(1, self.n + 1):
            if self.b_dual[i] != 0:
                return i
        return None


def _check_cap(k: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if k > limit:
        raise TooLargeError(
            f"dimension {k} exceeds enumeration cap {limit}; "
            "raise CISKIT_ENUM_CAP or pass an explicit cap"
        )


class LinearCode:
    """An [n,k] binary linear code held as a full-rank generator matrix."""

    __slots__ = ("generator", "_rref", "_pivots")

    def __init__(self, generator: BitMatrix):
        red, pivots = generator.rref()
        if len(pivots) != generator.nrows:
            raise DimensionError(
                f"generator rows are dependent (rank {len(pivots)} of {generator.nrows})"
            )
        self.generator = generator
        self._rref = red
        self._pivots = pivots

    @classmethod
    def from_systematic(cls, a: BitMatrix) -> "LinearCode":
        """The code spanned by (I | A)."""
        if a.nrows != a.ncols:
            raise DimensionError("systematic right block must be square")
        return cls(BitMatrix.identity(a.nrows).hstack(a))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "LinearCode":
        return cls(BitMatrix.from_strings(rows))

    @property
    def length(self) -> int:
        return self.generator.ncols

    @property
    def dimension(self) -> int:
        return self.generator.nrows

    @property
    def size(self) -> int:
        return 1 << self.dimension

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def rref_generator(self) -> BitMatrix:
        """Row-reduced generator; canonical for the row space."""
        return self._rref

    def systematic_right_block(self) -> BitMatrix | None:
        """A with rref generator (I | A), or None when the first k columns
        are not an information set."""
        k = self.dimension
        if self._pivots != tuple(range(k)):
            return None
        return BitMatrix(k, self.length - k, [r >> k for r in self._rref.rows])

    def contains(self, word: BitVector) -> bool:
        if word.n != self.length:
            raise DimensionError("word length mismatch")
        w = word.bits
        for i, p in enumerate(self._pivots):
            if (w >> p) & 1:
                w ^= self._rref.rows[i]
        return w == 0

    def codeword_bits(self, cap: int = 20) -> list[int]:
        """All 2^k codewords as packed integers."""
        if self.dimension > cap:
            raise TooLargeError(f"2^{self.dimension} codewords exceed budget")
        words = [0]
        for r in self.generator.rows:
            words += [w ^ r for w in words]
        return words

    def min_distance(self, cap: int | None = None) -> int:
        """Exact minimum nonzero weight by Gray-code enumeration."""
        _check_cap(self.dimension, cap)
        if self.length > 64:  # beyond the packed-word kernels
            return self._gray_sweep()[0]
        return kernels.min_nonzero_weight(list(self.generator.rows), self.length)

    def _gray_sweep(self) -> tuple[int, list[int]]:
        """Pure-int Gray-code enumeration for lengths above 64 bits."""
        rows = self.generator.rows
        counts = [0] * (self.length + 1)
        counts[0] = 1
        word = 0
        best = self.length + 1
        for i in range(1, 1 << self.dimension):
            word ^= rows[(i & -i).bit_length() - 1]
            w = word.bit_count()
            counts[w] += 1
            if w < best:
                best = w
        return best, counts

    def min_weight_upper_bound(self, trials: int = 2000, seed: int = 0) -> int:
        """Cheap upper bound: the lightest of `trials` random codewords.

        For dimensions over the enumeration cap, where min_distance refuses.
        """
        import random

        rng = random.Random(seed)
        best = min(r.bit_count() for r in self.generator.rows)
        k = self.dimension
        for _ in range(trials):
            m = rng.getrandbits(k) or 1
            w = 0
            while m:
                w ^= self.generator.rows[(m & -m).bit_length() - 1]
                m &= m - 1
            best = min(best, w.bit_count())
        return best

    def weight_distribution(self, cap: int | None = None) -> WeightDistribution:
        _check_cap(self.dimension, cap)
        if self.length > 64:
            return WeightDistribution(self.length, tuple(self._gray_sweep()[1]))
        counts = kernels.weight_counts(list(self.generator.rows), self.length)
        return WeightDistribution(self.length, tuple(counts))

    def distance_distribution(self, cap: int | None = None) -> DistanceDistribution:
        """For linear codes B_i = A_i; pair counts are A_i * |C|."""
        wd = self.weight_distribution(cap)
        return DistanceDistribution.from_pair_counts(
            self.length, self.size, [c * self.size for c in wd.counts]
        )

    def dual_code(self) -> "LinearCode":
        """The dual under the standard inner product."""
        ns = self.generator.nullspace()
        if ns is None:
            raise DimensionError("dual of a full-space code is trivial")
        return LinearCode(ns)

    def dual_distance(self, cap: int | None = None) -> int:
        """Minimum distance of the dual code."""
        return self.dual_code().min_distance(cap)

    def is_self_dual(self) -> bool:
        if self.length != 2 * self.dimension:
            return False
        rows = self.generator.rows
        return all(
            (rows[i] & rows[j]).bit_count() & 1 == 0
            for i in range(len(rows))
            for j in range(i, len(rows))
        )

    def is_formally_self_dual(self, cap: int | None = None) -> bool:
        """Weight enumerator invariant under the MacWilliams transform."""
        if self.length != 2 * self.dimension:
            return False
        return self.weight_distribution(cap).is_macwilliams_fixed()

    def is_even_formally_self_dual(self, cap: int | None = None) -> bool:
        if not self.is_formally_self_dual(cap):
            return False
        wd = self.weight_distribution(cap)
        return all(wd.counts[i] == 0 for i in range(1, self.length + 1, 2))

    def permute_columns(self, perm: Sequence[int]) -> "LinearCode":
        return LinearCode(self.generator.permute_columns(perm))

    def __eq__(self, other: object) -> bool:
        """Equality as sets of codewords (identical row spaces)."""
        return (
            isinstance(other, LinearCode)
            and self.length == other.length
            and self._rref.rows == other._rref.rows
        )

    def __hash__(self) -> int:
        return hash((self.length, self._rref.rows))

    def __repr__(self) -> str:
        return f"LinearCode[{self.length},{self.dimension}]"


class UnrestrictedCode:
    """A possibly nonlinear code given by its codeword list."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: Iterable[int]):
        ws = sorted(set(int(w) for w in words))
        if not ws:
            raise DimensionError("a code needs at least one word")
        if ws[-1] >> n:
            raise DimensionError("codeword exceeds the stated length")
        self.n = n
        self.words = tuple(ws)

    @classmethod
    def from_linear(cls, code: LinearCode, cap: int = 20) -> "UnrestrictedCode":
        return cls(code.length, code.codeword_bits(cap))

    @property
    def size(self) -> int:
        return len(self.words)

    def min_distance(self) -> int | None:
        dd = self.pair_distance_counts()
        for i in range(1, self.n + 1):
            if dd[i]:
                return i
        return None

    def pair_distance_counts(self) -> list[int]:
        """Ordered-pair counts N_i = |{(x,y) in C^2 : d(x,y) = i}|."""
        if self.size * self.size > _PAIR_BUDGET:
            raise TooLargeError(f"{self.size}^2 pairs exceed the budget")
        acc = [0] * (self.n + 1)
        if self.n > 64:
            for w in self.words:
                for v in self.words:
                    acc[(w ^ v).bit_count()] += 1
            return acc
        arr = np.array(self.words, dtype=np.uint64)
        npacc = np.zeros(self.n + 1, dtype=np.int64)
        for w in arr:
            npacc += np.bincount(np.bitwise_count(arr ^ w), minlength=self.n + 1)
        return [int(c) for c in npacc]

    def distance_distribution(self) -> DistanceDistribution:
        return DistanceDistribution.from_pair_counts(
            self.n, self.size, self.pair_distance_counts()
        )

    def dual_distance(self) -> int | None:
        """Smallest i > 0 with nonzero dual distance distribution."""
        return self.distance_distribution().dual_distance

    def is_information_set(self, cols: Sequence[int]) -> bool:
        """True iff every |cols|-tuple occurs in exactly one codeword."""
        k = len(cols)
        if self.size != 1 << k:
            return False
        seen = set()
        for w in self.words:
            key = 0
            for pos, j in enumerate(cols):
                key |= ((w >> j) & 1) << pos
            seen.add(key)
        return len(seen) == self.size

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UnrestrictedCode)
            and self.n == other.n
            and self.words == other.words
        )

    def __hash__(self) -> int:
        return hash((self.n, self.words))

    def __repr__(self) -> str:
        return f"UnrestrictedCode(n={self.n}, size={self.size})"
