"""CIS decisions and the permutations they induce.

A [2n,n] code is CIS when its columns split into two disjoint information
sets.  Systematic-form codes (I|A) with A invertible induce the linear
permutation x -> xA; the quality of such a permutation as a leakage-squeezing
countermeasure is its graph correlation immunity (GCI) order: the largest d
such that the Walsh transform sum_x (-1)^{a.x + b.F(x)} vanishes for every
nonzero (a,b) of concatenated weight < d.  The GCI order equals the dual
distance of the graph code {(x, F(x))}, which gives the two independent
certification routes implemented here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Sequence

import numpy as np

from .codes import LinearCode, UnrestrictedCode
from .errors import DimensionError, NotCisError, TooLargeError
from .gf2 import BitMatrix
from .matroid import PartitionWitness, partition_into_two_bases

__all__ = [
    "CisCertificate",
    "NotCisProof",
    "PermutationTable",
    "GciReport",
    "is_information_set",
    "is_cis_systematic",
    "find_cis_partition",
    "quick_reject",
    "extract_permutation",
    "walsh",
    "gci_order_walsh",
    "gci_order_dual",
    "graph_code",
    "export_sbox",
    "read_sbox",
]

_TABLE_CAP = 20  # permutation tables up to 2^20 entries
_SWEEP_CAP = 10  # full Walsh sweeps up to 2^(2*10) transform values


@dataclass(frozen=True)
class CisCertificate:
    """Two complementary information sets (sorted 0-based column indices)."""

    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class NotCisProof:
    """Columns T with |T| > 2 rank(T): no two disjoint information sets can
    both intersect T in at most rank(T) columns and still cover it."""

    columns: tuple[int, ...]
    rank: int

    @property
    def reason(self) -> str:
        if self.rank == 0:
            return "dual-weight-1"
        return "rank-deficient-columns"


class PermutationTable:
    """A bijection of F_2^n held as a lookup table of 2^n values."""

    __slots__ = ("n", "table", "_np")

    def __init__(self, n: int, table: Sequence[int]):
        if len(table) != 1 << n:
            raise DimensionError(f"table must have 2^{n} entries")
        t = tuple(int(v) for v in table)
        if len(set(t)) != len(t) or max(t) >= 1 << n or min(t) < 0:
            raise ValueError("table is not a bijection on {0..2^n-1}")
        self.n = n
        self.table = t
        self._np = None

    @classmethod
    def identity(cls, n: int) -> "PermutationTable":
        return cls(n, range(1 << n))

    @classmethod
    def from_linear(cls, a: BitMatrix) -> "PermutationTable":
        """The map x -> xA for an invertible A (rows of A bit-packed)."""
        n = a.nrows
        if a.ncols != n:
            raise DimensionError("linear permutation needs a square matrix")
        if n > _TABLE_CAP:
            raise TooLargeError(f"2^{n} table entries exceed the cap {_TABLE_CAP}")
        table = [0] * (1 << n)
        for x in range(1, 1 << n):
            low = x & -x
            table[x] = table[x ^ low] ^ a.rows[low.bit_length() - 1]
        return cls(n, table)

    def as_array(self) -> np.ndarray:
        if self._np is None:
            self._np = np.array(self.table, dtype=np.uint32)
        return self._np

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermutationTable)
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.n, self.table))

    def __repr__(self) -> str:
        return f"PermutationTable(n={self.n})"


@dataclass(frozen=True)
class GciReport:
    """GCI order with the minimal-weight witness that stops it."""

    order: int
    witness: tuple[int, int]
    value: int


def is_information_set(code: LinearCode, cols: Sequence[int]) -> bool:
    """True iff the generator columns `cols` form an invertible k x k block."""
    if len(cols) != code.dimension:
        raise DimensionError(
            f"information set must have size k={code.dimension}, got {len(cols)}"
        )
    return code.generator.submatrix_columns(list(cols)).rank() == code.dimension


def _rate_half_or_raise(code: LinearCode) -> int:
    if code.length != 2 * code.dimension:
        raise NotCisError(
            f"CIS analysis needs a rate one-half code, got [{code.length},{code.dimension}]"
        )
    return code.dimension


def is_cis_systematic(code: LinearCode) -> bool:
    """CIS with the systematic partition {0..n-1} / {n..2n-1}.

    Row-reduces on the first n columns; true iff they are an information set
    and the residual right block is invertible.
    """
    n = _rate_half_or_raise(code)
    a = code.systematic_right_block()
    return a is not None and a.det_nonzero()


def quick_reject(code: LinearCode) -> str | None:
    """Cheap non-CIS rejections; returns a reason, or None for Unknown.

    Rejects codes with an identically-zero coordinate (dual weight 1) and
    systematic-form codes whose right block has rank below n/2.
    """
    n = _rate_half_or_raise(code)
    red, pivots = code.generator.rref()
    nonzero = 0
    for r in red.rows:
        nonzero |= r
    if nonzero != (1 << code.length) - 1:
        return "dual-weight-1"
    a = code.systematic_right_block()
    if a is not None and 2 * a.rank() < n:
        return "low-rank"
    return None


def find_cis_partition(
    code: LinearCode, *, prepass: int = 200, seed: int = 0xC15
) -> CisCertificate | NotCisProof:
    """Decide CIS-ness exactly; always returns a certificate either way.

    A randomized pre-pass tries `prepass` balanced partitions first; the
    matroid partition algorithm then settles the general case.
    """
    n = _rate_half_or_raise(code)
    cols = [code.generator.column_bits(j) for j in range(2 * n)]

    def _rank(idx) -> int:
        red = []
        for e in idx:
            u = cols[e]
            for m in red:
                if u & (m & -m):
                    u ^= m
            if u:
                red.append(u)
        return len(red)

    if is_cis_systematic(code):
        return CisCertificate(tuple(range(n)), tuple(range(n, 2 * n)))

    rng = random.Random(seed)
    universe = list(range(2 * n))
    for _ in range(prepass):
        rng.shuffle(universe)
        left = universe[:n]
        if _rank(left) == n and _rank(universe[n:]) == n:
            return CisCertificate(tuple(sorted(left)), tuple(sorted(universe[n:])))

    result = partition_into_two_bases(cols)
    if isinstance(result, PartitionWitness):
        return NotCisProof(columns=result.columns, rank=result.rank)
    left, right = result
    assert len(left) == n and len(right) == n
    return CisCertificate(tuple(left), tuple(right))


def extract_permutation(code: LinearCode) -> PermutationTable:
    """The permutation x -> xA of a systematic CIS code (I|A)."""
    n = _rate_half_or_raise(code)
    if n > _TABLE_CAP:
        raise TooLargeError(f"2^{n} table entries exceed the cap {_TABLE_CAP}")
    a = code.systematic_right_block()
    if a is None or not a.det_nonzero():
        raise NotCisError("code is not CIS with the systematic partition")
    return PermutationTable.from_linear(a)


@lru_cache(maxsize=8)
def _parity_table(n: int) -> np.ndarray:
    return (np.bitwise_count(np.arange(1 << n, dtype=np.uint32)) & 1).astype(np.int8)


def walsh(f: PermutationTable, a: int, b: int) -> int:
    """Walsh-Hadamard transform of F at (a, b): sum_x (-1)^(a.x + b.F(x))."""
    n = f.n
    par = _parity_table(n)
    x = np.arange(1 << n, dtype=np.uint32)
    fx = f.as_array()
    signs = par[x & np.uint32(a)] ^ par[fx & np.uint32(b)]
    return (1 << n) - 2 * int(np.count_nonzero(signs))


def _walsh_spectrum(f: PermutationTable) -> np.ndarray:
    """All 2^n x 2^n Walsh values by batched sign sums (exact in float32:
    entries are integers of magnitude <= 2^n)."""
    n = f.n
    if n > _SWEEP_CAP:
        raise TooLargeError(f"full Walsh sweep limited to n <= {_SWEEP_CAP}")
    par = _parity_table(n)
    x = np.arange(1 << n, dtype=np.uint32)
    # sign_a[a, x] = (-1)^(a.x); sign_b[x, b] = (-1)^(b.F(x))
    sign_a = 1.0 - 2.0 * par[x[:, None] & x[None, :]].astype(np.float32)
    sign_b = 1.0 - 2.0 * par[f.as_array()[:, None] & x[None, :]].astype(np.float32)
    return np.rint(sign_a @ sign_b).astype(np.int64)


def gci_order_walsh(f: PermutationTable) -> GciReport:
    """GCI order by exhaustive Walsh sweep in increasing (a,b) weight.

    The order is the smallest concatenated weight carrying a nonzero Walsh
    value; the witness is the (a,b)-lexicographically least pair there.
    """
    spectrum = _walsh_spectrum(f)
    n = f.n
    wt = np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int64)
    pair_weight = wt[:, None] + wt[None, :]
    nonzero = spectrum != 0
    nonzero[0, 0] = False
    assert nonzero.any(), "a bijection has nonzero Walsh values"
    d = int(pair_weight[nonzero].min())
    for a in range(1 << n):
        if wt[a] > d:
            continue
        row = np.nonzero(nonzero[a] & (pair_weight[a] == d))[0]
        if len(row):
            b = int(row[0])
            return GciReport(order=d, witness=(a, b), value=int(spectrum[a, b]))
    raise AssertionError("unreachable")


def graph_code(f: PermutationTable) -> UnrestrictedCode:
    """The graph code {(x, F(x))} of length 2n; x occupies coordinates 0..n-1."""
    n = f.n
    return UnrestrictedCode(2 * n, (x | (f.table[x] << n) for x in range(1 << n)))


def gci_order_dual(f: PermutationTable) -> int:
    """GCI order as the dual distance of the graph code.

    Independent of the Walsh route: counts pairwise distances and applies the
    MacWilliams transform with Krawtchouk sums in exact arithmetic.
    """
    d = graph_code(f).dual_distance()
    assert d is not None
    return d


def export_sbox(f: PermutationTable, fp: IO[str]) -> None:
    """S-box format: header ``n=<N>``, then 2^N lowercase hex lines.

    Bit i of each value encodes coordinate i of the output vector.
    """
    width = (f.n + 3) // 4
    fp.write(f"n={f.n}\n")
    for v in f.table:
        fp.write(format(v, f"0{width}x") + "\n")


def read_sbox(fp: IO[str]) -> PermutationTable:
    header = fp.readline().strip()
    if not header.startswith("n="):
        raise ValueError(f"bad s-box header: {header!r}")
    n = int(header[2:])
    table = [int(fp.readline(), 16) for _ in range(1 << n)]
    return PermutationTable(n, table)
