"""Classification of CIS codes up to column-permutation equivalence.

Two routes, cross-validating each other:

- exhaustive (n <= 5): every invertible A gives a distinct systematic CIS
  code (I|A).  Each A is first collapsed to the canonical representative of
  its S_n x S_n double coset (row/column permutations of A produce equivalent
  codes), which shrinks |GL(n,2)| to a few hundred cosets; the full
  column-permutation canonical form then merges cosets into classes and the
  per-class matrix counts are exactly the orbit-intersection masses of the
  counting formula.

- building-up: every [2n,n] CIS code arises, up to equivalence, by bordering
  a systematic form of a smaller CIS code with vectors (x, y).  Building up
  from row/column-permuted (A, x, y) gives equivalent codes, so it suffices
  to extend one representative per double coset of each smaller class, with
  all (x, y).  The double cosets of a class are enumerated exactly through
  its complementary information-set pairs, which is what makes this route
  complete (a single representative per class is provably not enough).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from . import kernels
from .canonical import canonical_form
from .codes import LinearCode
from .constructions import gl2_order
from .errors import TooLargeError
from .gf2 import BitMatrix

__all__ = [
    "ClassEntry",
    "ClassificationReport",
    "MassCheck",
    "classify_exhaustive",
    "classify_buildup",
    "mass_check",
    "fsd_sd_buckets",
    "write_report",
    "read_report",
]

_EXHAUSTIVE_CAP = 5
_MASS_CAP = 4


def pack_matrix(m: BitMatrix) -> int:
    out = 0
    for i, r in enumerate(m.rows):
        out |= r << (m.ncols * i)
    return out


def unpack_matrix(packed: int, n: int) -> BitMatrix:
    mask = (1 << n) - 1
    return BitMatrix(n, n, [(packed >> (n * i)) & mask for i in range(n)])


@dataclass(frozen=True)
class ClassEntry:
    """One equivalence class of [2n,n] CIS codes."""

    n: int
    a_packed: int | None  # representative systematic right block
    generator: BitMatrix  # canonical-form generator
    key: tuple[int, ...]
    d: int
    sd: bool
    fsd: bool
    mass: int | None  # |Orb(C) /\ C_sys| when exhaustively counted

    def code(self) -> LinearCode:
        if self.a_packed is not None:
            return LinearCode.from_systematic(unpack_matrix(self.a_packed, self.n))
        return LinearCode(self.generator)

    def right_block(self) -> BitMatrix:
        if self.a_packed is None:
            raise ValueError("entry carries no systematic representative")
        return unpack_matrix(self.a_packed, self.n)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    method: str
    entries: tuple[ClassEntry, ...]

    @property
    def length(self) -> int:
        return 2 * self.n

    @property
    def total(self) -> int:
        return len(self.entries)

    def keys(self) -> frozenset:
        return frozenset(e.key for e in self.entries)

    def d_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.entries:
            out[e.d] = out.get(e.d, 0) + 1
        return out


@dataclass(frozen=True)
class MassCheck:
    n: int
    gn: int
    per_class: tuple[int, ...]
    unmatched: int
    complete: bool


def _classify_from_coset_reps(
    n: int, reps: Iterable[int], masses: dict[int, int] | None, method: str
) -> ClassificationReport:
    """Group double-coset representatives into equivalence classes."""
    groups: dict[tuple, dict] = {}
    for packed in reps:
        code = LinearCode.from_systematic(unpack_matrix(packed, n))
        cf = canonical_form(code)
        g = groups.setdefault(
            cf.key, {"rep": packed, "mass": 0, "generator": cf.generator}
        )
        g["rep"] = min(g["rep"], packed)
        if masses is not None:
            g["mass"] += masses[packed]
    entries = []
    for key, g in groups.items():
        code = LinearCode.from_systematic(unpack_matrix(g["rep"], n))
        entries.append(
            ClassEntry(
                n=n,
                a_packed=g["rep"],
                generator=g["generator"],
                key=key,
                d=code.min_distance(),
                sd=code.is_self_dual(),
                fsd=code.is_formally_self_dual(),
                mass=g["mass"] if masses is not None else None,
            )
        )
    entries.sort(key=lambda e: (e.d, e.key))
    return ClassificationReport(n=n, method=method, entries=tuple(entries))


def classify_exhaustive(n: int) -> ClassificationReport:
    """Classify all [2n,n] CIS codes by enumerating GL(n,2); n <= 5."""
    if n > _EXHAUSTIVE_CAP:
        raise TooLargeError(f"exhaustive classification limited to n <= {_EXHAUSTIVE_CAP}")
    mats = kernels.gl_matrices(n)
    canon = kernels.dc_canon_batch(mats, n)
    uniq, counts = np.unique(canon, return_counts=True)
    masses = {int(u): int(c) for u, c in zip(uniq, counts)}
    report = _classify_from_coset_reps(n, masses.keys(), masses, "exhaustive")
    assert sum(e.mass for e in report.entries) == gl2_order(n)
    return report


def _coset_sources(entry: ClassEntry) -> list[int]:
    """All double-coset representatives of systematic forms of the class.

    Every systematic re-encoding of the class comes from an ordered pair of
    complementary information sets (left set, right set); representatives of
    the pair's intra-orderings differ only by row/column permutations, so one
    systematization per ordered pair, canonicalized, enumerates every coset.
    """
    m = entry.n
    code = entry.code()
    length = 2 * m
    cols = [code.generator.column_bits(j) for j in range(length)]

    def rank_of(idx) -> int:
        red = []
        for e in idx:
            u = cols[e]
            for v in red:
                if u & (v & -v):
                    u ^= v
            if u:
                red.append(u)
        return len(red)

    out = set()
    for left in itertools.combinations(range(length), m):
        right = tuple(j for j in range(length) if j not in left)
        if rank_of(left) != m or rank_of(right) != m:
            continue
        for l_side, r_side in ((left, right), (right, left)):
            permuted = code.permute_columns(list(l_side) + list(r_side))
            a = permuted.systematic_right_block()
            assert a is not None and a.det_nonzero()
            out.add(kernels.dc_canon(pack_matrix(a), m))
    return sorted(out)


def _buildup_candidates(a_packed: int, m: int) -> np.ndarray:
    """Packed (m+1)-order right halves of every build-up of (I|A).

    Vectorized over all (x, y): the bordered matrix has corner
    z = 1 + <x A^-1, y>, top row x, left column y over A.
    """
    a = unpack_matrix(a_packed, m)
    ainv = a.inverse()
    size = 1 << m
    w = m + 1
    table = [0] * size
    for x in range(1, size):
        low = x & -x
        table[x] = table[x ^ low] ^ ainv.rows[low.bit_length() - 1]
    c_tab = np.array(table, dtype=np.uint64)
    y = np.arange(size, dtype=np.uint64)
    z = np.uint64(1) ^ (np.bitwise_count(c_tab[:, None] & y[None, :]) & np.uint64(1))
    row0 = z | (np.arange(size, dtype=np.uint64) << np.uint64(1))[:, None]
    spread_y = np.zeros(size, dtype=np.uint64)
    for i in range(m):
        spread_y |= ((y >> np.uint64(i)) & np.uint64(1)) << np.uint64((i + 1) * w)
    const = 0
    for i in range(m):
        const |= (a.rows[i] << 1) << ((i + 1) * w)
    cand = np.uint64(const) | spread_y[None, :] | row0
    return cand.ravel()


def _base_report(n: int) -> ClassificationReport:
    """The length-2 base case: the repetition code, A = (1)."""
    assert n == 1
    return _classify_from_coset_reps(1, [1], {1: 1}, "buildup")


def classify_buildup(
    n: int,
    base: ClassificationReport | None = None,
    jobs: int = 1,
) -> ClassificationReport:
    """Classify length-2n CIS codes by exhaustive building-up from length
    2(n-1); recurses down to the repetition code when no base is given."""
    if n == 1:
        return _base_report(1)
    if base is None:
        base = classify_buildup(n - 1, jobs=jobs)
    if base.n != n - 1:
        raise ValueError(f"need a base report for n={n - 1}, got n={base.n}")
    m = n - 1
    sources: list[int] = []
    for entry in base.entries:
        sources.extend(_coset_sources(entry))
    sources = sorted(set(sources))

    unique: set[int] = set()
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [sources[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for arr in pool.map(_candidates_worker, [(c, m) for c in chunks]):
                unique.update(arr)
    else:
        unique.update(_candidates_worker((sources, m)))
    report = _classify_from_coset_reps(n, unique, None, "buildup")
    return report


def _candidates_worker(args: tuple[Sequence[int], int]) -> list[int]:
    sources, m = args
    batches = []
    for a_packed in sources:
        batches.append(_buildup_candidates(a_packed, m))
    if not batches:
        return []
    cands = np.unique(np.concatenate(batches))
    canon = kernels.dc_canon_batch(cands, m + 1)
    return [int(v) for v in np.unique(canon)]


def mass_check(report: ClassificationReport, n: int) -> MassCheck:
    """Bucket all of GL(n,2) by class and compare the mass sum with g_n.

    Complete iff every invertible matrix lands in a reported class and the
    masses sum to g_n (they always do when everything matches; a dropped
    class shows up as unmatched mass).
    """
    if n > _MASS_CAP:
        raise TooLargeError(f"mass check enumerates GL(n,2); n must be <= {_MASS_CAP}")
    if report.n != n:
        raise ValueError("report length disagrees with n")
    mats = kernels.gl_matrices(n)
    canon = kernels.dc_canon_batch(mats, n)
    uniq, counts = np.unique(canon, return_counts=True)
    key_to_idx = {e.key: i for i, e in enumerate(report.entries)}
    per_class = [0] * len(report.entries)
    unmatched = 0
    for packed, c in zip(uniq, counts):
        code = LinearCode.from_systematic(unpack_matrix(int(packed), n))
        key = canonical_form(code).key
        idx = key_to_idx.get(key)
        if idx is None:
            unmatched += int(c)
        else:
            per_class[idx] += int(c)
    gn = gl2_order(n)
    return MassCheck(
        n=n,
        gn=gn,
        per_class=tuple(per_class),
        unmatched=unmatched,
        complete=(unmatched == 0 and sum(per_class) == gn),
    )


def fsd_sd_buckets(report: ClassificationReport) -> dict[int, tuple[int, int, int]]:
    """Per-distance triples (self-dual, non-sd formally self-dual, non-fsd)."""
    out: dict[int, list[int]] = {}
    for e in report.entries:
        bucket = out.setdefault(e.d, [0, 0, 0])
        if e.sd:
            bucket[0] += 1
        elif e.fsd:
            bucket[1] += 1
        else:
            bucket[2] += 1
    return {d: tuple(v) for d, v in sorted(out.items())}


def _row_to_hex(row: int, width: int) -> str:
    value = 0
    for j in range(width):
        value |= ((row >> j) & 1) << (width - 1 - j)
    return format(value, f"0{(width + 3) // 4}x")


def _row_from_hex(text: str, width: int) -> int:
    value = int(text, 16)
    row = 0
    for j in range(width):
        row |= ((value >> (width - 1 - j)) & 1) << j
    return row


def write_report(report: ClassificationReport, fp: IO[str]) -> None:
    """One class per line: len, d, sd, fsd, and the canonical generator with
    each row hex-encoded big-endian (coordinate 0 = most significant bit)."""
    for e in report.entries:
        gen = ",".join(_row_to_hex(r, e.generator.ncols) for r in e.generator.rows)
        fp.write(
            f"len={2 * e.n} d={e.d} sd={1 if e.sd else 0} fsd={1 if e.fsd else 0} gen={gen}\n"
        )


def read_report(fp: IO[str]) -> ClassificationReport:
    entries = []
    n = None
    for line in fp:
        line = line.strip()
        if not line:
            continue
        fields = dict(part.split("=", 1) for part in line.split())
        length = int(fields["len"])
        n = length // 2
        rows = [_row_from_hex(h, length) for h in fields["gen"].split(",")]
        gen = BitMatrix(len(rows), length, rows)
        code = LinearCode(gen)
        entries.append(
            ClassEntry(
                n=n,
                a_packed=None,
                generator=gen,
                key=canonical_form(code).key,
                d=int(fields["d"]),
                sd=fields["sd"] == "1",
                fsd=fields["fsd"] == "1",
                mass=None,
            )
        )
    if n is None:
        raise ValueError("empty classification report")
    entries.sort(key=lambda e: (e.d, e.key))
    return ClassificationReport(n=n, method="file", entries=tuple(entries))
