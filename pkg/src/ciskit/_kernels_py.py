"""Numpy implementations of the hot kernels.

Selected automatically when the compiled extension is unavailable (or when
``CISKIT_BACKEND=py``).  Same contracts as ``ciskit._ext``:

- rows/matrices are bit-packed integers, coordinate ``i`` = bit ``i``;
- packed square matrices store row ``j`` at bits ``[n*j, n*j + n)``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

_CHUNK_BITS = 18  # codeword enumeration works on 2^18-element blocks


def _combos(rows: Sequence[int]) -> np.ndarray:
    """All XOR combinations of the given rows (2^len values)."""
    w = np.zeros(1, dtype=np.uint64)
    for r in rows:
        w = np.concatenate([w, w ^ np.uint64(r)])
    return w


def min_nonzero_weight(rows: Sequence[int], n: int) -> int:
    """Minimum Hamming weight over the 2^k - 1 nonzero row combinations.

    Rows are assumed linearly independent (a code's generator), so the
    minimum is at least 1 and the search may stop when it reaches 1.
    """
    k = len(rows)
    lo = _combos(rows[: min(k, _CHUNK_BITS)])
    if k <= _CHUNK_BITS:
        return int(np.bitwise_count(lo[1:]).min())
    best = int(np.bitwise_count(lo[1:]).min())
    offset = np.uint64(0)
    hi = rows[_CHUNK_BITS:]
    for i in range(1, 1 << len(hi)):
        offset ^= np.uint64(hi[(i & -i).bit_length() - 1])
        best = min(best, int(np.bitwise_count(lo ^ offset).min()))
        if best == 1:
            break
    return best


def weight_counts(rows: Sequence[int], n: int) -> list[int]:
    """Weight histogram of all 2^k codewords (zero word included)."""
    k = len(rows)
    lo = _combos(rows[: min(k, _CHUNK_BITS)])
    counts = np.bincount(np.bitwise_count(lo), minlength=n + 1).astype(np.int64)
    if k > _CHUNK_BITS:
        offset = np.uint64(0)
        hi = rows[_CHUNK_BITS:]
        for i in range(1, 1 << len(hi)):
            offset ^= np.uint64(hi[(i & -i).bit_length() - 1])
            counts += np.bincount(
                np.bitwise_count(lo ^ offset), minlength=n + 1
            ).astype(np.int64)
    return [int(c) for c in counts]


def gl_matrices(n: int) -> np.ndarray:
    """All invertible n x n GF(2) matrices, bit-packed into uint64.

    Enumerates row by row, tracking the row span so only extensions to a
    larger span are kept; the result has exactly prod_j (2^n - 2^j) entries.
    """
    size = 1 << n
    idx = np.arange(size)
    packed = np.zeros(1, dtype=np.uint64)
    span = np.zeros((1, size), dtype=bool)
    span[:, 0] = True
    for level in range(n):
        last = level == n - 1
        parts_packed = []
        parts_span = []
        for r in range(1, size):
            ok = ~span[:, r]
            if not ok.any():
                continue
            parts_packed.append(packed[ok] | np.uint64(r << (n * level)))
            if not last:
                sp = span[ok]
                parts_span.append(sp | sp[:, idx ^ r])
        packed = np.concatenate(parts_packed)
        if not last:
            span = np.vstack(parts_span)
    return packed


def _batcher_network(n: int) -> list[tuple[int, int]]:
    """Comparator list of Batcher's odd-even mergesort for n lanes."""
    pairs: list[tuple[int, int]] = []

    def merge(lo: int, length: int, step: int) -> None:
        double = step * 2
        if double < length:
            merge(lo, length, double)
            merge(lo + step, length, double)
            for i in range(lo + step, lo + length - step, double):
                pairs.append((i, i + step))
        else:
            pairs.append((lo, lo + step))

    def sort(lo: int, length: int) -> None:
        if length > 1:
            half = length // 2
            sort(lo, half)
            sort(lo + half, length - half)
            merge(lo, length, 1)

    # pad to a power of two with virtual +inf lanes, then drop them
    size = 1
    while size < n:
        size *= 2
    sort(0, size)
    return [(a, b) for a, b in pairs if a < n and b < n]


def dc_canon_batch(mats: np.ndarray, n: int, perm_table: np.ndarray) -> np.ndarray:
    """Canonical form of each packed matrix under row and column permutations.

    The canonical form is the minimum, over all column permutations in
    ``perm_table``, of the packed matrix with rows sorted ascending; it
    identifies the S_n x S_n double coset of the matrix.
    """
    mats = np.ascontiguousarray(mats, dtype=np.uint64)
    out = np.empty_like(mats)
    mask = np.uint64((1 << n) - 1)
    shifts = [np.uint64(n * j) for j in range(n)]
    network = _batcher_network(n)
    chunk = 1 << 21
    for lo in range(0, len(mats), chunk):
        m = mats[lo : lo + chunk]
        rows = [((m >> shifts[j]) & mask).astype(np.uint16) for j in range(n)]
        buf = [np.empty(len(m), dtype=np.uint16) for _ in range(n)]
        tmp = np.empty(len(m), dtype=np.uint16)
        best = None
        for table in perm_table:
            for j in range(n):
                buf[j] = table[rows[j]]
            for a, b in network:
                np.minimum(buf[a], buf[b], out=tmp)
                np.maximum(buf[a], buf[b], out=buf[b])
                buf[a], tmp = tmp, buf[a]
            cand = buf[0].astype(np.uint64)
            for j in range(1, n):
                cand |= buf[j].astype(np.uint64) << shifts[j]
            best = cand if best is None else np.minimum(best, cand, out=best)
        out[lo : lo + chunk] = best
    return out
