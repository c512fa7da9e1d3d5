# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernels: codeword enumeration, GL(n,2) enumeration, and
row/column-permutation canonical forms.

Same contracts as ciskit._kernels_py; see that module for the reference
semantics.
"""

import numpy as np


cdef extern from *:
    """
    static inline int ciskit_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int ciskit_pc64(unsigned long long x) { return __builtin_popcountll(x); }
    """
    int ciskit_ctz64(unsigned long long x) nogil
    int ciskit_pc64(unsigned long long x) nogil


def min_nonzero_weight(rows, int n):
    """Minimum Hamming weight over the 2^k - 1 nonzero row combinations.

    Rows are assumed linearly independent (a code's generator), so the
    minimum is at least 1 and the search may stop when it reaches 1.
    """
    cdef unsigned long long g[64]
    cdef int k = len(rows)
    cdef int j
    if k < 1 or k > 63:
        raise ValueError("need 1 <= k <= 63 generator rows")
    for j in range(k):
        g[j] = rows[j]
    cdef unsigned long long total = 1ULL << k
    cdef unsigned long long i, word = 0
    cdef int w, best = n + 1
    with nogil:
        for i in range(1, total):
            word ^= g[ciskit_ctz64(i)]
            w = ciskit_pc64(word)
            if w < best:
                best = w
                if best == 1:
                    break
    return best


def weight_counts(rows, int n):
    """Weight histogram of all 2^k codewords (zero word included)."""
    cdef unsigned long long g[64]
    cdef long long counts[65]
    cdef int k = len(rows)
    cdef int j
    if k < 1 or k > 63:
        raise ValueError("need 1 <= k <= 63 generator rows")
    if n > 64:
        raise ValueError("row width above 64 bits")
    for j in range(k):
        g[j] = rows[j]
    for j in range(n + 1):
        counts[j] = 0
    cdef unsigned long long total = 1ULL << k
    cdef unsigned long long i, word = 0
    with nogil:
        counts[0] = 1  # the zero codeword
        for i in range(1, total):
            word ^= g[ciskit_ctz64(i)]
            counts[ciskit_pc64(word)] += 1
    return [counts[j] for j in range(n + 1)]


def gl_matrices(int n):
    """All invertible n x n GF(2) matrices, bit-packed into uint64."""
    if n < 1 or n > 6:
        raise ValueError("gl_matrices supports 1 <= n <= 6")
    cdef unsigned long long gn = 1
    cdef int j
    for j in range(n):
        gn *= (1ULL << n) - (1ULL << j)
    out = np.empty(gn, dtype=np.uint64)
    cdef unsigned long long[::1] ov = out
    cdef unsigned long long span[8]
    cdef unsigned long long packed[8]
    cdef int rcur[8]
    cdef int size = 1 << n
    cdef int depth = 0, r, v
    cdef unsigned long long s, ns, cnt = 0
    span[0] = 1  # the zero vector
    packed[0] = 0
    rcur[0] = 0
    with nogil:
        while depth >= 0:
            r = rcur[depth] + 1
            while r < size and (span[depth] >> r) & 1:
                r += 1
            if r >= size:
                depth -= 1
                continue
            rcur[depth] = r
            if depth == n - 1:
                ov[cnt] = packed[depth] | (<unsigned long long> r << (n * depth))
                cnt += 1
                continue
            s = span[depth]
            ns = s
            for v in range(size):
                if (s >> v) & 1:
                    ns |= 1ULL << (v ^ r)
            span[depth + 1] = ns
            packed[depth + 1] = packed[depth] | (<unsigned long long> r << (n * depth))
            rcur[depth + 1] = 0
            depth += 1
    assert cnt == gn
    return out


def dc_canon_batch(mats, int n, perm_table):
    """Canonical form of each packed matrix under row and column permutations."""
    if n < 1 or n > 8:
        raise ValueError("dc_canon_batch supports 1 <= n <= 8")
    marr = np.ascontiguousarray(mats, dtype=np.uint64)
    parr = np.ascontiguousarray(perm_table, dtype=np.uint16)
    out = np.empty(len(marr), dtype=np.uint64)
    cdef unsigned long long[::1] mv = marr
    cdef unsigned long long[::1] ov = out
    cdef unsigned short[:, ::1] pv = parr
    cdef Py_ssize_t count = mv.shape[0]
    cdef int nperm = pv.shape[0]
    cdef int size = 1 << n
    cdef unsigned long long mask = (1ULL << n) - 1
    cdef int topshift = n * (n - 1)
    cdef Py_ssize_t idx
    cdef int p, j, i
    cdef unsigned long long m, best, cand, top
    cdef unsigned short rows[8]
    cdef unsigned short mapped[8]
    cdef unsigned short mx, t
    with nogil:
        for idx in range(count):
            m = mv[idx]
            for j in range(n):
                rows[j] = <unsigned short> ((m >> (n * j)) & mask)
            best = ~0ULL
            for p in range(nperm):
                mx = 0
                for j in range(n):
                    mapped[j] = pv[p, rows[j]]
                    if mapped[j] > mx:
                        mx = mapped[j]
                # packed comparison is dominated by the largest (top) row
                if best != ~0ULL:
                    top = (best >> topshift) & mask
                    if mx > top:
                        continue
                # insertion sort ascending
                for j in range(1, n):
                    t = mapped[j]
                    i = j - 1
                    while i >= 0 and mapped[i] > t:
                        mapped[i + 1] = mapped[i]
                        i -= 1
                    mapped[i + 1] = t
                cand = 0
                for j in range(n):
                    cand |= <unsigned long long> mapped[j] << (n * j)
                if cand < best:
                    best = cand
            ov[idx] = best
    return out
