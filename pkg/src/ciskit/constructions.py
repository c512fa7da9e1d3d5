"""Explicit CIS constructions: double circulant, Paley/SRG/DRT, cyclic
shortening and extension, the building-up construction and its inverse
reduction, and the counting formulas behind the classification and the
existence bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import NamedTuple

import numpy as np

from . import kernels
from .codes import LinearCode
from .errors import ConstructionError, DimensionError, NotCisError
from .gf2 import BitMatrix, BitVector, Gf2Poly, circulant, poly_gcd, x_pow_minus_one

__all__ = [
    "DoubleCirculantCode",
    "double_circulant",
    "SrgParams",
    "paley_matrix",
    "paley_cis",
    "srg_cis",
    "cyclic_code",
    "shorten",
    "extend_parity",
    "qr_generator_poly",
    "golay_code",
    "BuildUpResult",
    "build_up",
    "build_up_circulant",
    "reduce_code",
    "gl2_order",
    "e_n_upper",
    "vg_bound_M",
    "brute_B",
]


class DoubleCirculantCode(NamedTuple):
    """A double circulant code and whether the gcd criterion certifies it CIS."""

    code: LinearCode
    cis_by_gcd: bool


def double_circulant(f: Gf2Poly, n: int) -> DoubleCirculantCode:
    """The code spanned by (I | circulant of f) over n coordinates per half.

    The code is certified CIS with the systematic partition exactly when
    gcd(f, x^n - 1) = 1 (the circulant then has full rank).
    """
    if not f.is_zero and f.degree >= n:
        raise ConstructionError(f"deg f = {f.degree} must be below n = {n}")
    a = circulant(f.to_vector(n))
    cis = (not f.is_zero) and poly_gcd(f, x_pow_minus_one(n)) == Gf2Poly(1)
    return DoubleCirculantCode(LinearCode.from_systematic(a), cis)


@dataclass(frozen=True)
class SrgParams:
    """Parameters of a strongly regular graph or doubly regular tournament."""

    order: int
    degree: int
    lam: int
    mu: int
    kind: str  # "srg" | "drt"


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def paley_matrix(q: int) -> tuple[BitMatrix, SrgParams]:
    """Quadratic-residue matrix: entry (i,j) = 1 iff j - i is a square mod q.

    For q = 1 mod 4 this is a Paley SRG, for q = 3 mod 4 a Paley DRT, with
    the classical parameters.
    """
    if q % 2 == 0 or not _is_prime(q):
        raise ConstructionError(f"q = {q} must be an odd prime")
    squares = {(x * x) % q for x in range(1, q)}
    rows = []
    for i in range(q):
        r = 0
        for j in range(q):
            if (j - i) % q in squares:
                r |= 1 << j
        rows.append(r)
    m = BitMatrix(q, q, rows)
    if q % 4 == 1:
        params = SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4, "srg")
    else:
        params = SrgParams(q, (q - 1) // 2, (q - 3) // 4, (q + 1) // 4, "drt")
    check_graph_axioms(m, params)
    return m, params


def check_graph_axioms(a: BitMatrix, params: SrgParams) -> None:
    """Verify the integer matrix equations of an SRG / DRT adjacency matrix.

    Everything is checked over the integers, not mod 2: the parity
    hypotheses of the CIS proposition are about integer parameters.
    """
    n = params.order
    if a.nrows != n or a.ncols != n:
        raise ConstructionError("adjacency matrix order differs from params")
    ai = np.array([[a.entry(i, j) for j in range(n)] for i in range(n)], dtype=np.int64)
    j = np.ones((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    if np.any(np.diag(ai)):
        raise ConstructionError("adjacency matrix has a nonzero diagonal")
    if not (np.all(ai @ j == params.degree * j) and np.all(j @ ai == params.degree * j)):
        raise ConstructionError("matrix is not regular of the stated degree")
    if params.kind == "srg":
        if not np.array_equal(ai, ai.T):
            raise ConstructionError("SRG adjacency matrix must be symmetric")
        rhs = params.degree * eye + params.lam * ai + params.mu * (j - eye - ai)
    elif params.kind == "drt":
        if not np.array_equal(ai + ai.T, j - eye):
            raise ConstructionError("DRT adjacency matrix must be a tournament")
        rhs = params.lam * ai + params.mu * (j - eye - ai)
    else:
        raise ConstructionError(f"unknown graph kind {params.kind!r}")
    if not np.array_equal(ai @ ai, rhs):
        raise ConstructionError("quadratic matrix equation fails over the integers")


_CASES = {
    # case: (kind, right block, degree parity, lambda parity, mu parity)
    1: ("srg", "A+I", 0, 0, 1),
    2: ("drt", "A", 1, 0, 1),
    3: ("srg", "A+J", 0, 1, 1),
    4: ("drt", "A+J", 0, 1, 1),
}


def srg_cis(a: BitMatrix, params: SrgParams, case: int) -> LinearCode:
    """Span of (I, M) for the four combinatorial-matrix cases.

    M is A+I, A, A+J, A+J for cases 1-4; each case requires odd order and
    the stated parities of (degree, lambda, mu).
    """
    if case not in _CASES:
        raise ValueError(f"case must be 1..4, got {case}")
    check_graph_axioms(a, params)
    kind, block, p_deg, p_lam, p_mu = _CASES[case]
    problems = []
    if params.kind != kind:
        problems.append(f"case {case} needs a {kind.upper()}")
    if params.order % 2 == 0:
        problems.append("order must be odd")
    if params.degree % 2 != p_deg:
        problems.append(f"degree {params.degree} has the wrong parity")
    if params.lam % 2 != p_lam:
        problems.append(f"lambda {params.lam} has the wrong parity")
    if params.mu % 2 != p_mu:
        problems.append(f"mu {params.mu} has the wrong parity")
    if problems:
        raise ConstructionError("; ".join(problems))
    n = params.order
    rows = list(a.rows)
    if block == "A+I":
        rows = [r ^ (1 << i) for i, r in enumerate(rows)]
    elif block == "A+J":
        full = (1 << n) - 1
        rows = [r ^ full for r in rows]
    m = BitMatrix(n, n, rows)
    if not m.det_nonzero():
        raise ConstructionError("right block is singular despite the hypotheses")
    return LinearCode.from_systematic(m)


def paley_cis(q: int) -> LinearCode:
    """The Paley CIS code: span of (I, Q+I) for q = 8j+5, (I, Q) for q = 8j+3."""
    a, params = paley_matrix(q)
    if q % 8 == 5:
        return srg_cis(a, params, 1)
    if q % 8 == 3:
        return srg_cis(a, params, 2)
    raise ConstructionError(f"q = {q} must be 3 or 5 mod 8")


def cyclic_code(n_len: int, g: Gf2Poly) -> LinearCode:
    """Cyclic code of odd length with generator polynomial g | x^N - 1.

    The generator matrix rows are x^i g for i = 0..k-1, so any k consecutive
    coordinates form an information set.
    """
    if n_len % 2 == 0:
        raise ConstructionError("cyclic construction requires odd length")
    if g.is_zero or not g.divides(x_pow_minus_one(n_len)):
        raise ConstructionError("g must divide x^N - 1")
    k = n_len - g.degree
    rows = [g.bits << i for i in range(k)]
    return LinearCode(BitMatrix(k, n_len, rows))


def shorten(code: LinearCode, i: int) -> LinearCode:
    """Shorten at coordinate i: keep codewords with a 0 there, drop the column."""
    if not 0 <= i < code.length:
        raise ValueError(f"shorten index {i} out of range")
    rows = list(code.generator.rows)
    pivot = None
    for r_idx, r in enumerate(rows):
        if (r >> i) & 1:
            if pivot is None:
                pivot = r_idx
            else:
                rows[r_idx] ^= rows[pivot]
    if pivot is not None:
        rows.pop(pivot)
    if not rows:
        raise DimensionError("shortening the whole code away")
    low = (1 << i) - 1
    rows = [(r & low) | ((r >> (i + 1)) << i) for r in rows]
    return LinearCode(BitMatrix(len(rows), code.length - 1, rows))


def extend_parity(code: LinearCode, position: int | None = None) -> LinearCode:
    """Extend by an overall parity check; the new column goes to `position`
    (default: appended at the end)."""
    n = code.length
    pos = n if position is None else position
    if not 0 <= pos <= n:
        raise ValueError(f"parity position {pos} out of range")
    rows = []
    for r in code.generator.rows:
        parity = r.bit_count() & 1
        low = r & ((1 << pos) - 1)
        rows.append(low | (parity << pos) | ((r >> pos) << (pos + 1)))
    return LinearCode(BitMatrix(code.dimension, n + 1, rows))


def qr_generator_poly(p: int) -> Gf2Poly:
    """Generator polynomial of a binary quadratic residue code of length p.

    Requires 2 to be a square mod p (p = +-1 mod 8) so the generator has
    binary coefficients; computed as gcd(x^p - 1, sum of x^r over nonzero
    squares r), with any x+1 factor removed.
    """
    if not _is_prime(p) or p % 8 not in (1, 7):
        raise ConstructionError(f"p = {p} must be a prime = +-1 mod 8")
    squares = {(x * x) % p for x in range(1, p)}
    theta = Gf2Poly.from_exponents(squares)
    g = poly_gcd(x_pow_minus_one(p), theta)
    x_plus_1 = Gf2Poly.from_coeffs([1, 1])
    if x_plus_1.divides(g):
        g = divmod(g, x_plus_1)[0]
    assert g.degree == (p - 1) // 2 and g.divides(x_pow_minus_one(p))
    return g


def golay_code() -> LinearCode:
    """The extended binary Golay [24,12,8] code, via the length-23 QR code."""
    return extend_parity(cyclic_code(23, qr_generator_poly(23)))


class BuildUpResult(NamedTuple):
    code: LinearCode
    z: int
    multipliers: BitVector


def _systematic_cis_block(code: LinearCode) -> BitMatrix:
    if code.length != 2 * code.dimension:
        raise NotCisError("building-up needs a rate one-half code")
    a = code.systematic_right_block()
    if a is None or not a.det_nonzero():
        raise NotCisError("base code is not CIS with the systematic partition")
    return a


def build_up(code: LinearCode, x: BitVector, y: BitVector) -> BuildUpResult:
    """Building-up construction: extend a systematic CIS [2n,n] code by (x,y).

    The output right half is the bordered matrix with corner z, top row x,
    left column y over A, where z = 1 + sum_i c_i y_i and the multipliers c
    solve x = sum_i c_i r_i against the rows of A.  The result is a
    [2n+2, n+1] CIS code with the systematic partition.
    """
    a = _systematic_cis_block(code)
    n = a.nrows
    if x.n != n or y.n != n:
        raise DimensionError("x and y must have length n")
    c = a.inverse().mat_vec(x)  # c = x A^-1 solves sum_i c_i r_i = x
    assert a.mat_vec(c) == x
    z = 1 ^ c.dot(y)
    rows = [(z | (x.bits << 1))]
    for i in range(n):
        rows.append(y[i] | (a.rows[i] << 1))
    right = BitMatrix(n + 1, n + 1, rows)
    if not right.det_nonzero():
        raise AssertionError("bordered right half must be invertible")
    return BuildUpResult(LinearCode.from_systematic(right), z, c)


def build_up_circulant(code: LinearCode) -> BuildUpResult:
    """Corollary form of build_up for double circulant codes: x = y = all-one.

    Requires the circulant first row to have odd weight; the corner entry is
    then 0 for odd n and 1 for even n.
    """
    a = _systematic_cis_block(code)
    n = a.nrows
    first = a.row(0)
    expected = circulant(first)
    if a != expected:
        raise ConstructionError("right block is not circulant")
    if first.weight % 2 == 0:
        raise ConstructionError("circulant first row must have odd weight")
    ones = BitVector(n, (1 << n) - 1)
    result = build_up(code, ones, ones)
    assert result.z == (0 if n % 2 else 1)
    return result


def reduce_code(code: LinearCode) -> LinearCode:
    """Inverse of building-up: a [2n,n] systematic CIS code yields a
    [2(n-1), n-1] one.

    Deletes the first column of A; the smallest row index j whose truncated
    row depends on the others is removed together with identity column j.
    """
    a = _systematic_cis_block(code)
    n = a.nrows
    if n < 2:
        raise DimensionError("cannot reduce below length 2")
    trunc = [r >> 1 for r in a.rows]
    j = None
    for cand in range(n):
        others = [trunc[i] for i in range(n) if i != cand]
        if BitMatrix(n - 1, n - 1, others).rank() == n - 1:
            j = cand
            break
    assert j is not None, "deleting one column must leave a dependent row"
    a_rows = [trunc[i] for i in range(n) if i != j]
    a_new = BitMatrix(n - 1, n - 1, a_rows)
    assert a_new.det_nonzero()
    return LinearCode.from_systematic(a_new)


def gl2_order(n: int) -> int:
    """|GL(n,2)| = prod_{j<n} (2^n - 2^j)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for j in range(n):
        out *= (1 << n) - (1 << j)
    return out


def e_n_upper(n: int) -> int:
    """Upper bound g_n / n! on the number of CIS equivalence classes."""
    g = gl2_order(n)
    assert g % factorial(n) == 0
    return g // factorial(n)


def vg_bound_M(n: int, d: int) -> int:
    """The counting bound M(n,d) = sum_{j=2}^d sum_{t=1}^{j-1}
    C(n,j-t) C(n,t) t 2^(n(n-1)); M(n,1) is the empty sum."""
    if n < 1 or d < 1 or d > 2 * n:
        raise ValueError(f"need 1 <= d <= 2n, got n={n}, d={d}")
    scale = 1 << (n * (n - 1))
    return sum(
        comb(n, j - t) * comb(n, t) * t * scale
        for j in range(2, d + 1)
        for t in range(1, j)
    )


def brute_B(n: int, d: int) -> int:
    """Exact count of invertible A with <= d dependent columns in (I, A).

    The dependent-column count of (I|A) is the minimum over nonzero v of
    wt(Av) + wt(v); enumerates all of GL(n,2), so n <= 4.
    """
    if n > 4:
        raise ValueError("brute_B enumerates GL(n,2); n must be <= 4")
    if n < 1 or d < 1 or d > 2 * n:
        raise ValueError(f"need 1 <= d <= 2n, got n={n}, d={d}")
    mats = kernels.gl_matrices(n)
    mask = (1 << n) - 1
    count = 0
    for packed in mats:
        packed = int(packed)
        rows = [(packed >> (n * i)) & mask for i in range(n)]
        cols = [0] * n
        for i, r in enumerate(rows):
            for j in range(n):
                cols[j] |= ((r >> j) & 1) << i
        best = 2 * n
        for v in range(1, 1 << n):
            av = 0
            vv = v
            while vv:
                av ^= cols[(vv & -vv).bit_length() - 1]
                vv &= vv - 1
            best = min(best, av.bit_count() + v.bit_count())
        if best <= d:
            count += 1
    return count
