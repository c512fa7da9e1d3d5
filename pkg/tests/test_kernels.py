"""Backend agreement: the compiled kernels and the numpy fallback must be
interchangeable, and both must match a direct enumeration oracle."""

import random

import numpy as np
import pytest

from ciskit import kernels
from ciskit.constructions import gl2_order

_py = kernels.get_backend("py")
try:
    _ext = kernels.get_backend("ext")
except ImportError:  # pragma: no cover - extension not built
    _ext = None

backends = pytest.mark.parametrize(
    "impl",
    [
        pytest.param(_py, id="py"),
        pytest.param(
            _ext,
            id="ext",
            marks=pytest.mark.skipif(_ext is None, reason="extension not built"),
        ),
    ],
)


def _oracle_weights(rows, n):
    counts = [0] * (n + 1)
    k = len(rows)
    for m in range(1 << k):
        w = 0
        for j in range(k):
            if (m >> j) & 1:
                w ^= rows[j]
        counts[w.bit_count()] += 1
    return counts


def _independent_rows(rng, k, n):
    from ciskit.gf2 import BitMatrix

    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        if BitMatrix(k, n, rows).rank() == k:
            return rows


@backends
def test_weight_enumeration_vs_oracle(impl):
    # kernel contract: rows are a code's generator (linearly independent)
    rng = random.Random(9)
    for _ in range(25):
        k = rng.randint(1, 10)
        n = rng.randint(max(k, 2), 24)
        rows = _independent_rows(rng, k, n)
        counts = _oracle_weights(rows, n)
        assert impl.weight_counts(rows, n) == counts
        expected_min = next(i for i in range(1, n + 1) if counts[i])
        assert impl.min_nonzero_weight(rows, n) == expected_min


def test_py_chunked_path_matches_small_path():
    # force the k > 18 chunked branch of the fallback
    rng = random.Random(4)
    rows = [rng.getrandbits(24) for _ in range(20)]
    counts = _py.weight_counts(rows, 24)
    assert sum(counts) == 1 << 20
    minw = _py.min_nonzero_weight(rows, 24)
    assert minw == next(i for i in range(1, 25) if counts[i])
    if _ext is not None:
        assert counts == _ext.weight_counts(rows, 24)
        assert minw == _ext.min_nonzero_weight(rows, 24)


@backends
def test_gl_enumeration_counts(impl):
    for n in range(1, 5):
        mats = impl.gl_matrices(n)
        assert len(mats) == gl2_order(n)
        assert len(np.unique(mats)) == len(mats)


@pytest.mark.skipif(_ext is None, reason="extension not built")
def test_gl_backends_agree():
    for n in range(1, 5):
        assert np.array_equal(
            np.sort(_ext.gl_matrices(n)), np.sort(_py.gl_matrices(n))
        )


@pytest.mark.skipif(_ext is None, reason="extension not built")
def test_dc_canon_backends_agree():
    for n in (2, 3, 4):
        mats = _ext.gl_matrices(n)
        pt = kernels.perm_tables(n)
        assert np.array_equal(
            _ext.dc_canon_batch(mats, n, pt), _py.dc_canon_batch(mats, n, pt)
        )


@backends
def test_dc_canon_is_invariant_and_idempotent(impl):
    rng = random.Random(17)
    pt = kernels.perm_tables(4)
    perms = list(__import__("itertools").permutations(range(4)))
    for _ in range(100):
        rows = [rng.getrandbits(4) for _ in range(4)]
        packed = sum(r << (4 * i) for i, r in enumerate(rows))
        canon = int(impl.dc_canon_batch(np.array([packed], dtype=np.uint64), 4, pt)[0])
        # canon of the canon is itself
        again = int(impl.dc_canon_batch(np.array([canon], dtype=np.uint64), 4, pt)[0])
        assert again == canon
        # any row/column permutation has the same canon
        rp = list(range(4))
        rng.shuffle(rp)
        cperm = perms[rng.randrange(len(perms))]
        prows = [
            sum(((rows[rp[i]] >> cperm[j]) & 1) << j for j in range(4))
            for i in range(4)
        ]
        ppacked = sum(r << (4 * i) for i, r in enumerate(prows))
        assert (
            int(impl.dc_canon_batch(np.array([ppacked], dtype=np.uint64), 4, pt)[0])
            == canon
        )
