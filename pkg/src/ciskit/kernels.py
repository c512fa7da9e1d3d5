"""Backend dispatch for the hot kernels.

The compiled extension (``ciskit._ext``) is preferred; the numpy fallback
(``ciskit._kernels_py``) is selected when the extension is not built.  Set
``CISKIT_BACKEND=py`` or ``CISKIT_BACKEND=ext`` to force a backend.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

from . import _kernels_py

__all__ = [
    "BACKEND",
    "min_nonzero_weight",
    "weight_counts",
    "gl_matrices",
    "dc_canon_batch",
    "dc_canon",
    "perm_tables",
    "get_backend",
]

_requested = os.environ.get("CISKIT_BACKEND", "auto")
if _requested not in ("auto", "ext", "py"):
    raise RuntimeError(f"CISKIT_BACKEND must be auto/ext/py, got {_requested!r}")

_impl = None
if _requested in ("auto", "ext"):
    try:
        from . import _ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "ext":
            raise
if _impl is None:
    _impl = _kernels_py

BACKEND = "ext" if _impl is not _kernels_py else "py"


def get_backend(name: str = BACKEND):
    """Return the kernel module for ``name`` ('ext' or 'py')."""
    if name == "py":
        return _kernels_py
    if name == "ext":
        from . import _ext  # noqa: F811

        return _ext
    raise ValueError(name)


@lru_cache(maxsize=None)
def perm_tables(n: int) -> np.ndarray:
    """Row-remapping tables for every column permutation of an n-bit row.

    ``perm_tables(n)[p][r]`` is row ``r`` with bit ``j`` of the output taken
    from bit ``perm[j]`` of ``r``, for the ``p``-th permutation in
    ``itertools.permutations(range(n))`` order.
    """
    if not 1 <= n <= 7:
        raise ValueError("perm_tables supports 1 <= n <= 7")
    size = 1 << n
    perms = list(itertools.permutations(range(n)))
    table = np.zeros((len(perms), size), dtype=np.uint16)
    r = np.arange(size, dtype=np.uint16)
    for p, perm in enumerate(perms):
        acc = np.zeros(size, dtype=np.uint16)
        for j, src in enumerate(perm):
            acc |= ((r >> src) & 1) << j
        table[p] = acc
    return table


def min_nonzero_weight(rows, n: int) -> int:
    return _impl.min_nonzero_weight(list(rows), n)


def weight_counts(rows, n: int) -> list[int]:
    return _impl.weight_counts(list(rows), n)


def gl_matrices(n: int) -> np.ndarray:
    return _impl.gl_matrices(n)


def dc_canon_batch(mats, n: int) -> np.ndarray:
    """Row/column-permutation canonical form of packed square matrices."""
    mats = np.asarray(mats, dtype=np.uint64)
    return _impl.dc_canon_batch(mats, n, perm_tables(n))


def dc_canon(packed: int, n: int) -> int:
    """Canonical form of a single packed matrix."""
    return int(dc_canon_batch(np.array([packed], dtype=np.uint64), n)[0])
