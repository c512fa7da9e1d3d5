"""Canonical forms of binary codes under column permutation.

Two codes of the same length are equivalent iff one is a column permutation
of the other (over GF(2) there are no nontrivial field automorphisms, so the
S_n action is the whole story).  A full permutation sweep is infeasible even
at length 12, so the canonical form is computed by a backtracking search over
column orders with two prunings:

- columns are pre-colored by equivalence-invariant signatures (incidence
  counts per codeword-weight class, refined by pairwise coincidence counts),
  and the search never places a column before one of smaller color;
- at each depth the candidate columns are compared by how they split the
  current codeword groups, and only globally lexicographically-minimal
  branches survive.

The canonical invariant is the resulting split-signature sequence; it pins
down the multiset of codewords of the permuted code exactly, so equal
sequences mean equivalent codes and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codes import LinearCode
from .errors import TooLargeError
from .gf2 import BitMatrix

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_key",
    "are_equivalent",
    "is_isodual_hint",
]

_MAX_LENGTH = 24
_MAX_DIM = 12


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative of a code's column-permutation class."""

    key: tuple[int, ...]
    # original column placed at position p of the canonical code
    column_order: tuple[int, ...]
    generator: BitMatrix

    def words(self) -> tuple[int, ...]:
        """Canonical codewords (bit j = coordinate j), sorted ascending."""
        out = [0]
        for r in self.generator.rows:
            out += [w ^ r for w in out]
        return tuple(sorted(out))


def _column_colors(words: Sequence[int], colmasks: Sequence[int], n: int) -> list[int]:
    """Equivalence-invariant column coloring.

    Starts from per-weight-class incidence counts and refines with pairwise
    per-weight-class coincidence counts until stable.
    """
    weights = {}
    for idx, w in enumerate(words):
        weights.setdefault(w.bit_count(), 0)
        weights[w.bit_count()] |= 1 << idx
    wmasks = [weights[w] for w in sorted(weights)]

    sigs = [
        tuple((colmasks[j] & m).bit_count() for m in wmasks) for j in range(n)
    ]
    colors = _rank(sigs)
    for _ in range(n):
        if len(set(colors)) == n:
            break
        refined = []
        for j in range(n):
            around = sorted(
                (
                    colors[l],
                    tuple(
                        (colmasks[j] & colmasks[l] & m).bit_count() for m in wmasks
                    ),
                )
                for l in range(n)
                if l != j
            )
            refined.append((colors[j], tuple(around)))
        new = _rank(refined)
        if new == colors:
            break
        colors = new
    return colors


def _rank(sigs: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _search(colmasks: list[int], colors: list[int], n: int):
    """Return the lexicographically-minimal column order.

    States carry the ordered codeword partition as bitmasks over word
    indices; the signature of a candidate column is (color, per-group
    one-counts), and the global minimum over all orders is found by
    branch-and-bound with the best signature sequence as the bound.
    """
    nwords_mask = (1 << max(m.bit_length() for m in colmasks)) - 1 if colmasks else 0
    best_sigs: list = [None] * n
    best_cols: list[int] | None = None

    def consider_leafless(seq_sigs, seq_cols, depth) -> None:
        # adopt `seq` (sigs from `depth` on) if it beats or completes best
        nonlocal best_cols
        for t, sig in enumerate(seq_sigs):
            b = best_sigs[depth + t]
            if b is None or sig < b:
                for u in range(t, len(seq_sigs)):
                    best_sigs[depth + u] = seq_sigs[u]
                best_cols = seq_cols
                return
            if sig > b:
                return
        if best_cols is None:
            best_cols = seq_cols

    def dfs(groups: list[int], remaining: list[int], path: list[int]) -> None:
        nonlocal best_cols
        depth = len(path)
        if not remaining:
            if best_cols is None:
                best_cols = path[:]
            return
        if all(g & (g - 1) == 0 for g in groups):
            # all groups are singletons: the rest of the signature sequence
            # is each column's bit pattern; greedy sorted completion is exact
            items = sorted(
                (
                    (colors[c], tuple(1 if colmasks[c] & g else 0 for g in groups)),
                    c,
                )
                for c in remaining
            )
            consider_leafless(
                [sig for sig, _ in items], path + [c for _, c in items], depth
            )
            return

        cands = []
        for c in remaining:
            sig = (
                colors[c],
                tuple((colmasks[c] & g).bit_count() for g in groups),
            )
            cands.append((sig, c))
        m = min(sig for sig, _ in cands)

        b = best_sigs[depth]
        if b is not None:
            if m > b:
                return
            if m < b:
                for u in range(depth, n):
                    best_sigs[u] = None
                best_cols = None
        best_sigs[depth] = m

        seen_patterns = set()
        for sig, c in cands:
            if sig != m:
                continue
            cm = colmasks[c]
            if cm in seen_patterns:
                continue  # identical columns lead to identical subtrees
            seen_patterns.add(cm)
            new_groups = []
            for g in groups:
                g1 = g & cm
                g0 = g ^ g1
                if g0:
                    new_groups.append(g0)
                if g1:
                    new_groups.append(g1)
            dfs(new_groups, [x for x in remaining if x != c], path + [c])

    dfs([nwords_mask], list(range(n)), [])
    assert best_cols is not None
    return best_cols


def canonical_form(code: LinearCode) -> CanonicalForm:
    """Canonical representative, invariant under any column permutation."""
    n = code.length
    if n > _MAX_LENGTH or code.dimension > _MAX_DIM:
        raise TooLargeError(
            f"canonical form limited to length {_MAX_LENGTH}, dimension {_MAX_DIM}"
        )
    words = code.codeword_bits()
    colmasks = []
    for j in range(n):
        m = 0
        for idx, w in enumerate(words):
            m |= ((w >> j) & 1) << idx
        colmasks.append(m)
    colors = _column_colors(words, colmasks, n)
    cols = _search(colmasks, colors, n)

    permuted = [
        sum(((w >> c) & 1) << p for p, c in enumerate(cols)) for w in words
    ]
    # key reads position 0 as most significant so it matches the group order
    key = tuple(
        sorted(sum(((w >> p) & 1) << (n - 1 - p) for p in range(n)) for w in permuted)
    )
    gen = BitMatrix(len(permuted), n, permuted).rref()[0]
    gen = BitMatrix(code.dimension, n, gen.rows[: code.dimension])
    return CanonicalForm(key=key, column_order=tuple(cols), generator=gen)


def canonical_key(code: LinearCode) -> tuple[int, ...]:
    return canonical_form(code).key


def are_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """True iff the codes differ by a column permutation."""
    if c1.length != c2.length or c1.dimension != c2.dimension:
        return False
    return canonical_key(c1) == canonical_key(c2)


def is_isodual_hint(code: LinearCode) -> bool:
    """True iff the code is permutation-equivalent to its dual.

    Decided through canonical forms, so it inherits their small-length
    budget; hence a hint rather than a general-purpose test.
    """
    if code.length != 2 * code.dimension:
        return False
    return are_equivalent(code, code.dual_code())
