"""Exact partition of a GF(2) column matroid into two disjoint bases.

This is the decision engine behind the general CIS test: a [2n,n] code has
two disjoint information sets iff the columns of a generator matrix can be
partitioned into two independent sets of size n.  The algorithm is Edmonds'
matroid partition, specialised to two copies of one vector matroid: place
elements one at a time; when an element does not fit directly, BFS the
exchange digraph (homeless element h entering side s evicts any member of its
fundamental circuit there) for a shortest augmenting sequence and apply the
swaps.  When the BFS exhausts, the reached elements T certify impossibility:
every element of T lies in the span of T's members on both sides, so
|T| > 2 rank(T), and no pair of disjoint independent sets can cover T.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

__all__ = ["PartitionWitness", "partition_into_two_bases"]


@dataclass(frozen=True)
class PartitionWitness:
    """Certificate that no partition into two bases exists."""

    columns: tuple[int, ...]
    rank: int

    def violates(self) -> bool:
        """The defining inequality |T| > 2 rank(T)."""
        return len(self.columns) > 2 * self.rank


def _rank_of(vectors: list[int], elems) -> int:
    reduced: list[int] = []
    for e in elems:
        u = vectors[e]
        for m in reduced:
            if u & (m & -m):
                u ^= m
        if u:
            reduced.append(u)
    return len(reduced)


def _tagged_elimination(vectors: list[int], members: list[int]):
    """Elimination basis of `members` carrying combination tags."""
    red: list[tuple[int, int]] = []
    for pos, e in enumerate(members):
        v = vectors[e]
        tag = 1 << pos
        for rv, rt in red:
            if v & (rv & -rv):
                v ^= rv
                tag ^= rt
        assert v, "side lost independence"
        red.append((v, tag))
    return red


def _express(red, v: int) -> tuple[int, int]:
    """Reduce v against the tagged basis; returns (residue, member tagset)."""
    tag = 0
    for rv, rt in red:
        if v & (rv & -rv):
            v ^= rv
            tag ^= rt
    return v, tag


def partition_into_two_bases(
    vectors: list[int],
) -> tuple[list[int], list[int]] | PartitionWitness:
    """Partition element indices into two independent sets covering all.

    ``vectors[e]`` is the GF(2) vector of element e, bit-packed.  Returns
    (left, right) sorted index lists, or a PartitionWitness when impossible.
    """
    n_elem = len(vectors)
    members: list[list[int]] = [[], []]
    seat = [-1] * n_elem

    for e0 in range(n_elem):
        if seat[e0] != -1:
            continue
        red = [_tagged_elimination(vectors, members[s]) for s in (0, 1)]
        parent: dict[int, tuple[int, int]] = {}
        queue = deque([e0])
        seen = {e0}
        goal = None
        while queue and goal is None:
            h = queue.popleft()
            for s in (0, 1):
                residue, tag = _express(red[s], vectors[h])
                if residue:
                    goal = (h, s)
                    break
                # h = sum of the tagged members: its fundamental circuit
                for pos in range(len(members[s])):
                    if (tag >> pos) & 1:
                        y = members[s][pos]
                        if y not in seen:
                            seen.add(y)
                            parent[y] = (h, s)
                            queue.append(y)
        if goal is None:
            cols = tuple(sorted(seen))
            witness = PartitionWitness(cols, _rank_of(vectors, cols))
            assert witness.violates(), "exhausted search without a valid witness"
            return witness

        # unwind: goal element enters its side; each predecessor takes the
        # seat its successor vacated
        moves = []
        cur, new_seat = goal
        while cur in parent:
            prev, prev_side = parent[cur]
            moves.append((cur, new_seat))
            cur, new_seat = prev, prev_side
        moves.append((cur, new_seat))  # cur == e0
        for elem, _ in moves:
            if seat[elem] != -1:
                members[seat[elem]].remove(elem)
        for elem, s in moves:
            members[s].append(elem)
            seat[elem] = s
        for s in (0, 1):
            assert _rank_of(vectors, members[s]) == len(members[s]), (
                "augmentation broke independence"
            )

    return sorted(members[0]), sorted(members[1])
