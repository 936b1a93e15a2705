"""Minimum-weight dominating sets of convex-position disk graphs.

The solver grows per-point tables of candidates level by level.  A
candidate pairs a contiguous run of hull indices with a witness set that
dominates the run and a value bounding the witness weight.  Level t
candidates for point i are built three ways:

* counterclockwise: a run from i's own level-t' bucket, extended by the
  cheapest run from the previous global level starting just past it, plus
  the stretch after that which disk i dominates by itself;
* clockwise: the mirror image;
* bidirectional: one run from i's bucket in each direction, meeting at i,
  with i's weight counted once.

Instead of re-querying the enclosing-run index for every scan position,
each driver jumps straight to the positions where the answer changes
(the answer is constant while the query stays inside it), enumerating
exactly the distinct query results.  A full-circle candidate of minimum
value over all levels yields the answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .geometry import (
    CyclicSublist,
    Instance,
    full_sublist,
    intersects,
    offset_ccw,
    run_between,
    union_extend,
)
from .neighbor_index import INTERSECTS_ALL, build_neighbor_index
from .solution import Infeasible, InvalidK, Solution
from .sublist_queries import MinEnclosingIndex, ValuedSublist

VALUE_SLACK = 1e-9  # tolerance of the witness-weight debug assertion


@dataclass(frozen=True)
class Candidate:
    """A run `sub` dominated by `witnesses`, costing at most `value`."""

    sub: CyclicSublist
    value: float
    witnesses: frozenset[int]
    owner: int
    level: int


def make_validator(instance: Instance) -> Callable[[Candidate], None]:
    """Debug checks run on every inserted candidate."""
    disks = instance.disks

    def validate(cand: Candidate) -> None:
        assert cand.owner in cand.witnesses
        assert len(cand.witnesses) <= cand.level
        total = math.fsum(disks[w].weight for w in sorted(cand.witnesses))
        assert total <= cand.value + VALUE_SLACK * max(1.0, abs(cand.value))
        for idx in cand.sub.indices():
            assert any(intersects(disks[idx], disks[w]) for w in cand.witnesses)

    return validate


class LevelTable:
    """All candidates of one level, bucketed by owning point.

    Mutable until `freeze()`, which assigns candidate ids (bucket order,
    then insertion order) and builds the per-bucket and global
    minimum-value enclosing-run indexes.  Frozen tables never change, so
    later levels can query them and cache scan chains against them.
    """

    def __init__(
        self,
        instance: Instance,
        nbr,
        level: int,
        *,
        indexed: bool = True,
        prune: bool = True,
        validator: Optional[Callable[[Candidate], None]] = None,
    ):
        self.instance = instance
        self.nbr = nbr
        self.level = level
        self.indexed = indexed
        self.prune = prune
        self.validator = validator
        self.frozen = False
        self.buckets: list[list[Candidate]] = [[] for _ in range(instance.n)]
        self._slot = [dict() for _ in range(instance.n)]  # sub -> bucket position
        self._bucket_idx: list[MinEnclosingIndex] = []
        self._global_idx: Optional[MinEnclosingIndex] = None
        self._by_id: list[Candidate] = []
        self._bucket_chain_ccw: dict[int, list[Candidate]] = {}
        self._bucket_chain_cw: dict[int, list[Candidate]] = {}
        self._global_chain_ccw: dict[int, list[Candidate]] = {}
        self._global_chain_cw: dict[int, list[Candidate]] = {}

    def insert(self, i: int, cand: Candidate) -> None:
        assert not self.frozen, "level is frozen"
        if self.validator is not None:
            self.validator(cand)
        bucket = self.buckets[i]
        if not self.prune:
            bucket.append(cand)
            return
        pos = self._slot[i].get(cand.sub)
        if pos is None:
            self._slot[i][cand.sub] = len(bucket)
            bucket.append(cand)
        elif cand.value < bucket[pos].value:
            bucket[pos] = cand

    def freeze(self) -> None:
        n = self.instance.n
        per_bucket: list[list[ValuedSublist]] = []
        all_items: list[ValuedSublist] = []
        for i in range(n):
            items = []
            for cand in self.buckets[i]:
                vs = ValuedSublist(sub=cand.sub, value=cand.value, id=len(self._by_id))
                self._by_id.append(cand)
                items.append(vs)
            per_bucket.append(items)
            all_items.extend(items)
        self._bucket_idx = [
            MinEnclosingIndex(items, n, indexed=self.indexed) for items in per_bucket
        ]
        self._global_idx = MinEnclosingIndex(all_items, n, indexed=self.indexed)
        self.frozen = True

    def all_candidates(self) -> Sequence[Candidate]:
        assert self.frozen
        return self._by_id

    def bucket_min_enclosing(self, i: int, q: CyclicSublist) -> Optional[Candidate]:
        """Cheapest candidate of bucket i whose run contains q."""
        assert self.frozen
        hit = self._bucket_idx[i].min_enclosing(q)
        return None if hit is None else self._by_id[hit.id]

    def global_min_enclosing(self, q: CyclicSublist) -> Optional[Candidate]:
        """Cheapest candidate of the whole level whose run contains q."""
        assert self.frozen
        hit = self._global_idx.min_enclosing(q)
        return None if hit is None else self._by_id[hit.id]

    # -- distinct-answer scan chains ------------------------------------

    def _chain_ccw(self, query, anchor: int) -> list[Candidate]:
        n = self.instance.n
        out = []
        q = 1
        while q <= n:
            ans = query(CyclicSublist(anchor, q, n))
            if ans is None:
                break
            out.append(ans)
            if ans.sub.is_full:
                break
            q = offset_ccw(anchor, ans.sub.ccw_end, n) + 2
        return out

    def _chain_cw(self, query, anchor: int) -> list[Candidate]:
        n = self.instance.n
        out = []
        q = 1
        while q <= n:
            ans = query(CyclicSublist((anchor - q + 1) % n, q, n))
            if ans is None:
                break
            out.append(ans)
            if ans.sub.is_full:
                break
            q = offset_ccw(ans.sub.cw_end, anchor, n) + 2
        return out

    def bucket_chain_ccw(self, i: int) -> list[Candidate]:
        """Distinct bucket-i answers for queries growing ccw from i."""
        if i not in self._bucket_chain_ccw:
            self._bucket_chain_ccw[i] = self._chain_ccw(
                lambda q: self.bucket_min_enclosing(i, q), i
            )
        return self._bucket_chain_ccw[i]

    def bucket_chain_cw(self, i: int) -> list[Candidate]:
        if i not in self._bucket_chain_cw:
            self._bucket_chain_cw[i] = self._chain_cw(
                lambda q: self.bucket_min_enclosing(i, q), i
            )
        return self._bucket_chain_cw[i]

    def global_chain_ccw(self, start: int) -> list[Candidate]:
        """Distinct global answers for queries growing ccw from `start`."""
        if start not in self._global_chain_ccw:
            self._global_chain_ccw[start] = self._chain_ccw(
                self.global_min_enclosing, start
            )
        return self._global_chain_ccw[start]

    def global_chain_cw(self, end: int) -> list[Candidate]:
        if end not in self._global_chain_cw:
            self._global_chain_cw[end] = self._chain_cw(
                self.global_min_enclosing, end
            )
        return self._global_chain_cw[end]


def init_level_one(
    instance: Instance,
    nbr,
    *,
    indexed: bool = True,
    prune: bool = True,
    validator=None,
) -> LevelTable:
    """One candidate per point: its own dominated run at its own weight."""
    table = LevelTable(
        instance, nbr, 1, indexed=indexed, prune=prune, validator=validator
    )
    for i in range(instance.n):
        table.insert(
            i,
            Candidate(
                sub=nbr.dominated_run(i),
                value=instance.disks[i].weight,
                witnesses=frozenset((i,)),
                owner=i,
                level=1,
            ),
        )
    table.freeze()
    return table


def _ccw_tail(nbr, i: int, z2: int, n: int) -> CyclicSublist:
    a = nbr.first_disjoint_ccw(i, (z2 + 1) % n)
    if a is INTERSECTS_ALL:
        return full_sublist(n)
    return run_between(z2, a, n)


def _cw_tail(nbr, i: int, z2: int, n: int) -> CyclicSublist:
    b = nbr.first_disjoint_cw(i, (z2 - 1) % n)
    if b is INTERSECTS_ALL:
        return full_sublist(n)
    return run_between(b, z2, n)


def ccw_processing(
    levels: Sequence[Optional[LevelTable]], i: int, j: int, t: int
) -> Optional[Candidate]:
    """Best level-t candidate for i from counterclockwise scans bounded by j.

    Scans every split level t' and every scan stop z between i and j;
    returns the minimum-value combination (ties to the earliest (t', z)),
    or None when every combination failed an enclosing query.
    """
    assert t >= 2
    table1 = levels[1]
    instance, nbr = table1.instance, table1.nbr
    n = instance.n
    dom = nbr.dominated_run(i)
    best: Optional[Candidate] = None
    for tp in range(1, t):
        for dz in range(offset_ccw(i, j, n) + 1):
            z_run = CyclicSublist(i, dz + 1, n)
            l1 = levels[tp].bucket_min_enclosing(i, z_run)
            if l1 is None:
                continue
            if l1.sub.is_full:
                cand = Candidate(l1.sub, l1.value, l1.witnesses, i, t)
            else:
                z1 = l1.sub.ccw_end
                len2 = offset_ccw((z1 + 1) % n, j, n) + 1
                l2 = levels[t - tp].global_min_enclosing(
                    CyclicSublist((z1 + 1) % n, len2, n)
                )
                if l2 is None:
                    continue
                if l2.sub.is_full:
                    sub = full_sublist(n)
                else:
                    tail = _ccw_tail(nbr, i, l2.sub.ccw_end, n)
                    sub = union_extend([dom, l1.sub, l2.sub, tail])
                cand = Candidate(
                    sub, l1.value + l2.value, l1.witnesses | l2.witnesses, i, t
                )
            if best is None or cand.value < best.value:
                best = cand
    return best


def cw_processing(
    levels: Sequence[Optional[LevelTable]], i: int, j: int, t: int
) -> Optional[Candidate]:
    """Mirror of ccw_processing: clockwise scans bounded by j."""
    assert t >= 2
    table1 = levels[1]
    instance, nbr = table1.instance, table1.nbr
    n = instance.n
    dom = nbr.dominated_run(i)
    best: Optional[Candidate] = None
    for tp in range(1, t):
        for dz in range(offset_ccw(j, i, n) + 1):
            z_run = CyclicSublist((i - dz) % n, dz + 1, n)
            l1 = levels[tp].bucket_min_enclosing(i, z_run)
            if l1 is None:
                continue
            if l1.sub.is_full:
                cand = Candidate(l1.sub, l1.value, l1.witnesses, i, t)
            else:
                z1 = l1.sub.cw_end
                len2 = offset_ccw(j, (z1 - 1) % n, n) + 1
                l2 = levels[t - tp].global_min_enclosing(
                    CyclicSublist(j, len2, n)
                )
                if l2 is None:
                    continue
                if l2.sub.is_full:
                    sub = full_sublist(n)
                else:
                    tail = _cw_tail(nbr, i, l2.sub.cw_end, n)
                    sub = union_extend([dom, l1.sub, l2.sub, tail])
                cand = Candidate(
                    sub, l1.value + l2.value, l1.witnesses | l2.witnesses, i, t
                )
            if best is None or cand.value < best.value:
                best = cand
    return best


def bidirectional_processing(
    levels: Sequence[Optional[LevelTable]], i: int, x: int, y: int, t: int
) -> Optional[Candidate]:
    """Best candidate stitching a ccw run toward x and a cw run toward y at i."""
    table1 = levels[1]
    instance, nbr = table1.instance, table1.nbr
    n = instance.n
    dom = nbr.dominated_run(i)
    wi = instance.disks[i].weight
    best: Optional[Candidate] = None
    for tp in range(2, t):
        lx = levels[tp].bucket_min_enclosing(
            i, CyclicSublist(i, offset_ccw(i, x, n) + 1, n)
        )
        if lx is None:
            continue
        ly = levels[t + 1 - tp].bucket_min_enclosing(
            i, CyclicSublist(y, offset_ccw(y, i, n) + 1, n)
        )
        if ly is None:
            continue
        cand = Candidate(
            union_extend([dom, lx.sub, ly.sub]),
            lx.value + ly.value - wi,
            lx.witnesses | ly.witnesses,
            i,
            t,
        )
        if best is None or cand.value < best.value:
            best = cand
    return best


def _ccw_combos(levels, table: LevelTable, i: int, t: int) -> None:
    nbr = table.nbr
    n = table.instance.n
    dom = nbr.dominated_run(i)
    for tp in range(1, t):
        other = levels[t - tp]
        for l1 in levels[tp].bucket_chain_ccw(i):
            if l1.sub.is_full:
                table.insert(i, Candidate(l1.sub, l1.value, l1.witnesses, i, t))
                continue
            z1 = l1.sub.ccw_end
            for l2 in other.global_chain_ccw((z1 + 1) % n):
                if l2.sub.is_full:
                    sub = full_sublist(n)
                else:
                    tail = _ccw_tail(nbr, i, l2.sub.ccw_end, n)
                    sub = union_extend([dom, l1.sub, l2.sub, tail])
                table.insert(
                    i,
                    Candidate(
                        sub, l1.value + l2.value, l1.witnesses | l2.witnesses, i, t
                    ),
                )


def _cw_combos(levels, table: LevelTable, i: int, t: int) -> None:
    nbr = table.nbr
    n = table.instance.n
    dom = nbr.dominated_run(i)
    for tp in range(1, t):
        other = levels[t - tp]
        for l1 in levels[tp].bucket_chain_cw(i):
            if l1.sub.is_full:
                table.insert(i, Candidate(l1.sub, l1.value, l1.witnesses, i, t))
                continue
            z1 = l1.sub.cw_end
            for l2 in other.global_chain_cw((z1 - 1) % n):
                if l2.sub.is_full:
                    sub = full_sublist(n)
                else:
                    tail = _cw_tail(nbr, i, l2.sub.cw_end, n)
                    sub = union_extend([dom, l1.sub, l2.sub, tail])
                table.insert(
                    i,
                    Candidate(
                        sub, l1.value + l2.value, l1.witnesses | l2.witnesses, i, t
                    ),
                )


def _bidi_combos(levels, table: LevelTable, i: int, t: int) -> None:
    nbr = table.nbr
    dom = nbr.dominated_run(i)
    wi = table.instance.disks[i].weight
    for tp in range(2, t):
        other = levels[t + 1 - tp]
        for lx in levels[tp].bucket_chain_ccw(i):
            for ly in other.bucket_chain_cw(i):
                table.insert(
                    i,
                    Candidate(
                        union_extend([dom, lx.sub, ly.sub]),
                        lx.value + ly.value - wi,
                        lx.witnesses | ly.witnesses,
                        i,
                        t,
                    ),
                )


def _check_k(instance: Instance, k) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise InvalidK(f"k must be an integer, got {k!r}")
    if not 1 <= k <= instance.n:
        raise InvalidK(f"k must be in [1, {instance.n}], got {k}")


def solve_weighted(
    instance: Instance,
    k: int,
    *,
    neighbor_strategy: str = "bitset",
    indexed_queries: bool = True,
    prune: bool = True,
    check_invariants: bool = False,
    _include_bidirectional: bool = True,
) -> Solution:
    """Minimum-weight dominating set of size at most k, or Infeasible.

    Deterministic for fixed inputs and flags.  `indexed_queries=False`
    swaps every enclosing-run index for its plain-scan twin and
    `prune=False` disables same-run bucket deduplication; both exist for
    equivalence testing and change nothing about the result's weight.
    `_include_bidirectional=False` drops the stitched candidates and
    exists only so tests can demonstrate they are load-bearing.
    """
    _check_k(instance, k)
    n = instance.n
    nbr = build_neighbor_index(instance, neighbor_strategy)
    validator = make_validator(instance) if check_invariants else None
    levels: list[Optional[LevelTable]] = [
        None,
        init_level_one(
            instance, nbr, indexed=indexed_queries, prune=prune, validator=validator
        ),
    ]
    for t in range(2, k + 1):
        table = LevelTable(
            instance, nbr, t, indexed=indexed_queries, prune=prune, validator=validator
        )
        for i in range(n):
            _ccw_combos(levels, table, i, t)
            _cw_combos(levels, table, i, t)
            if _include_bidirectional:
                _bidi_combos(levels, table, i, t)
        table.freeze()
        levels.append(table)
    best: Optional[Candidate] = None
    for t in range(1, k + 1):
        for cand in levels[t].all_candidates():
            if cand.sub.is_full and (best is None or cand.value < best.value):
                best = cand
    if best is None:
        raise Infeasible(k)
    chosen = sorted(best.witnesses)
    weight = 0.0
    for c in chosen:
        weight += instance.disks[c].weight
    return Solution(
        centers=tuple(sorted(instance.to_original(chosen))),
        weight=weight,
        size=len(chosen),
        mode="weighted",
    )


def solve_weighted_unbounded(instance: Instance, **kwargs) -> Solution:
    """Minimum-weight dominating set with no size bound (k = n is always feasible)."""
    return solve_weighted(instance, instance.n, **kwargs)
