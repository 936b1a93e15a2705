"""Smallest dominating sets of convex-position disk graphs.

Same level structure as the weighted solver, but cardinality replaces
weight, so each step can be greedy: per direction and split level it keeps
only the candidate reaching farthest around the circle, which caps every
bucket at O(level) entries.  The first level that produces a full-circle
candidate ends the search; that candidate's witnesses are a smallest
dominating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .geometry import (
    CyclicSublist,
    Instance,
    full_sublist,
    intersects,
    offset_ccw,
    union_extend,
)
from .neighbor_index import build_neighbor_index
from .solution import Infeasible, InvalidK, Solution
from .sublist_queries import FarthestEnclosingIndex, ValuedSublist
from .weighted_dp import _ccw_tail, _cw_tail


@dataclass(frozen=True)
class GreedyCandidate:
    """A run `sub` through `owner`, dominated by `witnesses`."""

    sub: CyclicSublist
    witnesses: frozenset[int]
    owner: int
    level: int


def make_greedy_validator(instance: Instance) -> Callable[[GreedyCandidate], None]:
    disks = instance.disks

    def validate(cand: GreedyCandidate) -> None:
        assert cand.owner in cand.witnesses
        assert cand.owner in cand.sub
        assert len(cand.witnesses) <= cand.level
        for idx in cand.sub.indices():
            assert any(intersects(disks[idx], disks[w]) for w in cand.witnesses)

    return validate


def reach_ccw(sub: CyclicSublist, i: int, n: int) -> int:
    return n if sub.is_full else offset_ccw(i, sub.ccw_end, n)


def reach_cw(sub: CyclicSublist, i: int, n: int) -> int:
    return n if sub.is_full else offset_ccw(sub.cw_end, i, n)


class GreedyLevel:
    """One level's candidates with cached per-point directional extremes.

    The extremes (farthest-reaching candidate each way around from the
    owning point) are maintained on insertion, so later levels read them
    in O(1); `freeze()` builds the global farthest-enclosing index and
    records the first full candidate, if any.
    """

    def __init__(
        self,
        instance: Instance,
        nbr,
        level: int,
        *,
        indexed: bool = True,
        validator: Optional[Callable[[GreedyCandidate], None]] = None,
    ):
        self.instance = instance
        self.nbr = nbr
        self.level = level
        self.indexed = indexed
        self.validator = validator
        self.frozen = False
        n = instance.n
        self.buckets: list[list[GreedyCandidate]] = [[] for _ in range(n)]
        self._ext_ccw: list[Optional[GreedyCandidate]] = [None] * n
        self._ext_cw: list[Optional[GreedyCandidate]] = [None] * n
        self._reach_ccw = [-1] * n
        self._reach_cw = [-1] * n
        self.full_candidate: Optional[GreedyCandidate] = None
        self._far_idx: Optional[FarthestEnclosingIndex] = None
        self._by_id: list[GreedyCandidate] = []

    def insert(self, i: int, cand: GreedyCandidate) -> None:
        assert not self.frozen, "level is frozen"
        if self.validator is not None:
            self.validator(cand)
        self.buckets[i].append(cand)
        n = self.instance.n
        r = reach_ccw(cand.sub, i, n)
        if r > self._reach_ccw[i]:
            self._reach_ccw[i], self._ext_ccw[i] = r, cand
        r = reach_cw(cand.sub, i, n)
        if r > self._reach_cw[i]:
            self._reach_cw[i], self._ext_cw[i] = r, cand
        if cand.sub.is_full and self.full_candidate is None:
            self.full_candidate = cand

    def freeze(self) -> None:
        n = self.instance.n
        items = []
        for bucket in self.buckets:
            for cand in bucket:
                items.append(
                    ValuedSublist(sub=cand.sub, value=0.0, id=len(self._by_id))
                )
                self._by_id.append(cand)
        self._far_idx = FarthestEnclosingIndex(items, n, indexed=self.indexed)
        if self.validator is not None:
            self._check_extremes()
        self.frozen = True

    def _check_extremes(self) -> None:
        n = self.instance.n
        for i, bucket in enumerate(self.buckets):
            for f, reach in ((self._ext_ccw[i], reach_ccw), (self._ext_cw[i], reach_cw)):
                best = max((reach(c.sub, i, n) for c in bucket), default=-1)
                got = -1 if f is None else reach(f.sub, i, n)
                assert got == best

    def all_candidates(self) -> Sequence[GreedyCandidate]:
        assert self.frozen
        return self._by_id

    def extreme_ccw(self, i: int) -> Optional[GreedyCandidate]:
        return self._ext_ccw[i]

    def extreme_cw(self, i: int) -> Optional[GreedyCandidate]:
        return self._ext_cw[i]

    def global_farthest_ccw(self, j: int) -> Optional[GreedyCandidate]:
        assert self.frozen
        hit = self._far_idx.farthest_ccw(j)
        return None if hit is None else self._by_id[hit.id]

    def global_farthest_cw(self, j: int) -> Optional[GreedyCandidate]:
        assert self.frozen
        hit = self._far_idx.farthest_cw(j)
        return None if hit is None else self._by_id[hit.id]


def greedy_ccw_step(
    levels: Sequence[Optional[GreedyLevel]], i: int, t: int
) -> Optional[GreedyCandidate]:
    """Farthest-reaching counterclockwise extension of i's cached extremes.

    One candidate per split level t' is formed (own extreme, then the
    globally farthest run past its end, then the stretch disk i dominates
    beyond that); the one reaching farthest counterclockwise from i wins,
    ties to the smaller t'.
    """
    assert t >= 2
    table1 = levels[1]
    nbr, n = table1.nbr, table1.instance.n
    dom = nbr.dominated_run(i)
    best = None
    best_reach = -1
    for tp in range(1, t):
        l1 = levels[tp].extreme_ccw(i)
        if l1 is None:
            continue
        if l1.sub.is_full:
            cand = GreedyCandidate(l1.sub, l1.witnesses, i, t)
        else:
            l2 = levels[t - tp].global_farthest_ccw((l1.sub.ccw_end + 1) % n)
            if l2 is None:
                continue
            if l2.sub.is_full:
                sub = full_sublist(n)
            else:
                tail = _ccw_tail(nbr, i, l2.sub.ccw_end, n)
                sub = union_extend([dom, l1.sub, l2.sub, tail])
            cand = GreedyCandidate(sub, l1.witnesses | l2.witnesses, i, t)
        r = reach_ccw(cand.sub, i, n)
        if r > best_reach:
            best, best_reach = cand, r
    return best


def greedy_cw_step(
    levels: Sequence[Optional[GreedyLevel]], i: int, t: int
) -> Optional[GreedyCandidate]:
    """Mirror of greedy_ccw_step."""
    assert t >= 2
    table1 = levels[1]
    nbr, n = table1.nbr, table1.instance.n
    dom = nbr.dominated_run(i)
    best = None
    best_reach = -1
    for tp in range(1, t):
        l1 = levels[tp].extreme_cw(i)
        if l1 is None:
            continue
        if l1.sub.is_full:
            cand = GreedyCandidate(l1.sub, l1.witnesses, i, t)
        else:
            l2 = levels[t - tp].global_farthest_cw((l1.sub.cw_end - 1) % n)
            if l2 is None:
                continue
            if l2.sub.is_full:
                sub = full_sublist(n)
            else:
                tail = _cw_tail(nbr, i, l2.sub.cw_end, n)
                sub = union_extend([dom, l1.sub, l2.sub, tail])
            cand = GreedyCandidate(sub, l1.witnesses | l2.witnesses, i, t)
        r = reach_cw(cand.sub, i, n)
        if r > best_reach:
            best, best_reach = cand, r
    return best


def greedy_bidirectional_step(
    levels: Sequence[Optional[GreedyLevel]], i: int, t: int
) -> list[GreedyCandidate]:
    """One stitched candidate per split level: ccw and cw extremes joined at i."""
    table1 = levels[1]
    nbr = table1.nbr
    dom = nbr.dominated_run(i)
    out = []
    for tp in range(2, t):
        lx = levels[tp].extreme_ccw(i)
        ly = levels[t + 1 - tp].extreme_cw(i)
        if lx is None or ly is None:
            continue
        out.append(
            GreedyCandidate(
                union_extend([dom, lx.sub, ly.sub]),
                lx.witnesses | ly.witnesses,
                i,
                t,
            )
        )
    return out


def solve_unweighted(
    instance: Instance,
    k_cap: Optional[int] = None,
    *,
    neighbor_strategy: str = "bitset",
    indexed_queries: bool = True,
    check_invariants: bool = False,
    _include_bidirectional: bool = True,
) -> Solution:
    """Smallest dominating set; Infeasible only when k_cap cuts the search off.

    `_include_bidirectional=False` drops the stitched candidates so tests
    can compare the variant; only the full table carries the guarantee
    that the first level holding a full candidate equals the optimum.
    """
    if k_cap is not None:
        if isinstance(k_cap, bool) or not isinstance(k_cap, int):
            raise InvalidK(f"k_cap must be an integer, got {k_cap!r}")
        if k_cap < 1:
            raise InvalidK(f"k_cap must be at least 1, got {k_cap}")
    n = instance.n
    nbr = build_neighbor_index(instance, neighbor_strategy)
    validator = make_greedy_validator(instance) if check_invariants else None
    levels: list[Optional[GreedyLevel]] = [None]
    t = 0
    while True:
        t += 1
        if k_cap is not None and t > k_cap:
            raise Infeasible(k_cap)
        assert t <= n, "no full candidate by level n"
        table = GreedyLevel(
            instance, nbr, t, indexed=indexed_queries, validator=validator
        )
        if t == 1:
            for i in range(n):
                table.insert(
                    i,
                    GreedyCandidate(
                        sub=nbr.dominated_run(i),
                        witnesses=frozenset((i,)),
                        owner=i,
                        level=1,
                    ),
                )
        else:
            for i in range(n):
                cand = greedy_ccw_step(levels, i, t)
                if cand is not None:
                    table.insert(i, cand)
                cand = greedy_cw_step(levels, i, t)
                if cand is not None:
                    table.insert(i, cand)
                if _include_bidirectional:
                    for cand in greedy_bidirectional_step(levels, i, t):
                        table.insert(i, cand)
        table.freeze()
        levels.append(table)
        if table.full_candidate is not None:
            winner = table.full_candidate
            if _include_bidirectional:
                # first full level equals the optimum cardinality
                assert len(winner.witnesses) == t
            chosen = sorted(winner.witnesses)
            weight = 0.0
            for c in chosen:
                weight += instance.disks[c].weight
            return Solution(
                centers=tuple(sorted(instance.to_original(chosen))),
                weight=weight,
                size=len(chosen),
                mode="unweighted",
            )
