"""Query structures over collections of valued cyclic runs.

Two query families serve the solvers:

* minimum-value enclosing run: among stored runs containing a query run,
  the one of smallest value;
* farthest enclosing run: among stored runs containing a single index,
  the one whose counterclockwise (or clockwise) endpoint reaches farthest.

Cyclic runs are unrolled onto the line [0, 2n): a run gets a copy at its
start and, when it wraps, a second copy shifted by -n, which turns
containment into the dominance condition ``start <= q_start and
end >= q_end``.  Full runs contain everything and are kept aside.  Every
index is immutable once built; ties always break toward the smallest item
id so solver runs are reproducible.  Each index also has a plain-scan
twin (``indexed=False``) that serves as the oracle in tests.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Optional, Sequence

from .geometry import CyclicSublist, offset_ccw


@dataclass(frozen=True)
class ValuedSublist:
    sub: CyclicSublist
    value: float
    id: int


def _check_items(items: Sequence[ValuedSublist], n: int):
    seen = set()
    for it in items:
        if it.sub.n != n:
            raise ValueError("item over wrong cycle size")
        if it.sub.is_empty:
            raise ValueError("empty runs cannot be stored")
        if it.id in seen:
            raise ValueError(f"duplicate item id {it.id}")
        seen.add(it.id)


class MinEnclosingIndex:
    """Minimum-value enclosing-run queries, O(log^2 m) when indexed.

    The indexed form keeps the unrolled copies sorted by start inside a
    static segment tree; each node stores its copies ordered by end with
    suffix-minimum (value, id) tables, so a query is a prefix walk plus
    one bisect per visited node.
    """

    def __init__(self, items: Sequence[ValuedSublist], n: int, *, indexed: bool = True):
        _check_items(items, n)
        self.n = n
        self.items = tuple(items)
        self.indexed = indexed
        self._by_id = {it.id: it for it in items}
        self._best_full = None
        for it in items:
            if it.sub.is_full:
                key = (it.value, it.id)
                if self._best_full is None or key < self._best_full:
                    self._best_full = key
        if indexed:
            self._build()

    def _build(self):
        n = self.n
        copies = []
        for it in self.items:
            if it.sub.is_full:
                continue
            s = it.sub.start
            e = s + it.sub.length - 1
            copies.append((s, e, it.value, it.id))
            if e - n >= 0:
                copies.append((s - n, e - n, it.value, it.id))
        copies.sort()
        self._starts = [c[0] for c in copies]
        size = 1
        while size < max(1, len(copies)):
            size <<= 1
        self._size = size
        ends: list[list] = [[] for _ in range(2 * size)]
        for idx, (s, e, v, i) in enumerate(copies):
            ends[size + idx] = [(e, v, i)]
        for node in range(size - 1, 0, -1):
            left, right = ends[2 * node], ends[2 * node + 1]
            merged = sorted(left + right)  # by end
            ends[node] = merged
        self._node_ends = []
        self._node_best = []
        for node_list in ends:
            es = [c[0] for c in node_list]
            best: list[tuple[float, int]] = [None] * len(node_list)
            run = None
            for k in range(len(node_list) - 1, -1, -1):
                key = (node_list[k][1], node_list[k][2])
                run = key if run is None or key < run else run
                best[k] = run
            self._node_ends.append(es)
            self._node_best.append(best)

    def min_enclosing(self, q: CyclicSublist) -> Optional[ValuedSublist]:
        """Smallest-value stored run containing q; ties to the smallest id."""
        if q.n != self.n:
            raise ValueError("query over wrong cycle size")
        if q.is_empty:
            raise ValueError("query run must be nonempty")
        if not self.indexed:
            return self._scan(q)
        best = self._best_full
        if not q.is_full and self._starts:
            qs = q.start
            qe = qs + q.length - 1
            pos = bisect_right(self._starts, qs)
            lo = self._size
            hi = self._size + pos
            while lo < hi:
                if lo & 1:
                    best = self._consider(lo, qe, best)
                    lo += 1
                if hi & 1:
                    hi -= 1
                    best = self._consider(hi, qe, best)
                lo >>= 1
                hi >>= 1
        return self._by_id[best[1]] if best is not None else None

    def _consider(self, node, qe, best):
        es = self._node_ends[node]
        k = bisect_left(es, qe)
        if k < len(es):
            cand = self._node_best[node][k]
            if best is None or cand < best:
                best = cand
        return best

    def _scan(self, q):
        best = None
        best_item = None
        for it in self.items:
            if it.sub.contains_sub(q):
                key = (it.value, it.id)
                if best is None or key < best:
                    best, best_item = key, it
        return best_item


class FarthestEnclosingIndex:
    """Farthest-reaching run through a single index, O(log m) when indexed.

    Reach of a stored run L from index j is ``offset_ccw(j, ccw_end(L))``
    for counterclockwise queries (mirrored for clockwise) and n for full
    runs, which therefore beat every partial run.
    """

    def __init__(self, items: Sequence[ValuedSublist], n: int, *, indexed: bool = True):
        _check_items(items, n)
        self.n = n
        self.items = tuple(items)
        self.indexed = indexed
        self._by_id = {it.id: it for it in items}
        self._full_id = None
        for it in items:
            if it.sub.is_full and (self._full_id is None or it.id < self._full_id):
                self._full_id = it.id
        if indexed:
            self._build()

    def _build(self):
        copies = []
        for it in self.items:
            if it.sub.is_full:
                continue
            s = it.sub.start
            copies.append((s, s + it.sub.length - 1, it.id))
        by_start = sorted(copies)
        self._starts = [c[0] for c in by_start]
        self._pref_far = []  # (max end, owning id) over the start-sorted prefix
        far = None
        for s, e, i in by_start:
            if far is None or e > far[0] or (e == far[0] and i < far[1]):
                far = (e, i)
            self._pref_far.append(far)
        by_end = sorted(copies, key=lambda c: (c[1], c[0], c[2]))
        self._ends = [c[1] for c in by_end]
        self._suf_near = [None] * len(by_end)  # (min start, owning id) over the suffix
        near = None
        for k in range(len(by_end) - 1, -1, -1):
            s, e, i = by_end[k]
            if near is None or s < near[0] or (s == near[0] and i < near[1]):
                near = (s, i)
            self._suf_near[k] = near

    def farthest_ccw(self, j: int) -> Optional[ValuedSublist]:
        """Stored run covering j with the farthest counterclockwise endpoint."""
        if not 0 <= j < self.n:
            raise ValueError("index out of range")
        if not self.indexed:
            return self._scan(j, ccw=True)
        if self._full_id is not None:
            return self._by_id[self._full_id]
        best = None  # (reach, id)
        for stab in (j, j + self.n):
            pos = bisect_right(self._starts, stab)
            if pos:
                e, i = self._pref_far[pos - 1]
                if e >= stab:
                    cand = (e - stab, i)
                    if best is None or cand[0] > best[0] or (
                        cand[0] == best[0] and cand[1] < best[1]
                    ):
                        best = cand
        return self._by_id[best[1]] if best else None

    def farthest_cw(self, j: int) -> Optional[ValuedSublist]:
        """Stored run covering j with the farthest clockwise endpoint."""
        if not 0 <= j < self.n:
            raise ValueError("index out of range")
        if not self.indexed:
            return self._scan(j, ccw=False)
        if self._full_id is not None:
            return self._by_id[self._full_id]
        best = None
        for stab in (j, j + self.n):
            k = bisect_left(self._ends, stab)
            if k < len(self._ends):
                s, i = self._suf_near[k]
                if s <= stab:
                    cand = (stab - s, i)
                    if best is None or cand[0] > best[0] or (
                        cand[0] == best[0] and cand[1] < best[1]
                    ):
                        best = cand
        return self._by_id[best[1]] if best else None

    def _scan(self, j, *, ccw):
        best = None
        best_item = None
        for it in self.items:
            if it.sub.is_full:
                reach = self.n
            elif j in it.sub:
                reach = (
                    offset_ccw(j, it.sub.ccw_end, self.n)
                    if ccw
                    else offset_ccw(it.sub.cw_end, j, self.n)
                )
            else:
                continue
            key = (reach, -it.id)
            if best is None or key > best:
                best, best_item = key, it
        return best_item


def build_min_index(items, n, *, indexed: bool = True) -> MinEnclosingIndex:
    return MinEnclosingIndex(items, n, indexed=indexed)


def build_far_index(items, n, *, indexed: bool = True) -> FarthestEnclosingIndex:
    return FarthestEnclosingIndex(items, n, indexed=indexed)
