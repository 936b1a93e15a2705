"""Weighted disks in strictly convex position, plus cyclic index runs.

An instance is a cyclic counterclockwise sequence of disks whose centers
are all strict vertices of their convex hull.  Every algorithm in this
package reasons about contiguous runs of instance indices, so the run
type (`CyclicSublist`) and its merge operation live here next to the
disk predicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence


class GeometryError(ValueError):
    """Input that cannot form a valid instance."""


class DuplicateCenter(GeometryError):
    """Two input disks share the same center."""


class NotStrictlyConvex(GeometryError):
    """Some center is interior to, or collinear on, the hull of the centers."""


class NonPositiveWeight(GeometryError):
    """A weight is zero or negative where positive weights are required."""


class NonFiniteValue(GeometryError):
    """A coordinate, radius, or weight is NaN or infinite."""


class NotConsecutive(ValueError):
    """Runs handed to union_extend leave a gap in the cyclic order."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class WeightedDisk:
    center: Point
    radius: float
    weight: float = 1.0


def distance(p: Point, q: Point) -> float:
    dx = q.x - p.x
    dy = q.y - p.y
    return math.sqrt(dx * dx + dy * dy)


def disk_distance(d1: WeightedDisk, d2: WeightedDisk) -> float:
    """Center distance minus the two radii; negative or zero when the disks meet.

    Uses an explicit sqrt of the squared center distance so that scalar and
    vectorized callers computing the same expression get bit-identical
    results.
    """
    dx = d2.center.x - d1.center.x
    dy = d2.center.y - d1.center.y
    return math.sqrt(dx * dx + dy * dy) - (d1.radius + d2.radius)


def intersects(d1: WeightedDisk, d2: WeightedDisk) -> bool:
    """Closed intersection test; tangency counts.

    Compares squared distances so no square root is taken: exact whenever
    the inputs are exactly representable.
    """
    dx = d2.center.x - d1.center.x
    dy = d2.center.y - d1.center.y
    rr = d1.radius + d2.radius
    return dx * dx + dy * dy <= rr * rr


def orientation(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of triangle abc (positive = counterclockwise)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


@dataclass(frozen=True)
class Instance:
    """Disks in canonical counterclockwise order.

    `original_index[i]` is the position the i-th canonical disk had in the
    input passed to `canonicalize`.
    """

    disks: tuple[WeightedDisk, ...]
    original_index: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.disks)

    def to_original(self, canonical_indices) -> tuple[int, ...]:
        return tuple(self.original_index[i] for i in canonical_indices)

    def to_canonical(self, original_indices) -> tuple[int, ...]:
        inv = {orig: i for i, orig in enumerate(self.original_index)}
        return tuple(inv[i] for i in original_indices)


def _validate_disks(raw: Sequence[WeightedDisk], weighted: bool) -> None:
    for d in raw:
        for v in (d.center.x, d.center.y, d.radius, d.weight):
            if not math.isfinite(v):
                raise NonFiniteValue(f"non-finite value in disk {d}")
        if d.radius < 0:
            raise GeometryError(f"negative radius in disk {d}")
        if weighted and d.weight <= 0:
            raise NonPositiveWeight(f"weight must be positive, got {d.weight}")


def canonicalize(raw: Sequence[WeightedDisk], *, weighted: bool = True) -> Instance:
    """Order disks counterclockwise starting at the lexicographically smallest center.

    Every center must be a strict vertex of the convex hull: duplicate
    centers, collinear triples, and interior points are all rejected.
    The result is idempotent (canonicalizing a canonical order is the
    identity).
    """
    if not raw:
        raise ValueError("an instance needs at least one disk")
    _validate_disks(raw, weighted)
    pts = [(d.center.x, d.center.y) for d in raw]
    if len(set(pts)) != len(pts):
        raise DuplicateCenter("two disks share a center")
    n = len(raw)
    order = sorted(range(n), key=lambda i: pts[i])
    if n <= 2:
        return Instance(tuple(raw[i] for i in order), tuple(order))

    def chain(idxs):
        out: list[int] = []
        for i in idxs:
            while len(out) >= 2 and orientation(
                raw[out[-2]].center, raw[out[-1]].center, raw[i].center
            ) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) != n:
        raise NotStrictlyConvex("centers are not in strictly convex position")
    return Instance(tuple(raw[i] for i in hull), tuple(hull))


def offset_ccw(i: int, j: int, n: int) -> int:
    """Steps needed to reach j from i moving counterclockwise."""
    return (j - i) % n


@dataclass(frozen=True)
class CyclicSublist:
    """A contiguous run of instance indices: start, start+1, ... (mod n).

    Empty and full runs are canonicalized to start 0 so equality is plain
    structural equality.
    """

    start: int
    length: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.length <= self.n:
            raise ValueError("length out of range")
        if self.length in (0, self.n):
            object.__setattr__(self, "start", 0)
        else:
            object.__setattr__(self, "start", self.start % self.n)

    @property
    def is_empty(self) -> bool:
        return self.length == 0

    @property
    def is_full(self) -> bool:
        return self.length == self.n

    @property
    def cw_end(self) -> int:
        """First covered index; undefined for empty or full runs."""
        if self.is_empty or self.is_full:
            raise ValueError("endpoint undefined for empty/full run")
        return self.start

    @property
    def ccw_end(self) -> int:
        """Last covered index; undefined for empty or full runs."""
        if self.is_empty or self.is_full:
            raise ValueError("endpoint undefined for empty/full run")
        return (self.start + self.length - 1) % self.n

    def covers(self, idx: int) -> bool:
        if self.is_empty:
            return False
        return (idx - self.start) % self.n < self.length

    def __contains__(self, idx: int) -> bool:
        return self.covers(idx)

    def indices(self) -> Iterator[int]:
        for k in range(self.length):
            yield (self.start + k) % self.n

    def contains_sub(self, other: "CyclicSublist") -> bool:
        """True when every index of `other` is covered by this run."""
        if other.n != self.n:
            raise ValueError("runs over different instance sizes")
        if other.is_empty or self.is_full:
            return True
        if other.length > self.length:
            return False
        d = (other.start - self.start) % self.n
        return d + other.length <= self.length


def empty_sublist(n: int) -> CyclicSublist:
    return CyclicSublist(0, 0, n)


def full_sublist(n: int) -> CyclicSublist:
    return CyclicSublist(0, n, n)


def singleton(i: int, n: int) -> CyclicSublist:
    return CyclicSublist(i, 1, n)


Openness = Literal["closed-closed", "open-open", "closed-open", "open-closed"]


def sublist(i: int, j: int, n: int, openness: Openness = "closed-closed") -> CyclicSublist:
    """The run from i counterclockwise to j, with endpoints kept or dropped.

    The closed-closed run always takes the short way determined by the
    direction: `sublist(i, i, n)` is the singleton at i and
    `sublist(i, i-1, n)` is the full cycle.  Open variants drop endpoints
    and clamp at empty (so the open-open run between cyclic neighbours,
    or from an index to itself, is empty).
    """
    span = offset_ccw(i, j, n) + 1
    start = i
    if openness in ("open-open", "open-closed"):
        start = (i + 1) % n
        span -= 1
    if openness in ("open-open", "closed-open"):
        span -= 1
    return CyclicSublist(start, max(0, span), n)


def run_between(u: int, v: int, n: int) -> CyclicSublist:
    """Indices a counterclockwise scan starting at u+1 passes before reaching v.

    Unlike `sublist(u, v, n, "open-open")` this interprets v == u as a scan
    that went all the way around (yielding everything except u), and
    v == u+1 as a scan that stopped immediately (yielding the empty run).
    """
    return CyclicSublist((u + 1) % n, (v - u - 1) % n, n)


def union_extend(parts: Sequence[CyclicSublist]) -> CyclicSublist:
    """Merge runs that appear in overlapping-or-abutting order into one run.

    Saturates to the full cycle as soon as the accumulated coverage wraps.
    Raises NotConsecutive when a nonempty part leaves a gap against the
    coverage accumulated so far.
    """
    if not parts:
        raise ValueError("union_extend needs at least one part")
    n = parts[0].n
    s = None
    length = 0
    for p in parts:
        if p.n != n:
            raise ValueError("runs over different instance sizes")
        if p.is_empty:
            continue
        if p.is_full or length >= n:
            return full_sublist(n)
        if s is None:
            s, length = p.start, p.length
            continue
        d = (p.start - s) % n
        if d <= length:
            length = max(length, d + p.length)
        elif d + p.length >= n:
            # wraps around behind the accumulated run
            length = max(p.length, n - d + length)
            s = p.start
        else:
            raise NotConsecutive(f"gap between accumulated run and {p}")
    if s is None:
        return empty_sublist(n)
    if length >= n:
        return full_sublist(n)
    return CyclicSublist(s, length, n)
