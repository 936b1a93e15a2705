import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskdom.geometry import CyclicSublist, full_sublist, offset_ccw
from diskdom.sublist_queries import (
    FarthestEnclosingIndex,
    MinEnclosingIndex,
    ValuedSublist,
    build_far_index,
    build_min_index,
)


def run(start, length, n):
    return CyclicSublist(start=start, length=length, n=n)


def vs(start, length, n, value, id):
    return ValuedSublist(sub=run(start, length, n), value=value, id=id)


# --- minimum-value enclosing run -------------------------------------------

MIN_ITEMS = [
    vs(0, 3, 6, 3.0, 0),   # [0..2]
    vs(0, 5, 6, 1.0, 1),   # [0..4]
    vs(1, 3, 6, 0.0, 2),   # [1..3]
]


@pytest.mark.parametrize("indexed", [True, False])
def test_min_enclosing_pinned(indexed):
    idx = build_min_index(MIN_ITEMS, 6, indexed=indexed)
    got = idx.min_enclosing(run(1, 2, 6))  # [1..2]
    assert got.id == 2 and got.value == 0.0
    got = idx.min_enclosing(run(0, 5, 6))  # [0..4]
    assert got.id == 1 and got.value == 1.0
    assert idx.min_enclosing(run(5, 1, 6)) is None


@pytest.mark.parametrize("indexed", [True, False])
def test_min_enclosing_full_item_answers_everything(indexed):
    items = MIN_ITEMS + [ValuedSublist(sub=full_sublist(6), value=7.0, id=9)]
    idx = build_min_index(items, 6, indexed=indexed)
    for start in range(6):
        for length in range(1, 7):
            got = idx.min_enclosing(run(start, length, 6))
            assert got is not None
    # the full item is the only one containing a full query
    assert idx.min_enclosing(full_sublist(6)).id == 9
    # ...and the fallback when nothing else contains the query
    assert idx.min_enclosing(run(5, 1, 6)).id == 9


@pytest.mark.parametrize("indexed", [True, False])
def test_min_enclosing_tie_breaks_to_smallest_id(indexed):
    items = [vs(0, 4, 8, 2.0, 5), vs(1, 5, 8, 2.0, 3), vs(0, 6, 8, 2.0, 4)]
    idx = build_min_index(items, 8, indexed=indexed)
    got = idx.min_enclosing(run(1, 3, 8))
    assert got.id == 3


def test_min_index_rejects_bad_input():
    with pytest.raises(ValueError):
        build_min_index([vs(0, 2, 5, 1.0, 0)], 6)
    with pytest.raises(ValueError):
        build_min_index([vs(0, 2, 6, 1.0, 0), vs(1, 2, 6, 2.0, 0)], 6)
    with pytest.raises(ValueError):
        build_min_index([ValuedSublist(sub=CyclicSublist(0, 0, 6), value=1.0, id=0)], 6)
    idx = build_min_index(MIN_ITEMS, 6)
    with pytest.raises(ValueError):
        idx.min_enclosing(CyclicSublist(0, 0, 6))
    with pytest.raises(ValueError):
        idx.min_enclosing(run(0, 2, 7))


def _random_items(rng, n, m):
    items = []
    for ident in range(m):
        length = rng.randint(1, n)
        items.append(vs(rng.randrange(n), length, n, rng.randint(0, 20) / 4, ident))
    return items


def test_min_enclosing_indexed_matches_naive():
    rng = random.Random(1234)
    for _ in range(200):
        n = rng.randint(1, 12)
        items = _random_items(rng, n, rng.randint(0, 10))
        fast = build_min_index(items, n, indexed=True)
        slow = build_min_index(items, n, indexed=False)
        for start in range(n):
            for length in range(1, n + 1):
                q = run(start, length, n)
                a, b = fast.min_enclosing(q), slow.min_enclosing(q)
                assert (a is None) == (b is None)
                if a is not None:
                    assert (a.value, a.id) == (b.value, b.id)


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_min_enclosing_monotone_in_query(data):
    n = data.draw(st.integers(2, 10))
    m = data.draw(st.integers(1, 8))
    items = [
        vs(
            data.draw(st.integers(0, n - 1)),
            data.draw(st.integers(1, n)),
            n,
            data.draw(st.integers(0, 9)),
            ident,
        )
        for ident in range(m)
    ]
    idx = build_min_index(items, n)
    start = data.draw(st.integers(0, n - 1))
    small = data.draw(st.integers(1, n))
    large = data.draw(st.integers(small, n))
    a = idx.min_enclosing(run(start, small, n))
    b = idx.min_enclosing(run(start, large, n))
    # growing the query can only lose candidates
    if b is not None:
        assert a is not None and a.value <= b.value


# --- farthest enclosing run -------------------------------------------------

FAR_SINGLE = [vs(2, 3, 6, 0.0, 0)]  # [2..4]


@pytest.mark.parametrize("indexed", [True, False])
def test_farthest_single_item(indexed):
    idx = build_far_index(FAR_SINGLE, 6, indexed=indexed)
    got = idx.farthest_ccw(3)
    assert got.id == 0
    assert offset_ccw(3, got.sub.ccw_end, 6) == 1
    assert idx.farthest_ccw(5) is None
    assert idx.farthest_cw(5) is None


@pytest.mark.parametrize("indexed", [True, False])
def test_farthest_prefers_longer_reach(indexed):
    items = [vs(2, 3, 6, 0.0, 0), vs(3, 4, 6, 0.0, 1)]  # [2..4], [3..0]
    idx = build_far_index(items, 6, indexed=indexed)
    got = idx.farthest_ccw(3)
    assert got.id == 1  # reach 3 beats reach 1
    got = idx.farthest_cw(3)
    assert got.id == 0  # cw reach 1 beats 0
    got = idx.farthest_cw(4)
    assert got.id == 0  # cw reach 2 beats 1


@pytest.mark.parametrize("indexed", [True, False])
def test_farthest_full_item_always_wins(indexed):
    items = [vs(2, 3, 6, 0.0, 4), ValuedSublist(sub=full_sublist(6), value=9.0, id=7)]
    idx = build_far_index(items, 6, indexed=indexed)
    for j in range(6):
        assert idx.farthest_ccw(j).id == 7
        assert idx.farthest_cw(j).id == 7


@pytest.mark.parametrize("indexed", [True, False])
def test_farthest_tie_breaks_to_smallest_id(indexed):
    items = [vs(1, 3, 6, 0.0, 5), vs(2, 2, 6, 0.0, 2)]  # both ccw-end at 3
    idx = build_far_index(items, 6, indexed=indexed)
    assert idx.farthest_ccw(2).id == 2
    assert idx.farthest_ccw(1).id == 5  # only item 5 covers 1


def test_far_index_rejects_bad_input():
    idx = build_far_index(FAR_SINGLE, 6)
    with pytest.raises(ValueError):
        idx.farthest_ccw(6)
    with pytest.raises(ValueError):
        idx.farthest_cw(-1)


def test_farthest_indexed_matches_naive():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 12)
        items = _random_items(rng, n, rng.randint(0, 10))
        fast = build_far_index(items, n, indexed=True)
        slow = build_far_index(items, n, indexed=False)
        for j in range(n):
            for fname in ("farthest_ccw", "farthest_cw"):
                a = getattr(fast, fname)(j)
                b = getattr(slow, fname)(j)
                assert (a is None) == (b is None)
                if a is not None:
                    assert a.id == b.id


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_farthest_reach_is_correct_and_maximal(data):
    n = data.draw(st.integers(1, 10))
    m = data.draw(st.integers(1, 8))
    items = [
        vs(
            data.draw(st.integers(0, n - 1)),
            data.draw(st.integers(1, n)),
            n,
            0.0,
            ident,
        )
        for ident in range(m)
    ]
    idx = build_far_index(items, n)
    j = data.draw(st.integers(0, n - 1))
    got = idx.farthest_ccw(j)
    covering = [it for it in items if it.sub.is_full or j in it.sub]
    if not covering:
        assert got is None
    else:
        def reach(it):
            if it.sub.is_full:
                return n
            return offset_ccw(j, it.sub.ccw_end, n)

        assert got.sub.is_full or j in got.sub
        assert reach(got) == max(reach(it) for it in covering)


def test_build_is_deterministic():
    rng = random.Random(7)
    items = _random_items(rng, 9, 8)
    a = MinEnclosingIndex(items, 9)
    b = MinEnclosingIndex(list(items), 9)
    queries = [run(s, l, 9) for s in range(9) for l in range(1, 10)]
    assert [
        x.id if (x := a.min_enclosing(q)) else None for q in queries
    ] == [x.id if (x := b.min_enclosing(q)) else None for q in queries]
