import math
import random

import pytest

from conftest import mk_instance
from diskdom.geometry import full_sublist
from diskdom.neighbor_index import build_neighbor_index
from diskdom.oracle import brute_force_min, verify
from diskdom.solution import Infeasible, InvalidK
from diskdom.unweighted_greedy import (
    GreedyCandidate,
    GreedyLevel,
    greedy_bidirectional_step,
    greedy_ccw_step,
    greedy_cw_step,
    make_greedy_validator,
    reach_ccw,
    reach_cw,
    solve_unweighted,
)


def rand_instance(rng, n, rlo=0.3, rhi=3.0):
    gaps = [0.15 + rng.random() for _ in range(n)]
    total = sum(gaps)
    a = rng.uniform(0, 2 * math.pi)
    pts = []
    for g in gaps:
        pts.append((10 * math.cos(a), 10 * math.sin(a), rng.uniform(rlo, rhi)))
        a += 2 * math.pi * g / total
    return mk_instance(pts, weighted=False)


def build_levels(inst, upto, *, validator=None):
    nbr = build_neighbor_index(inst, "naive")
    levels = [None]
    for t in range(1, upto + 1):
        tbl = GreedyLevel(inst, nbr, t, validator=validator)
        if t == 1:
            for i in range(inst.n):
                tbl.insert(
                    i, GreedyCandidate(nbr.dominated_run(i), frozenset((i,)), i, 1)
                )
        else:
            for i in range(inst.n):
                c = greedy_ccw_step(levels, i, t)
                if c:
                    tbl.insert(i, c)
                c = greedy_cw_step(levels, i, t)
                if c:
                    tbl.insert(i, c)
                for c in greedy_bidirectional_step(levels, i, t):
                    tbl.insert(i, c)
        tbl.freeze()
        levels.append(tbl)
    return levels


def test_greedy_ccw_step_t4(t4):
    levels = build_levels(t4, 1)
    cand = greedy_ccw_step(levels, 0, 2)
    assert cand is not None and cand.sub.is_full
    # the global step picks the run through 2 reaching farthest ccw (owner 3)
    assert cand.witnesses == {0, 3}
    assert verify(t4, cand.witnesses)


def test_greedy_cw_step_t4(t4):
    levels = build_levels(t4, 1)
    cand = greedy_cw_step(levels, 0, 2)
    assert cand is not None and cand.sub.is_full
    assert verify(t4, cand.witnesses)


def test_greedy_step_big_disk_short_circuit(big5):
    levels = build_levels(big5, 1)
    big = max(range(big5.n), key=lambda i: big5.disks[i].radius)
    cand = greedy_ccw_step(levels, big, 2)
    assert cand.sub.is_full and cand.witnesses == {big}


def test_greedy_step_crawls_on_disjoint_disks():
    # disjoint disks: singleton runs everywhere, so a step can only splice
    # the owner's run with its neighbor's
    inst = mk_instance(
        [
            (10 * math.cos(a), 10 * math.sin(a), 0.01)
            for a in [k * 2 * math.pi / 5 for k in range(5)]
        ],
        weighted=False,
    )
    levels = build_levels(inst, 1)
    cand = greedy_ccw_step(levels, 0, 2)
    assert cand is not None
    assert sorted(cand.sub.indices()) == [0, 1]
    assert cand.witnesses == {0, 1}


def test_bidirectional_step_t2_empty(t4):
    levels = build_levels(t4, 1)
    assert greedy_bidirectional_step(levels, 0, 2) == []


def test_bidirectional_step_stitches_both_extremes():
    rng = random.Random(9)
    inst = rand_instance(rng, 10, 1.5, 3.5)
    levels = build_levels(inst, 2)
    n = inst.n
    for i in range(n):
        cands = greedy_bidirectional_step(levels, i, 3)
        assert len(cands) <= 1  # one per split level; t=3 has a single split
        for cand in cands:
            lx = levels[2].extreme_ccw(i)
            ly = levels[2].extreme_cw(i)
            assert cand.witnesses == lx.witnesses | ly.witnesses
            assert i in cand.sub


def test_bucket_size_bound():
    rng = random.Random(10)
    for _ in range(15):
        inst = rand_instance(rng, rng.randint(3, 14), 0.2, 1.2)
        nbr = build_neighbor_index(inst, "naive")
        levels = [None]
        t = 0
        while True:
            t += 1
            tbl = GreedyLevel(inst, nbr, t)
            if t == 1:
                for i in range(inst.n):
                    tbl.insert(
                        i, GreedyCandidate(nbr.dominated_run(i), frozenset((i,)), i, 1)
                    )
            else:
                for i in range(inst.n):
                    for c in (
                        greedy_ccw_step(levels, i, t),
                        greedy_cw_step(levels, i, t),
                    ):
                        if c:
                            tbl.insert(i, c)
                    for c in greedy_bidirectional_step(levels, i, t):
                        tbl.insert(i, c)
            for i in range(inst.n):
                assert len(tbl.buckets[i]) <= 2 + max(0, t - 2)
            tbl.freeze()
            levels.append(tbl)
            if tbl.full_candidate is not None or t >= inst.n:
                break


def test_cached_extremes_match_scans():
    # freeze() re-derives every cached extreme by scanning the bucket when a
    # validator is attached; any divergence trips its assertion
    rng = random.Random(11)
    for _ in range(10):
        inst = rand_instance(rng, rng.randint(3, 12))
        build_levels(inst, min(4, inst.n), validator=make_greedy_validator(inst))


def test_solve_big_disk(big5):
    sol = solve_unweighted(big5)
    big = max(range(big5.n), key=lambda i: big5.disks[i].radius)
    assert sol.size == 1
    assert big5.to_canonical(sol.centers) == (big,)


def test_solve_t4(t4):
    sol = solve_unweighted(t4)
    assert sol.size == 2
    assert verify(t4, t4.to_canonical(sol.centers))


def test_solve_single():
    inst = mk_instance([(0.0, 0.0, 1.0)], weighted=False)
    sol = solve_unweighted(inst)
    assert sol.size == 1 and sol.centers == (0,)


def test_matches_brute_force():
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(1, 13)
        inst = rand_instance(rng, n, 0.2, rng.choice([0.8, 2.0, 3.5]))
        got = solve_unweighted(inst, check_invariants=True)
        ref = brute_force_min(inst, "unweighted")
        assert got.size == ref.size
        assert verify(inst, inst.to_canonical(got.centers))
        assert len(set(got.centers)) == got.size


def test_k_cap():
    rng = random.Random(13)
    inst = rand_instance(rng, 9, 0.1, 0.5)
    opt = brute_force_min(inst, "unweighted").size
    assert opt > 1
    with pytest.raises(Infeasible):
        solve_unweighted(inst, k_cap=opt - 1)
    assert solve_unweighted(inst, k_cap=opt).size == opt
    assert solve_unweighted(inst, k_cap=opt + 50).size == opt


def test_invalid_k_cap(t4):
    for bad in (0, -3, 1.5, True):
        with pytest.raises(InvalidK):
            solve_unweighted(t4, k_cap=bad)


def test_determinism():
    rng = random.Random(5)
    inst = rand_instance(rng, 12)
    assert solve_unweighted(inst) == solve_unweighted(inst)


def test_strategies_and_index_modes_agree():
    rng = random.Random(21)
    for _ in range(10):
        inst = rand_instance(rng, rng.randint(2, 12))
        results = set()
        for strategy in ("naive", "tree", "bitset"):
            for indexed in (True, False):
                sol = solve_unweighted(
                    inst, neighbor_strategy=strategy, indexed_queries=indexed
                )
                results.add((sol.size, sol.centers))
        assert len(results) == 1


def test_without_bidirectional_still_reports_only_verified_sets():
    # the stitched candidates never hurt; dropping them must at worst delay
    # the stop, never produce an invalid or smaller answer
    rng = random.Random(31)
    for _ in range(25):
        inst = rand_instance(rng, rng.randint(3, 12))
        full = solve_unweighted(inst)
        bare = solve_unweighted(inst, _include_bidirectional=False)
        assert bare.size >= full.size
        assert verify(inst, inst.to_canonical(bare.centers))


def test_reach_helpers():
    f = full_sublist(8)
    assert reach_ccw(f, 3, 8) == 8 and reach_cw(f, 3, 8) == 8


def test_frozen_level_rejects_insert(t4):
    nbr = build_neighbor_index(t4, "naive")
    tbl = GreedyLevel(t4, nbr, 1)
    tbl.insert(0, GreedyCandidate(nbr.dominated_run(0), frozenset((0,)), 0, 1))
    tbl.freeze()
    with pytest.raises(AssertionError):
        tbl.insert(1, GreedyCandidate(nbr.dominated_run(1), frozenset((1,)), 1, 1))


def test_validator_rejects_bad_candidates(t4):
    validate = make_greedy_validator(t4)
    nbr = build_neighbor_index(t4, "naive")
    validate(GreedyCandidate(nbr.dominated_run(0), frozenset((0,)), 0, 1))
    with pytest.raises(AssertionError):
        validate(GreedyCandidate(nbr.dominated_run(0), frozenset((1,)), 1, 1))
    with pytest.raises(AssertionError):
        validate(GreedyCandidate(full_sublist(4), frozenset((0,)), 0, 1))
    with pytest.raises(AssertionError):
        validate(GreedyCandidate(nbr.dominated_run(0), frozenset((0, 1, 2)), 0, 2))
