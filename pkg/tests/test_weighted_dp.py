import math
import random

import pytest

from conftest import T4_POINTS, mk_instance
from diskdom.geometry import full_sublist
from diskdom.neighbor_index import build_neighbor_index
from diskdom.oracle import brute_force_min, verify
from diskdom.solution import Infeasible, InvalidK
from diskdom.weighted_dp import (
    Candidate,
    LevelTable,
    bidirectional_processing,
    ccw_processing,
    cw_processing,
    init_level_one,
    make_validator,
    solve_weighted,
    solve_weighted_unbounded,
)


def rand_instance(rng, n, *, spread=(0.3, 3.0)):
    while True:
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
        if n == 1 or all(
            (angles[(i + 1) % n] - angles[i]) % (2 * math.pi) >= 1e-3 for i in range(n)
        ):
            break
    return mk_instance(
        [
            (
                10 * math.cos(a),
                10 * math.sin(a),
                rng.uniform(*spread),
                rng.uniform(0.1, 5.0),
            )
            for a in angles
        ]
    )


def frozen_levels(inst, upto=1, strategy="naive", **kw):
    nbr = build_neighbor_index(inst, strategy)
    levels = [None, init_level_one(inst, nbr, **kw)]
    from diskdom.weighted_dp import _bidi_combos, _ccw_combos, _cw_combos

    for t in range(2, upto + 1):
        tbl = LevelTable(inst, nbr, t, **kw)
        for i in range(inst.n):
            _ccw_combos(levels, tbl, i, t)
            _cw_combos(levels, tbl, i, t)
            _bidi_combos(levels, tbl, i, t)
        tbl.freeze()
        levels.append(tbl)
    return levels


def test_level_one_t4(t4):
    levels = frozen_levels(t4)
    table = levels[1]
    assert table.frozen
    for i in range(4):
        (cand,) = table.buckets[i]
        assert cand.witnesses == {i}
        assert cand.value == 1.0
        assert cand.level == 1 and cand.owner == i
        assert sorted(cand.sub.indices()) == sorted({(i - 1) % 4, i, (i + 1) % 4})


def test_level_one_big_disk(big5):
    nbr = build_neighbor_index(big5, "naive")
    table = init_level_one(big5, nbr)
    big = max(range(big5.n), key=lambda i: big5.disks[i].radius)
    (cand,) = table.buckets[big]
    assert cand.sub.is_full


def test_level_one_single():
    inst = mk_instance([(0.0, 0.0, 1.0, 2.5)])
    nbr = build_neighbor_index(inst, "naive")
    table = init_level_one(inst, nbr)
    (cand,) = table.buckets[0]
    assert cand.sub.is_full and cand.value == 2.5


def test_ccw_processing_t4_full(t4):
    levels = frozen_levels(t4)
    cand = ccw_processing(levels, 0, 2, 2)
    assert cand is not None
    assert cand.sub.is_full
    assert cand.value == 2.0
    assert cand.owner == 0 and 0 in cand.witnesses
    assert len(cand.witnesses) == 2
    assert verify(t4, cand.witnesses)


def test_cw_processing_t4_full(t4):
    levels = frozen_levels(t4)
    cand = cw_processing(levels, 0, 2, 2)
    assert cand is not None and cand.sub.is_full and cand.value == 2.0
    assert verify(t4, cand.witnesses)


def test_ccw_processing_all_skipped():
    # six pairwise-disjoint disks: every level-1 run is a singleton, so the
    # global query past the first step never finds an enclosing run
    inst = mk_instance(
        [
            (10 * math.cos(a), 10 * math.sin(a), 0.01, 1.0)
            for a in [k * 2 * math.pi / 6 for k in range(6)]
        ]
    )
    levels = frozen_levels(inst)
    assert ccw_processing(levels, 0, 3, 2) is None
    assert cw_processing(levels, 0, 3, 2) is None
    # the immediate neighbour is reachable, though
    cand = ccw_processing(levels, 0, 1, 2)
    assert cand is not None and sorted(cand.sub.indices()) == [0, 1]


def test_ccw_processing_big_disk_short_circuit(big5):
    levels = frozen_levels(big5)
    big = max(range(big5.n), key=lambda i: big5.disks[i].radius)
    w_big = big5.disks[big].weight
    cand = ccw_processing(levels, big, (big + 2) % 5, 2)
    assert cand is not None and cand.sub.is_full
    assert cand.value == w_big and cand.witnesses == {big}


def test_bidirectional_t2_empty_range(t4):
    levels = frozen_levels(t4)
    assert bidirectional_processing(levels, 0, 1, 3, 2) is None


def test_bidirectional_counts_owner_once():
    rng = random.Random(77)
    inst = rand_instance(rng, 9, spread=(1.5, 4.0))
    levels = frozen_levels(inst, upto=2)
    n = inst.n
    for i in range(n):
        for x in range(n):
            for y in range(n):
                if x == i or y == i:
                    continue
                cand = bidirectional_processing(levels, i, x, y, 3)
                if cand is None:
                    continue
                assert i in cand.witnesses
                total = math.fsum(
                    inst.disks[w].weight for w in sorted(cand.witnesses)
                )
                assert total <= cand.value + 1e-9


def test_solve_t4_k2(t4):
    sol = solve_weighted(t4, 2)
    assert sol.weight == 2.0 and sol.size == 2
    assert verify(t4, t4.to_canonical(sol.centers))


def test_solve_t4_k1_infeasible(t4):
    with pytest.raises(Infeasible):
        solve_weighted(t4, 1)


def test_solve_single():
    inst = mk_instance([(0.0, 0.0, 1.0, 2.5)])
    sol = solve_weighted(inst, 1)
    assert sol.centers == (0,) and sol.weight == 2.5


def test_solve_unbounded(t4):
    sol = solve_weighted_unbounded(t4)
    assert sol.weight == 2.0
    inst = mk_instance([(0.0, 0.0, 1.0, 2.5)])
    assert solve_weighted_unbounded(inst).weight == 2.5


def test_invalid_k(t4):
    for bad in (0, -1, 5, 2.5, True, "2"):
        with pytest.raises(InvalidK):
            solve_weighted(t4, bad)


def test_matches_brute_force_all_k():
    rng = random.Random(501)
    for _ in range(20):
        n = rng.randint(1, 9)
        inst = rand_instance(rng, n)
        for k in range(1, n + 1):
            try:
                got = solve_weighted(inst, k, check_invariants=True).weight
            except Infeasible:
                got = None
            try:
                ref = brute_force_min(inst, "weighted", k_cap=k).weight
            except Infeasible:
                ref = None
            assert (got is None) == (ref is None)
            if got is not None:
                assert got == pytest.approx(ref, abs=1e-9)


def test_extraction_monotone_in_k():
    rng = random.Random(321)
    for _ in range(10):
        n = rng.randint(3, 9)
        inst = rand_instance(rng, n, spread=(1.0, 4.0))
        prev = None
        for k in range(1, n + 1):
            try:
                w = solve_weighted(inst, k).weight
            except Infeasible:
                assert prev is None
                continue
            if prev is not None:
                assert w <= prev + 1e-12
            prev = w


def test_solver_flags_do_not_change_weights():
    rng = random.Random(888)
    for _ in range(8):
        n = rng.randint(3, 8)
        inst = rand_instance(rng, n, spread=(1.0, 4.0))
        k = rng.randint(2, n)
        results = []
        for strategy in ("naive", "tree", "bitset"):
            for indexed in (True, False):
                for prune in (True, False):
                    try:
                        w = solve_weighted(
                            inst,
                            k,
                            neighbor_strategy=strategy,
                            indexed_queries=indexed,
                            prune=prune,
                        ).weight
                    except Infeasible:
                        w = None
                    results.append(w)
        first = results[0]
        for w in results[1:]:
            if first is None:
                assert w is None
            else:
                assert w == pytest.approx(first, abs=1e-12)


def test_determinism(t4):
    rng = random.Random(13)
    inst = rand_instance(rng, 10, spread=(1.0, 4.0))
    a = solve_weighted(inst, 5)
    b = solve_weighted(inst, 5)
    assert a == b


def test_solution_reports_original_indices():
    # shuffle the square's corners; centers must refer to input positions
    order = [2, 0, 3, 1]
    pts = [T4_POINTS[i] for i in order]
    inst = mk_instance(pts)
    sol = solve_weighted(inst, 2)
    assert sol.weight == 2.0
    assert all(0 <= c < 4 for c in sol.centers)
    assert verify(inst, inst.to_canonical(sol.centers))


def test_validator_rejects_bad_candidates(t4):
    validate = make_validator(t4)
    nbr = build_neighbor_index(t4, "naive")
    good = Candidate(nbr.dominated_run(0), 1.0, frozenset((0,)), 0, 1)
    validate(good)
    with pytest.raises(AssertionError):
        validate(Candidate(nbr.dominated_run(0), 1.0, frozenset((1,)), 0, 1))
    with pytest.raises(AssertionError):
        validate(Candidate(full_sublist(4), 1.0, frozenset((0,)), 0, 1))
    with pytest.raises(AssertionError):
        validate(Candidate(nbr.dominated_run(0), 0.5, frozenset((0,)), 0, 1))


def test_level_tables_freeze_semantics(t4):
    nbr = build_neighbor_index(t4, "naive")
    table = init_level_one(t4, nbr)
    with pytest.raises(AssertionError):
        table.insert(0, table.buckets[0][0])
