"""
Weighted solver vs. exhaustive search
=====================================

The level-building solver and the bitmask oracle must agree on every
instance and every bound k: same minimum weight (to 1e-9) and the same
feasibility verdicts. This sweep exercises all three point families
with mixed radius laws and prints a running tally.
"""

from diskdom.instance_io import gen_random
from diskdom.oracle import brute_force_min
from diskdom.solution import Infeasible
from diskdom.weighted_dp import solve_weighted

families = ("circle", "ellipse", "perturbed-polygon")
laws = ("uniform(0.5,3.0)", "lognormal(0,0.6)", "uniform(2.0,5.0)")

checked = agreed_infeasible = 0
for seed in range(36):
    n = 3 + seed % 10
    family = families[seed % 3]
    doc = gen_random(n, 1000 + seed, family, laws[seed % 3], "uniform(1,10)")
    instance = doc.to_instance()
    for k in range(1, n + 1):
        try:
            mine = solve_weighted(instance, k).weight
        except Infeasible:
            mine = None
        try:
            truth = brute_force_min(instance, "weighted", k_cap=k).weight
        except Infeasible:
            truth = None
        assert (mine is None) == (truth is None), (seed, k)
        if mine is None:
            agreed_infeasible += 1
        else:
            assert abs(mine - truth) < 1e-9, (seed, k, mine, truth)
        checked += 1
    print(f"seed {1000 + seed:4d} {family:17s} n={n:2d}: all k agree")

print(f"\n{checked} (instance, k) pairs checked, "
      f"{agreed_infeasible} infeasible verdicts matched, zero mismatches")
