"""
Quickstart: solve, verify, save
===============================

Build a small instance in code, compute a minimum-cardinality and a
minimum-weight dominating set, check them against the brute-force
oracle, and round-trip everything through files.
"""

import tempfile
from pathlib import Path

from diskdom.geometry import Point, WeightedDisk, canonicalize
from diskdom.instance_io import instance_document, render_svg, solution_document
from diskdom.oracle import brute_force_min, verify
from diskdom.unweighted_greedy import solve_unweighted
from diskdom.weighted_dp import solve_weighted

# Eight disks around a ring. Neighbors overlap; the heavy disk at the
# first position additionally reaches two steps each way, so it wins on
# cardinality but loses on weight, and the two objectives pick
# different sets.
import math

disks = []
for k in range(8):
    a = 2 * math.pi * k / 8
    r = 11.2 if k == 0 else 4.0
    w = 9.0 if k == 0 else 1.0
    disks.append(WeightedDisk(Point(10 * math.cos(a), 10 * math.sin(a)), r, w))
instance = canonicalize(disks)
print(f"instance: n={instance.n} (canonical order starts at the lowest center)")

# Fewest centers, regardless of weight.
few = solve_unweighted(instance)
print(f"unweighted: size={few.size} centers={few.centers}")

# Cheapest centers with at most k = 4 of them.
cheap = solve_weighted(instance, 4)
print(f"weighted (k=4): weight={cheap.weight} centers={cheap.centers}")

# Both are certified against exhaustive enumeration (fine for n <= 22).
assert few.size == brute_force_min(instance, "unweighted").size
assert abs(cheap.weight - brute_force_min(instance, "weighted", k_cap=4).weight) < 1e-9
assert verify(instance, instance.to_canonical(few.centers))
assert verify(instance, instance.to_canonical(cheap.centers))
print("both solutions match the brute-force oracle and pass verification")

# Files: instances and solutions are plain JSON, pictures are SVG.
with tempfile.TemporaryDirectory() as tmp:
    inst_path = Path(tmp) / "ring8.json"
    inst_path.write_text(instance_document(instance, {"name": "ring8"}).to_json())
    sol_doc = solution_document(cheap, instance, k=4, solver="dp")
    (Path(tmp) / "ring8.sol.json").write_text(sol_doc.to_json())
    (Path(tmp) / "ring8.svg").write_text(render_svg(instance, cheap))
    print(f"wrote {sorted(p.name for p in Path(tmp).iterdir())}")
