"""
Rebuild the shipped regression corpus
=====================================

Every file under corpus/ is reproducible from this script: hand-placed
instances are spelled out inline and seeded instances come from the
deterministic generators, so reruns are byte-identical.

Run:  python demos/generate_corpus.py [output-dir]
"""

import math
import sys
from pathlib import Path

from diskdom.geometry import Point, WeightedDisk, canonicalize
from diskdom.instance_io import gen_figure1, gen_random, instance_document

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
out_dir.mkdir(parents=True, exist_ok=True)


def hand_made(points, metadata):
    disks = [WeightedDisk(Point(x, y), r, w) for x, y, r, w in points]
    return instance_document(canonicalize(disks), metadata)


docs = {}

# t4: unit-square corners, radius 0.6 -- adjacent disks touch, diagonals
# do not, so two opposite corners dominate everything.
docs["t4"] = hand_made(
    [(0.0, 0.0, 0.6, 1.0), (1.0, 0.0, 0.6, 1.0), (1.0, 1.0, 0.6, 1.0), (0.0, 1.0, 0.6, 1.0)],
    {"name": "t4", "optimum_size": "2"},
)

# big5: five centers on a circle; one disk is so large it reaches all of
# them, making a single-center optimum.
big5 = []
for k in range(5):
    a = 2 * math.pi * k / 5
    big5.append((10 * math.cos(a), 10 * math.sin(a), 100.0 if k == 0 else 0.5, 1.0))
docs["big5"] = hand_made(big5, {"name": "big5", "optimum_size": "1"})

# disjoint6: nothing intersects anything, so the only dominating set is
# all six disks.
docs["disjoint6"] = hand_made(
    [
        (10 * math.cos(2 * math.pi * k / 6), 10 * math.sin(2 * math.pi * k / 6), 0.05, 1.0)
        for k in range(6)
    ],
    {"name": "disjoint6", "optimum_size": "6"},
)

# Seeded instances, pinned by their generator arguments.
docs["w12"] = gen_random(12, 42, "ellipse", "lognormal(0,0.5)", "uniform(1,10)")
docs["u14"] = gen_random(14, 7, "circle", "uniform(0.5,4.0)", "unit")
docs["poly16"] = gen_random(16, 11, "perturbed-polygon", "uniform(1.0,3.5)", "uniform(1,5)")

# Figure-style instances: a large disk whose coverage interleaves with
# isolated small disks -- the case that makes one center's group split
# into many separate runs.
docs["figure1_9"] = gen_figure1(9)
docs["figure1_13"] = gen_figure1(13)

for name, doc in sorted(docs.items()):
    path = out_dir / f"{name}.json"
    path.write_text(doc.to_json())
    print(f"wrote {path} (n={len(doc.points)})")
