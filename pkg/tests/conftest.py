import pytest

from diskdom.geometry import Point, WeightedDisk, canonicalize


def mk_instance(points, *, weighted=True):
    """Build a canonical instance from (x, y, r) or (x, y, r, w) tuples."""
    disks = []
    for p in points:
        x, y, r = p[0], p[1], p[2]
        w = p[3] if len(p) > 3 else 1.0
        disks.append(WeightedDisk(Point(x, y), r, w))
    return canonicalize(disks, weighted=weighted)


# Unit-square corners with radius 0.6: adjacent disks meet (distance 1
# against combined radius 1.2), diagonal ones do not (sqrt(2) > 1.2).
T4_POINTS = [(0.0, 0.0, 0.6), (1.0, 0.0, 0.6), (1.0, 1.0, 0.6), (0.0, 1.0, 0.6)]


@pytest.fixture
def t4():
    return mk_instance(T4_POINTS)


@pytest.fixture
def big5():
    """Five centers on a circle of radius 10; one giant disk reaches everything."""
    import math

    pts = []
    for k in range(5):
        a = 2 * math.pi * k / 5
        r = 100.0 if k == 0 else 0.5
        pts.append((10 * math.cos(a), 10 * math.sin(a), r))
    return mk_instance(pts)
