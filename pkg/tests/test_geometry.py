# tests/test_geometry.py
import numpy as np
import pytest
from scipy.spatial import ConvexHull

from common.errors import GeometryError
from common.geometry.region import (
    Constraint, RatePair, RateRegion, area, contains, intersect, is_subset, vertices,
)
from common.utils.seeds import rng
from models.deterministic.channel import DetParams
from models.deterministic.regions import det_outer_region

PENTAGON = RateRegion.from_triples([(1, 0, 5), (0, 1, 5), (1, 1, 7)])
SQUARE = RateRegion.from_triples([(1, 0, 1), (0, 1, 1)])


def _pts(r):
    return [(v.r1, v.r2) for v in vertices(r)]


def test_vertices_pentagon_ccw_from_origin():
    assert _pts(PENTAGON) == [(0.0, 0.0), (5.0, 0.0), (5.0, 2.0), (2.0, 5.0), (0.0, 5.0)]


def test_vertices_square_and_segment():
    assert _pts(SQUARE) == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    seg = RateRegion.from_triples([(1, 0, 2), (0, 1, 0)])
    assert sorted(_pts(seg)) == [(0.0, 0.0), (2.0, 0.0)]
    assert area(seg) == 0.0


def test_unbounded_region_rejected():
    with pytest.raises(GeometryError):
        vertices(RateRegion.from_triples([(1, 0, 3)]))


def test_constraint_validation():
    with pytest.raises(GeometryError):
        Constraint(0, 0, 1)
    with pytest.raises(GeometryError):
        Constraint(-1, 1, 1)
    with pytest.raises(GeometryError):
        Constraint(1, 1, -0.5)
    # -0.0 de log2(1) vira 0
    assert Constraint(1, 0, -1e-15).b == 0.0


def test_contains_examples():
    thm1 = det_outer_region(DetParams(5, 3, 0))
    assert contains(thm1, RatePair(5, 2))
    assert not contains(thm1, RatePair(5, 3))
    assert contains(thm1, RatePair(0, 0))
    assert not contains(thm1, RatePair(-1e-3, 0))


def test_intersect_examples():
    assert _pts(intersect(SQUARE, SQUARE)) == _pts(SQUARE)
    box = RateRegion.from_triples([(1, 0, 5), (0, 1, 5)])
    cut = RateRegion.from_triples([(1, 1, 7)])
    assert _pts(intersect(box, cut)) == _pts(PENTAGON)
    a = RateRegion.from_triples([(1, 0, 3), (1, 2, 5)])
    b = RateRegion.from_triples([(0, 1, 2), (2, 1, 5)])
    assert np.allclose(_pts(intersect(a, b)), _pts(intersect(b, a)), atol=1e-9)


def test_area_examples():
    assert np.isclose(area(SQUARE), 1.0)
    assert abs(area(det_outer_region(DetParams(5, 3, 0))) - 20.5) <= 1e-9
    assert area(det_outer_region(DetParams(2, 4, 3))) == 0.0


def test_is_subset_examples():
    r0 = det_outer_region(DetParams(5, 3, 0))
    r1 = det_outer_region(DetParams(5, 3, 1))
    r3 = det_outer_region(DetParams(5, 3, 3))
    assert is_subset(r0, r1)
    assert not is_subset(r3, r0)
    assert is_subset(r0, r0)


def test_region_dict_roundtrip():
    d = PENTAGON.to_dict()
    assert d["vertices"] == [[0.0, 0.0], [5.0, 0.0], [5.0, 2.0], [2.0, 5.0], [0.0, 5.0]]
    back = RateRegion.from_dict(d)
    assert back.constraints == PENTAGON.constraints


# ------------------------- regiões aleatórias + oráculo -------------------------

def _random_region(g: np.random.Generator) -> RateRegion:
    while True:
        k = int(g.integers(2, 7))
        triples = []
        for _ in range(k):
            a1, a2 = 0, 0
            while a1 == 0 and a2 == 0:
                a1, a2 = (int(v) for v in g.integers(0, 3, size=2))
            triples.append((a1, a2, float(g.uniform(0.2, 1.0))))
        r = RateRegion.from_triples(triples)
        if r.bounded:
            return r


def _raster_hull(r: RateRegion, step: float = 1e-3) -> ConvexHull:
    xmax = min(c.b / c.a1 for c in r.constraints if c.a1 > 0)
    ymax = min(c.b / c.a2 for c in r.constraints if c.a2 > 0)
    xs = np.arange(0.0, xmax + step / 2, step)
    ys = np.arange(0.0, ymax + step / 2, step)
    X, Y = np.meshgrid(xs, ys)
    mask = np.ones_like(X, dtype=bool)
    for c in r.constraints:
        mask &= c.a1 * X + c.a2 * Y <= c.b + 1e-12
    pts = np.column_stack([X[mask], Y[mask]])
    return ConvexHull(pts), pts


def test_vertices_agree_with_raster_hull_oracle():
    g = rng(7)
    for _ in range(20):
        r = _random_region(g)
        vs = np.array(_pts(r))
        hull, pts = _raster_hull(r)
        hv = pts[hull.vertices]
        # cada vértice exato tem um vértice do casco a menos de 1e-2
        d = np.sqrt(((vs[:, None, :] - hv[None, :, :]) ** 2).sum(axis=2))
        assert d.min(axis=1).max() <= 1e-2
        # o casco raster fica dentro da região; as áreas batem
        assert all(contains(r, RatePair(float(x), float(y))) for x, y in hv)
        assert abs(area(r) - hull.volume) <= 1e-2


def test_random_region_properties():
    g = rng(11)
    for _ in range(30):
        a, b = _random_region(g), _random_region(g)
        for v in vertices(a):
            assert contains(a, v)
        ab = intersect(a, b)
        assert area(ab) <= min(area(a), area(b)) + 1e-9
        if is_subset(a, b) and is_subset(b, a):
            assert np.allclose(sorted(_pts(a)), sorted(_pts(b)), atol=1e-9)
        assert is_subset(ab, a) and is_subset(ab, b)
