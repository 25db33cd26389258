from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hull_oracle import brute_force_hull
from seriesfact.rings import Valuation
from seriesfact.newton import f_star, lower_hull, newton_polygon, polygon_from_points, single_edge_test
from seriesfact.series import Series
from seriesfact.sparser import parse_series

V2 = Valuation.p_adic(2)
point_sets = st.lists(st.tuples(st.integers(0, 30), st.integers(0, 20)), min_size=1, max_size=12)


def test_simple_hull():
    pts = [(0, 3), (1, 1), (2, 2), (3, 0), (4, 0)]
    assert [tuple(p) for p in lower_hull(pts)] == [(0, 3), (1, 1), (3, 0), (4, 0)]


def test_collinear_points_dropped():
    assert [tuple(p) for p in lower_hull([(0, 4), (1, 3), (2, 2), (4, 0)])] == [(0, 4), (4, 0)]


def test_edges_and_slopes_exact():
    poly = polygon_from_points([(0, 3), (2, 1), (5, 0)], 10)
    assert poly.slopes() == [Fraction(-1), Fraction(-1, 3)]
    assert [e.hlen for e in poly.edges] == [2, 3]
    assert not poly.censored
    j = poly.to_json()
    assert j["edges"][1]["slope"] == ["-1", "3"]


def test_pattern_family_is_one_edge_plus_flat_tail():
    f = parse_series("2^3 + 2^3*z + 2^2*z^2 + 2*z^3 + z^4*inv(1-z)")
    poly = newton_polygon(f, V2, 16)
    neg = [e for e in poly.edges if e.slope < 0]
    assert [(tuple(e.start), tuple(e.end)) for e in neg] == [((0, 3), (4, 0))]
    assert poly.censored  # the flat run z^4, z^5, ... meets the window
    assert single_edge_test(f, V2, 3, 4)


def test_failure_example():
    g = Series.polynomial([2, -2])
    h = parse_series("2 - 2*z*inv(1-z)")  # 2 + sum 2(1-2) z^i
    assert h.head(4) == [2, -2, -2, -2]
    gh = g * h
    assert gh.head(6) == [4, -8, 0, 0, 0, 0]
    assert f_star(g, V2, 0, 32) == (1, False)
    assert f_star(h, V2, 0, 32) == (32, True)
    assert f_star(gh, V2, 0, 32) == (0, False)


@given(point_sets)
@settings(max_examples=300)
def test_hull_matches_brute_force(pts):
    assert [tuple(p) for p in lower_hull(pts)] == brute_force_hull(pts)


@given(point_sets)
def test_hull_is_convex_and_nonincreasing(pts):
    poly = polygon_from_points(pts, 30)
    slopes = poly.slopes()
    assert slopes == sorted(slopes)
    assert all(s <= 0 for s in slopes)
    assert sum(e.hlen for e in poly.edges) == poly.vertices[-1].index - poly.vertices[0].index
