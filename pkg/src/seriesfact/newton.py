"""Newton polygons of truncated power series.

Only the part of the lower hull with slope <= 0 is kept: edges to the
right of the lowest point are artifacts of truncation for a series.
Slopes are exact ``Fraction`` values; all hull tests use integer cross
products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .rings import INF, Valuation, valuation_of
from .series import Series


class NPPoint(NamedTuple):
    index: int
    val: int


@dataclass(frozen=True)
class Edge:
    slope: Fraction
    hlen: int
    start: NPPoint
    end: NPPoint

    def to_json(self):
        return {
            "slope": [str(self.slope.numerator), str(self.slope.denominator)],
            "hlen": self.hlen,
            "from": list(self.start),
            "to": list(self.end),
        }


@dataclass(frozen=True)
class NewtonPolygon:
    window: int
    vertices: tuple[NPPoint, ...]
    edges: tuple[Edge, ...]
    censored: bool

    def slopes(self) -> list[Fraction]:
        return [e.slope for e in self.edges]

    def to_json(self):
        return {
            "window": self.window,
            "vertices": [list(p) for p in self.vertices],
            "edges": [e.to_json() for e in self.edges],
            "censored": self.censored,
        }


def np_points(f: Series, v: Valuation, order: int) -> list[NPPoint]:
    """Points ``(i, v(a_i))`` for ``0 <= i <= order``, skipping zero coefficients."""
    pts = []
    for i, a in enumerate(f.head(order + 1)):
        val = valuation_of(a, v)
        if val != INF:
            pts.append(NPPoint(i, val))
    return pts


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence) -> list[NPPoint]:
    """Vertices of the non-increasing part of the lower convex hull.

    Monotone chain over points sorted by index; collinear points are
    dropped.  The chain stops at the rightmost point of minimal height.
    """
    if not points:
        return []
    pts = sorted(NPPoint(*p) for p in points)
    # one point per abscissa: the lowest
    uniq: list[NPPoint] = []
    for p in pts:
        if uniq and uniq[-1].index == p.index:
            continue
        uniq.append(p)
    hull: list[NPPoint] = []
    for p in uniq:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    out = [hull[0]]
    for p in hull[1:]:
        if p.val > out[-1].val:
            break
        out.append(p)
    return out


def newton_polygon(f: Series, v: Valuation, order: int) -> NewtonPolygon:
    return polygon_from_points(np_points(f, v, order), order)


def polygon_from_points(points: Sequence, window: int) -> NewtonPolygon:
    verts = lower_hull(points)
    edges = tuple(
        Edge(Fraction(b.val - a.val, b.index - a.index), b.index - a.index, a, b)
        for a, b in zip(verts, verts[1:])
    )
    censored = bool(edges) and edges[-1].slope == 0 and edges[-1].end.index >= window
    return NewtonPolygon(window, tuple(verts), edges, censored)


def f_star(f: Series, v: Valuation, s, order: int) -> tuple[int, bool]:
    """Horizontal length of the edge of slope ``s`` within the window.

    Returns ``(length, censored)``.  ``censored`` marks a flat edge that
    runs into the window boundary; its true length may be infinite.
    """
    return polygon_star(newton_polygon(f, v, order), s)


def polygon_star(poly: NewtonPolygon, s) -> tuple[int, bool]:
    s = Fraction(s)
    for k, e in enumerate(poly.edges):
        if e.slope == s:
            last = k == len(poly.edges) - 1
            return e.hlen, bool(last and poly.censored)
    return 0, False


def single_edge_test(f: Series, v: Valuation, k: int, n: int) -> bool:
    """Is the polygon one edge from ``(0, k)`` to ``(n, 0)``?

    True iff ``v(a_n) == 0`` and ``k*(n - i) < n*v(a_i)`` for every
    ``0 < i < n`` with ``a_i != 0``.
    """
    if valuation_of(f.coeff(n), v) != 0:
        return False
    for i in range(1, n):
        val = valuation_of(f.coeff(i), v)
        if val != INF and not k * (n - i) < n * val:
            return False
    return True
