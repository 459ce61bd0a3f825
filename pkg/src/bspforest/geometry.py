"""2D computational-geometry layer: convex polygons, directional widths,
direction sampling, half-plane splits, and the d-dimensional signed cut
test.

Angles parametrize the cut NORMAL: a direction ``theta`` in (0, pi] means
the unit normal ``n(theta) = (cos theta, sin theta)`` and the cut line
``{v : v . n(theta) = s}``.  Polygons are counter-clockwise and strictly
convex; 1- and 2-vertex polygons represent point- and segment-degenerate
hulls (a segment's perimeter is twice its length, the closed out-and-back
traversal).
"""

import math
from dataclasses import dataclass

import numpy as np

from .backend import GEOM_TOL, kernels as K

LEFT = 0
RIGHT = 1


class GeometryError(ValueError):
    pass


class Polygon2D:
    """Convex polygon wrapper over a ``(m, 2)`` float64 vertex array."""

    __slots__ = ("v",)

    def __init__(self, vertices):
        v = np.ascontiguousarray(vertices, dtype=np.float64)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 1:
            raise GeometryError("polygon vertices must be a (m, 2) array with m >= 1")
        self.v = v

    @property
    def n_vertices(self):
        return self.v.shape[0]

    @property
    def kind(self):
        m = self.v.shape[0]
        return "point" if m == 1 else ("segment" if m == 2 else "proper")

    @property
    def is_proper(self):
        return self.v.shape[0] >= 3

    def __repr__(self):
        return f"Polygon2D({self.v.tolist()})"

    def __eq__(self, other):
        return isinstance(other, Polygon2D) and self.v.shape == other.v.shape \
            and bool(np.all(self.v == other.v))


@dataclass(frozen=True)
class Cut:
    """One oblique cutting hyperplane.

    The cut lives in the dimension pair ``(d1, d2)`` (0-based, d1 < d2)
    and is axis-parallel in all other coordinates:
    ``{x : x[d1] cos(theta) + x[d2] sin(theta) = s}``.  ``t`` is the
    absolute cut time; children of a node cut at time t carry cut times
    strictly greater than t.
    """

    d1: int
    d2: int
    theta: float
    s: float
    t: float

    @property
    def normal(self):
        return math.cos(self.theta), math.sin(self.theta)


def convex_hull(points) -> Polygon2D:
    """Smallest convex polygon containing ``points`` (Graham-style monotone
    chain, O(n log n)).  Collinear input degrades to a segment, coincident
    input to a point."""
    pts = np.ascontiguousarray(points, dtype=np.float64)
    if pts.size == 0:
        raise GeometryError("empty point set")
    pts = pts.reshape(-1, 2)
    return Polygon2D(K.convex_hull_2d(pts))


def perimeter(p: Polygon2D) -> float:
    return K.poly_perimeter(p.v)


def area(p: Polygon2D) -> float:
    """Signed shoelace area (positive for CCW proper polygons, 0 when
    degenerate)."""
    return K.poly_area(p.v)


def projection_interval(p: Polygon2D, theta: float):
    """(min, max) of vertex projections onto the unit normal n(theta)."""
    return K.proj_interval(p.v, math.cos(theta), math.sin(theta))


def width(p: Polygon2D, theta: float) -> float:
    """Extent of the polygon's projection onto n(theta)."""
    lo, hi = projection_interval(p, theta)
    return hi - lo


def sample_direction(p: Polygon2D, rng) -> float:
    """Draw theta in (0, pi] with density width(p, theta) / perimeter(p).

    Exact two-stage inverse-CDF sampler: the width is the half-sum of
    |e_i| |cos(theta - phi_i)| over cyclic edges, so pick an edge with
    probability |e_i| / perimeter and then draw the angular offset from
    the cos/2 density.
    """
    if K.poly_perimeter(p.v) <= 0.0:
        raise GeometryError("degenerate domain")
    return K.mixture_theta(p.v, rng.random(), rng.random())


def side_of(cut: Cut, x) -> int:
    """Deterministic side test: LEFT when x[d1] cos + x[d2] sin - s < 0,
    RIGHT otherwise (the boundary ties RIGHT)."""
    nx, ny = cut.normal
    f = x[cut.d1] * nx + x[cut.d2] * ny - cut.s
    return LEFT if f < 0.0 else RIGHT


def split_polygon(p: Polygon2D, theta: float, s: float):
    """Split a proper polygon by the line ``v . n(theta) = s``.

    Returns (left, right) with ``left`` the piece on the negative side.
    The line must pass strictly between the polygon's extreme projections.
    """
    if not p.is_proper:
        raise GeometryError("cannot split a degenerate polygon")
    nx, ny = math.cos(theta), math.sin(theta)
    lo, hi = K.proj_interval(p.v, nx, ny)
    if not (lo < s < hi):
        raise GeometryError("non-separating cut")
    left, right = K.split_convex(p.v, nx, ny, s, GEOM_TOL)
    if len(left) < 3 or len(right) < 3:
        raise GeometryError("non-separating cut")
    return Polygon2D(left), Polygon2D(right)


def contains_point(p: Polygon2D, xy, tol: float = GEOM_TOL) -> bool:
    return K.point_in_hull(p.v, float(xy[0]), float(xy[1]), tol)


def centroid(p: Polygon2D):
    """Vertex centroid; lies strictly inside any strictly convex polygon."""
    return float(p.v[:, 0].mean()), float(p.v[:, 1].mean())


def diameter(p: Polygon2D) -> float:
    """Largest distance between two polygon points (attained at vertices)."""
    return K.poly_diameter(p.v)
