"""Pure-numpy implementations of the 2D geometry kernels.

This module mirrors ``_kernels_numba`` function for function.  It is the
fallback backend (selected with ``BSPFOREST_BACKEND=numpy``) and the
reference the numba kernels are tested against.  All polygons are
``(m, 2)`` float64 arrays in counter-clockwise order; degenerate hulls
have 1 (point) or 2 (segment) rows.
"""

import math

import numpy as np

# Absolute tolerance for collinearity / containment decisions.
GEOM_TOL = 1e-9


def convex_hull_2d(pts):
    """Strict convex hull of ``pts``, CCW, starting at the lexicographic
    minimum.  Collinear interior points are dropped; a collinear input
    yields its 2 endpoints, coincident input a single row."""
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    p = pts[order]
    keep = np.ones(len(p), dtype=bool)
    keep[1:] = (p[1:, 0] != p[:-1, 0]) | (p[1:, 1] != p[:-1, 1])
    p = p[keep]
    n = len(p)
    if n == 1:
        return p.copy()
    if n == 2:
        return p.copy()

    def chain(points):
        out = []
        for q in points:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (q[1] - oy) - (ay - oy) * (q[0] - ox) <= GEOM_TOL:
                    out.pop()
                else:
                    break
            out.append((q[0], q[1]))
        return out

    lower = chain(p)
    upper = chain(p[::-1])
    # Chains keep their endpoints, so a collinear input degrades to the
    # 2-vertex segment [lexicographic min, lexicographic max].
    return np.array(lower[:-1] + upper[:-1], dtype=np.float64)


def poly_perimeter(v):
    """Cyclic edge-length sum.  A 2-vertex segment counts both traversals
    (2*length); a single vertex has perimeter 0."""
    if len(v) == 1:
        return 0.0
    d = np.roll(v, -1, axis=0) - v
    return float(np.sum(np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])))


def poly_area(v):
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    return float(np.sum(x * yn - xn * y) / 2.0)


def proj_interval(v, nx, ny):
    t = v[:, 0] * nx + v[:, 1] * ny
    return float(t.min()), float(t.max())


def point_in_hull(v, px, py, tol):
    m = len(v)
    if m == 1:
        return abs(px - v[0, 0]) <= tol and abs(py - v[0, 1]) <= tol
    if m == 2:
        ax, ay = v[0]
        bx, by = v[1]
        dx, dy = bx - ax, by - ay
        L2 = dx * dx + dy * dy
        if L2 == 0.0:
            return abs(px - ax) <= tol and abs(py - ay) <= tol
        t = ((px - ax) * dx + (py - ay) * dy) / L2
        t = min(1.0, max(0.0, t))
        qx, qy = ax + t * dx, ay + t * dy
        return (px - qx) ** 2 + (py - qy) ** 2 <= tol * tol
    ex = np.roll(v[:, 0], -1) - v[:, 0]
    ey = np.roll(v[:, 1], -1) - v[:, 1]
    cross = ex * (py - v[:, 1]) - ey * (px - v[:, 0])
    return bool(np.all(cross >= -tol))


def hull_merge_point(v, px, py, tol):
    """Hull of ``v``'s vertices plus point ``(px, py)``.

    Returns ``(vertices, grew)``; the input array is returned unchanged
    (``grew=False``) when the point already lies in the hull."""
    if point_in_hull(v, px, py, tol):
        return v, False
    pts = np.empty((len(v) + 1, 2), dtype=np.float64)
    pts[:-1] = v
    pts[-1, 0] = px
    pts[-1, 1] = py
    return convex_hull_2d(pts), True


def split_convex(v, nx, ny, s, tol):
    """Clip a proper CCW convex polygon by the line ``x.n = s``.

    Returns ``(left, right)`` vertex arrays: ``left`` covers ``x.n < s``,
    ``right`` covers ``x.n > s``; vertices within ``tol`` of the line join
    both pieces.  Either side may come back with fewer than 3 vertices when
    the line only grazes the polygon."""
    f = v[:, 0] * nx + v[:, 1] * ny - s
    m = len(v)
    left = []
    right = []
    for i in range(m):
        j = (i + 1) % m
        fi, fj = f[i], f[j]
        if fi <= tol:
            left.append((v[i, 0], v[i, 1]))
        if fi >= -tol:
            right.append((v[i, 0], v[i, 1]))
        if (fi < -tol and fj > tol) or (fi > tol and fj < -tol):
            w = fi / (fi - fj)
            qx = v[i, 0] + w * (v[j, 0] - v[i, 0])
            qy = v[i, 1] + w * (v[j, 1] - v[i, 1])
            left.append((qx, qy))
            right.append((qx, qy))
    return (np.array(left, dtype=np.float64).reshape(-1, 2),
            np.array(right, dtype=np.float64).reshape(-1, 2))


def mixture_theta(v, u_edge, u_angle):
    """Inverse-CDF draw of a direction angle in ``(0, pi]`` with density
    proportional to the polygon's directional width.

    Picks a cyclic edge with probability proportional to its length, then
    draws the offset from that edge's direction angle with density
    cos/2 on (-pi/2, pi/2] and wraps mod pi."""
    m = len(v)
    d = np.roll(v, -1, axis=0) - v
    lengths = np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])
    total = float(lengths.sum())
    target = u_edge * total
    acc = 0.0
    k = m - 1
    for i in range(m):
        acc += lengths[i]
        if target < acc:
            k = i
            break
    phi = math.atan2(d[k, 1], d[k, 0])
    psi = math.asin(2.0 * u_angle - 1.0)
    theta = math.fmod(phi + psi, math.pi)
    if theta <= 0.0:
        theta += math.pi
    return theta


def poly_diameter(v):
    m = len(v)
    if m == 1:
        return 0.0
    best = 0.0
    for i in range(m - 1):
        dx = v[i + 1:, 0] - v[i, 0]
        dy = v[i + 1:, 1] - v[i, 1]
        d2 = float(np.max(dx * dx + dy * dy))
        if d2 > best:
            best = d2
    return math.sqrt(best)
