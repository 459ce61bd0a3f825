"""Numba-compiled twins of the kernels in ``_kernels_numpy``.

Same contracts, same arithmetic, loop-structured for small arrays: hulls
here typically have a handful of vertices and the kernels sit inside the
partition sampler's inner loop, where per-call overhead dominates numpy's
vectorized forms.
"""

import math

import numpy as np
from numba import njit

GEOM_TOL = 1e-9


@njit(cache=True)
def _lex_order(pts):
    # Stable sort on x, then insertion-sort ties on y: strict
    # lexicographic order matching np.lexsort((y, x)).
    n = pts.shape[0]
    idx = np.argsort(pts[:, 0], kind="mergesort")
    i = 0
    while i < n:
        j = i + 1
        while j < n and pts[idx[j], 0] == pts[idx[i], 0]:
            j += 1
        for a in range(i + 1, j):
            key = idx[a]
            b = a - 1
            while b >= i and pts[idx[b], 1] > pts[key, 1]:
                idx[b + 1] = idx[b]
                b -= 1
            idx[b + 1] = key
        i = j
    return idx


@njit(cache=True)
def convex_hull_2d(pts):
    n = pts.shape[0]
    idx = _lex_order(pts)
    # Drop exact duplicates.
    p = np.empty((n, 2))
    m = 0
    for k in range(n):
        x = pts[idx[k], 0]
        y = pts[idx[k], 1]
        if m == 0 or x != p[m - 1, 0] or y != p[m - 1, 1]:
            p[m, 0] = x
            p[m, 1] = y
            m += 1
    if m <= 2:
        return p[:m].copy()

    hull = np.empty((2 * m, 2))
    k = 0
    for i in range(m):
        while k >= 2 and ((hull[k - 1, 0] - hull[k - 2, 0]) * (p[i, 1] - hull[k - 2, 1])
                          - (hull[k - 1, 1] - hull[k - 2, 1]) * (p[i, 0] - hull[k - 2, 0])) <= GEOM_TOL:
            k -= 1
        hull[k, 0] = p[i, 0]
        hull[k, 1] = p[i, 1]
        k += 1
    t = k + 1
    for i in range(m - 2, -1, -1):
        while k >= t and ((hull[k - 1, 0] - hull[k - 2, 0]) * (p[i, 1] - hull[k - 2, 1])
                          - (hull[k - 1, 1] - hull[k - 2, 1]) * (p[i, 0] - hull[k - 2, 0])) <= GEOM_TOL:
            k -= 1
        hull[k, 0] = p[i, 0]
        hull[k, 1] = p[i, 1]
        k += 1
    # The last push duplicates the starting vertex.
    return hull[:k - 1].copy()


@njit(cache=True)
def poly_perimeter(v):
    m = v.shape[0]
    if m == 1:
        return 0.0
    total = 0.0
    for i in range(m):
        j = (i + 1) % m
        dx = v[j, 0] - v[i, 0]
        dy = v[j, 1] - v[i, 1]
        total += math.sqrt(dx * dx + dy * dy)
    return total


@njit(cache=True)
def poly_area(v):
    m = v.shape[0]
    if m < 3:
        return 0.0
    acc = 0.0
    for i in range(m):
        j = (i + 1) % m
        acc += v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
    return acc / 2.0


@njit(cache=True)
def proj_interval(v, nx, ny):
    lo = v[0, 0] * nx + v[0, 1] * ny
    hi = lo
    for i in range(1, v.shape[0]):
        t = v[i, 0] * nx + v[i, 1] * ny
        if t < lo:
            lo = t
        elif t > hi:
            hi = t
    return lo, hi


@njit(cache=True)
def point_in_hull(v, px, py, tol):
    m = v.shape[0]
    if m == 1:
        return abs(px - v[0, 0]) <= tol and abs(py - v[0, 1]) <= tol
    if m == 2:
        ax, ay = v[0, 0], v[0, 1]
        dx, dy = v[1, 0] - ax, v[1, 1] - ay
        L2 = dx * dx + dy * dy
        if L2 == 0.0:
            return abs(px - ax) <= tol and abs(py - ay) <= tol
        t = ((px - ax) * dx + (py - ay) * dy) / L2
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        qx, qy = ax + t * dx, ay + t * dy
        return (px - qx) ** 2 + (py - qy) ** 2 <= tol * tol
    for i in range(m):
        j = (i + 1) % m
        ex = v[j, 0] - v[i, 0]
        ey = v[j, 1] - v[i, 1]
        if ex * (py - v[i, 1]) - ey * (px - v[i, 0]) < -tol:
            return False
    return True


@njit(cache=True)
def hull_merge_point(v, px, py, tol):
    if point_in_hull(v, px, py, tol):
        return v, False
    pts = np.empty((v.shape[0] + 1, 2))
    pts[:-1] = v
    pts[-1, 0] = px
    pts[-1, 1] = py
    return convex_hull_2d(pts), True


@njit(cache=True)
def split_convex(v, nx, ny, s, tol):
    m = v.shape[0]
    left = np.empty((m + 2, 2))
    right = np.empty((m + 2, 2))
    nl = 0
    nr = 0
    for i in range(m):
        j = (i + 1) % m
        fi = v[i, 0] * nx + v[i, 1] * ny - s
        fj = v[j, 0] * nx + v[j, 1] * ny - s
        if fi <= tol:
            left[nl, 0] = v[i, 0]
            left[nl, 1] = v[i, 1]
            nl += 1
        if fi >= -tol:
            right[nr, 0] = v[i, 0]
            right[nr, 1] = v[i, 1]
            nr += 1
        if (fi < -tol and fj > tol) or (fi > tol and fj < -tol):
            w = fi / (fi - fj)
            qx = v[i, 0] + w * (v[j, 0] - v[i, 0])
            qy = v[i, 1] + w * (v[j, 1] - v[i, 1])
            left[nl, 0] = qx
            left[nl, 1] = qy
            nl += 1
            right[nr, 0] = qx
            right[nr, 1] = qy
            nr += 1
    return left[:nl].copy(), right[:nr].copy()


@njit(cache=True)
def mixture_theta(v, u_edge, u_angle):
    m = v.shape[0]
    total = poly_perimeter(v)
    target = u_edge * total
    acc = 0.0
    k = m - 1
    for i in range(m):
        j = (i + 1) % m
        dx = v[j, 0] - v[i, 0]
        dy = v[j, 1] - v[i, 1]
        acc += math.sqrt(dx * dx + dy * dy)
        if target < acc:
            k = i
            break
    j = (k + 1) % m
    phi = math.atan2(v[j, 1] - v[k, 1], v[j, 0] - v[k, 0])
    psi = math.asin(2.0 * u_angle - 1.0)
    theta = math.fmod(phi + psi, math.pi)
    if theta <= 0.0:
        theta += math.pi
    return theta


@njit(cache=True)
def poly_diameter(v):
    m = v.shape[0]
    best = 0.0
    for i in range(m - 1):
        for j in range(i + 1, m):
            dx = v[j, 0] - v[i, 0]
            dy = v[j, 1] - v[i, 1]
            d2 = dx * dx + dy * dy
            if d2 > best:
                best = d2
    return math.sqrt(best)
