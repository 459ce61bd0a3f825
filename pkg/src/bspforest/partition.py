"""Recursive binary space partitioning over convex hulls.

A tree node covers its member points through one convex hull per
dimension pair (the d(d-1)/2 2D projections).  Cuts race an exponential
clock whose rate is the perimeter sum of those hulls; a cut realized
before the budget picks a dimension pair proportional to perimeter, a
direction proportional to directional width, and a uniform offset along
that direction, then splits the members by the signed cut test.

Cut times are stored as absolute times (root starts at 0) so that online
restructuring can re-parent subtrees without renumbering.
"""

import math
from functools import lru_cache

import numpy as np

from .backend import GEOM_TOL, kernels as K
from .config import TreeConfig
from .geometry import LEFT, Cut, GeometryError, Polygon2D, contains_point, side_of, split_polygon


class PartitionError(ValueError):
    pass


@lru_cache(maxsize=None)
def dim_pairs(d):
    """All 0-based dimension pairs (i, j), i < j, in lexicographic order."""
    return tuple((i, j) for i in range(d) for j in range(i + 1, d))


class HullBundle:
    """Per-dimension-pair convex hulls of a node's member points.

    ``polys[k]`` is the hull of the members' coordinates in pair
    ``dim_pairs(d)[k]``.  Only the member count is kept here; point ids
    live on leaf nodes (a parent's ids are the union of its leaves').
    """

    __slots__ = ("d", "polys", "n_points")

    def __init__(self, d, polys, n_points):
        self.d = d
        self.polys = polys
        self.n_points = n_points

    @classmethod
    def from_points(cls, pts):
        pts = np.ascontiguousarray(pts, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise PartitionError("empty point set")
        d = pts.shape[1]
        polys = [Polygon2D(K.convex_hull_2d(np.ascontiguousarray(pts[:, (i, j)])))
                 for i, j in dim_pairs(d)]
        return cls(d, polys, pts.shape[0])

    def perimeters(self):
        return np.array([K.poly_perimeter(p.v) for p in self.polys])

    def total_perimeter(self):
        return float(sum(K.poly_perimeter(p.v) for p in self.polys))


class Node:
    """Binary partition node.

    Leaves (``cut is None``) carry their member point ids and, in the
    learner, the leaf label statistics; internal nodes carry the cut and
    two children.
    """

    __slots__ = ("hull", "cut", "left", "right", "point_ids", "stats")

    def __init__(self, hull, cut=None, left=None, right=None, point_ids=None, stats=None):
        self.hull = hull
        self.cut = cut
        self.left = left
        self.right = right
        self.point_ids = point_ids
        self.stats = stats

    @property
    def is_leaf(self):
        return self.cut is None

    def child(self, side):
        return self.left if side == LEFT else self.right


def iter_nodes(root):
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        if not node.is_leaf:
            stack.append(node.right)
            stack.append(node.left)


def iter_leaves(root):
    for node in iter_nodes(root):
        if node.is_leaf:
            yield node


def count_cuts(root):
    return sum(1 for n in iter_nodes(root) if not n.is_leaf)


def tree_depth(root):
    """Number of edges on the longest root-to-leaf path."""
    if root.is_leaf:
        return 0
    return 1 + max(tree_depth(root.left), tree_depth(root.right))


def sample_cut_cost(rate, rng):
    """Exponential cut cost with the given rate; a non-positive rate means
    no cut can ever fire and yields the infinite-cost sentinel (no random
    draw is consumed)."""
    if rate <= 0.0:
        return math.inf
    return float(rng.exponential(1.0 / rate))


def sample_cut(hull, rng):
    """Draw (d1, d2, theta, s): pair proportional to hull perimeter, theta
    proportional to that pair hull's directional width, offset uniform on
    the projection interval."""
    perims = hull.perimeters()
    total = float(perims.sum())
    if total <= 0.0:
        raise PartitionError("degenerate hull")
    target = rng.random() * total
    acc = 0.0
    k = len(perims) - 1
    for i, w in enumerate(perims):
        acc += w
        if target < acc:
            k = i
            break
    d1, d2 = dim_pairs(hull.d)[k]
    poly = hull.polys[k]
    theta = K.mixture_theta(poly.v, rng.random(), rng.random())
    lo, hi = K.proj_interval(poly.v, math.cos(theta), math.sin(theta))
    s = lo + rng.random() * (hi - lo)
    return d1, d2, theta, s


def hull_cut(X, point_ids, tau, t0, cfg, rng, bundle=None):
    """Batch-sample a partition tree over the points ``X[point_ids]``.

    The recursion stops at nodes with at most ``cfg.min_points_to_cut``
    members, at zero hull perimeter, or when the exponential race passes
    the absolute budget ``tau``.  ``bundle`` short-circuits the root hull
    computation when the caller already maintains it.
    """
    ids = np.asarray(point_ids, dtype=np.int64)
    if ids.size == 0:
        raise PartitionError("empty point set")
    if tau < t0:
        raise PartitionError("budget precedes start time")
    if bundle is None:
        bundle = HullBundle.from_points(X[ids])
    node = Node(bundle, point_ids=[int(i) for i in ids])
    if ids.size <= cfg.min_points_to_cut:
        return node
    rate = cfg.rate_scale * bundle.total_perimeter()
    t = t0 + sample_cut_cost(rate, rng)
    if t >= tau:
        return node
    pts = X[ids]
    for _ in range(cfg.max_cut_retries):
        d1, d2, theta, s = sample_cut(bundle, rng)
        f = pts[:, d1] * math.cos(theta) + pts[:, d2] * math.sin(theta) - s
        left_mask = f < 0.0
        n_left = int(left_mask.sum())
        if 0 < n_left < ids.size:
            break
    else:
        # The continuous race almost surely separates; hitting the retry
        # cap means a floating-point-degenerate hull.  Keep the leaf.
        return node
    node.cut = Cut(d1, d2, theta, s, t)
    node.point_ids = None
    node.left = hull_cut(X, ids[left_mask], tau, t, cfg, rng)
    node.right = hull_cut(X, ids[~left_mask], tau, t, cfg, rng)
    return node


def sample_polygon_partition(domain, tau, rng, rate_scale=1.0):
    """Sample the pure 2D partition process on a convex polygon domain:
    the same exponential race as ``hull_cut`` but with children produced
    by geometric clipping and no point bookkeeping."""
    if not domain.is_proper:
        raise PartitionError("degenerate domain")
    if tau < 0.0:
        raise PartitionError("budget must be nonnegative")

    def rec(poly, t0):
        node = Node(HullBundle(2, [poly], 0))
        rate = rate_scale * K.poly_perimeter(poly.v)
        t = t0 + sample_cut_cost(rate, rng)
        if t >= tau:
            return node
        for _ in range(TreeConfig().max_cut_retries):
            _, _, theta, s = sample_cut(node.hull, rng)
            try:
                piece_l, piece_r = split_polygon(poly, theta, s)
            except GeometryError:
                continue
            break
        else:
            return node
        node.cut = Cut(0, 1, theta, s, t)
        node.left = rec(piece_l, t)
        node.right = rec(piece_r, t)
        return node

    return rec(domain, 0.0)


def line_slice(root, a, b):
    """Crossing parameters t in (0, 1) where the segment a + t(b - a)
    crosses a wall of a pure 2D partition, strictly increasing."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    domain = root.hull.polys[0]
    if not (contains_point(domain, a) and contains_point(domain, b)):
        raise PartitionError("segment outside domain")
    out = []

    def rec(node, tlo, thi):
        if node.is_leaf:
            return
        nx, ny = node.cut.normal
        fa = a[0] * nx + a[1] * ny - node.cut.s
        fb = b[0] * nx + b[1] * ny - node.cut.s
        denom = fb - fa
        tstar = fa / (fa - fb) if denom != 0.0 else math.inf
        if tlo < tstar < thi:
            low, high = (node.left, node.right) if denom > 0.0 else (node.right, node.left)
            rec(low, tlo, tstar)
            out.append(tstar)
            rec(high, tstar, thi)
        else:
            fm = fa + 0.5 * (tlo + thi) * denom
            rec(node.left if fm < 0.0 else node.right, tlo, thi)

    rec(root, 0.0, 1.0)
    return np.array(out)


def partition_to_doc(root, tau=None):
    """Preorder export: the cut list plus leaf point-id lists."""
    cuts = []
    leaves = []

    def rec(node):
        if node.is_leaf:
            leaves.append({"point_ids": list(node.point_ids) if node.point_ids else []})
            return
        c = node.cut
        cuts.append({"d1": c.d1, "d2": c.d2, "theta": c.theta, "s": c.s, "t": c.t})
        rec(node.left)
        rec(node.right)

    rec(root)
    doc = {"d": root.hull.d, "cuts": cuts, "leaves": leaves}
    if tau is not None:
        doc["tau"] = tau
    return doc


def _route(root, x):
    node = root
    while not node.is_leaf:
        node = node.child(side_of(node.cut, x))
    return node


def _match_vertex_sets(stored, recomputed, tol):
    if stored.shape[0] != recomputed.shape[0]:
        return False
    used = np.zeros(len(recomputed), dtype=bool)
    for p in stored:
        found = False
        for j, q in enumerate(recomputed):
            if not used[j] and abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol:
                used[j] = True
                found = True
                break
        if not found:
            return False
    return True


def verify_tree(root, X, max_time=None, tol=GEOM_TOL):
    """Check the structural node invariants against the point store.

    Returns a list of violation descriptions (empty when the tree is
    consistent): leaf ids partition the member set, routing each member
    from the root reaches the leaf storing it, cut times strictly
    increase along every path (and stay below ``max_time`` if given), and
    every node's pair hulls equal the recomputed hulls of its members.
    """
    problems = []
    seen = {}

    def member_ids(node):
        if node.is_leaf:
            return list(node.point_ids or [])
        return member_ids(node.left) + member_ids(node.right)

    def rec(node, t_parent, path):
        ids = member_ids(node)
        if node.hull.n_points != len(ids):
            problems.append(f"{path}: member count {node.hull.n_points} != {len(ids)} leaf ids")
        pts = X[np.asarray(ids, dtype=np.int64)]
        for k, (i, j) in enumerate(dim_pairs(node.hull.d)):
            recomputed = K.convex_hull_2d(np.ascontiguousarray(pts[:, (i, j)]))
            if not _match_vertex_sets(node.hull.polys[k].v, recomputed, 1e-9):
                problems.append(f"{path}: pair hull ({i},{j}) differs from recomputed hull")
        if node.is_leaf:
            if not ids:
                problems.append(f"{path}: empty leaf")
            for i in ids:
                if i in seen:
                    problems.append(f"point {i} stored in two leaves")
                seen[i] = path
            return
        c = node.cut
        if not (c.t > t_parent):
            problems.append(f"{path}: cut time {c.t} not above parent {t_parent}")
        if max_time is not None and c.t > max_time:
            problems.append(f"{path}: cut time {c.t} exceeds budget {max_time}")
        for side, child in ((LEFT, node.left), (1 - LEFT, node.right)):
            for i in member_ids(child):
                if side_of(c, X[i]) != side:
                    problems.append(f"{path}: point {i} on wrong side of cut")
        rec(node.left, c.t, path + "L")
        rec(node.right, c.t, path + "R")

    rec(root, 0.0, "*")
    for i in seen:
        leaf = _route(root, X[i])
        if i not in (leaf.point_ids or []):
            problems.append(f"point {i} does not route to its leaf")
    return problems
