"""Two-robot configurations on a tree, product metrics, and trajectories.

A configuration is a pair of :class:`~treeplan.tree.PointOnTree`; ordered
pairs must stay at least ``eps`` apart, unordered pairs merely distinct.  A
:class:`BiPath` is a piecewise-uniform two-particle trajectory: between
consecutive breakpoints each particle moves along its unique tree geodesic
at constant speed.  Breakpoints are refined so each particle stays on a
single edge per sub-segment, which makes lengths and the exact separation
minimum computable in closed form (the separation is piecewise affine with
at most one interior kink per sub-segment, occurring only when both
particles share an edge).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .tree import Tree, PointOnTree, ArgumentError, TOL


class Metric(enum.Enum):
    L1 = "l1"
    L2 = "l2"

    @classmethod
    def parse(cls, s) -> "Metric":
        if isinstance(s, Metric):
            return s
        return cls(str(s).lower())


@dataclass(frozen=True)
class OrderedConfig:
    p1: PointOnTree
    p2: PointOnTree

    def swapped(self) -> "OrderedConfig":
        return OrderedConfig(self.p2, self.p1)

    def to_json(self):
        return {"p1": self.p1.to_json(), "p2": self.p2.to_json()}


@dataclass(frozen=True)
class UnorderedConfig:
    """Unordered pair, stored in canonical (lexicographic) order."""

    p1: PointOnTree
    p2: PointOnTree

    @classmethod
    def of(cls, a: PointOnTree, b: PointOnTree) -> "UnorderedConfig":
        if a == b:
            raise ArgumentError("unordered configuration needs distinct points")
        return cls(*sorted((a, b)))

    def points(self):
        return (self.p1, self.p2)

    def to_json(self):
        return {"p1": self.p1.to_json(), "p2": self.p2.to_json()}


def config_distance(tree: Tree, a, b, metric) -> float:
    """l1 or l2 product distance; unordered pairs take the best pairing."""
    metric = Metric.parse(metric)
    if isinstance(a, UnorderedConfig) != isinstance(b, UnorderedConfig):
        raise ArgumentError("cannot mix ordered and unordered configurations")
    if isinstance(a, UnorderedConfig):
        d_keep = _combine(tree.distance(a.p1, b.p1), tree.distance(a.p2, b.p2), metric)
        d_swap = _combine(tree.distance(a.p1, b.p2), tree.distance(a.p2, b.p1), metric)
        return min(d_keep, d_swap)
    return _combine(tree.distance(a.p1, b.p1), tree.distance(a.p2, b.p2), metric)


def _combine(d1: float, d2: float, metric: Metric) -> float:
    return d1 + d2 if metric is Metric.L1 else math.hypot(d1, d2)


# --------------------------------------------------------------------- #
# trajectories
# --------------------------------------------------------------------- #

@dataclass(frozen=True)
class BiPath:
    """Piecewise-uniform two-particle trajectory on a fixed tree.

    ``breakpoints`` is a tuple of ``(t, p1, p2)`` with ``0 = t_0 < ... <
    t_m = 1``; the stored form is refined (one edge per particle per
    sub-segment).  ``eps`` is the separation requirement (0 for unordered).
    """

    tree: Tree
    eps: float
    ordered: bool
    breakpoints: tuple

    @classmethod
    def from_legs(cls, tree: Tree, eps: float, ordered: bool, legs) -> "BiPath":
        """Build from timed legs ``(t0, t1, (a1, a2), (b1, b2))``.

        Within a leg each particle moves along its tree geodesic at constant
        speed.  Legs must tile [0, 1] in order.
        """
        bps = []
        for (t0, t1, (a1, a2), (b1, b2)) in legs:
            if t1 <= t0 + 1e-15:
                raise ArgumentError("leg times must be strictly increasing")
            g1 = tree.geodesic(a1, b1)
            g2 = tree.geodesic(a2, b2)
            len1 = g1[-1][1]
            len2 = g2[-1][1]
            fracs = {0.0, 1.0}
            for g, ln in ((g1, len1), (g2, len2)):
                if ln > TOL:
                    fracs.update(c / ln for _, c in g[1:-1])
            for f in sorted(fracs):
                t = t0 + f * (t1 - t0)
                q1 = tree.point_along(a1, b1, f * len1) if len1 > TOL else a1
                q2 = tree.point_along(a2, b2, f * len2) if len2 > TOL else a2
                if bps and abs(bps[-1][0] - t) <= 1e-15:
                    continue
                bps.append((t, q1, q2))
        if not bps or bps[0][0] > 1e-15:
            raise ArgumentError("legs must start at time 0")
        if abs(bps[-1][0] - 1.0) > 1e-12:
            raise ArgumentError("legs must end at time 1")
        return cls(tree, float(eps), bool(ordered), tuple(bps))

    @classmethod
    def constant(cls, tree: Tree, eps: float, ordered: bool, c) -> "BiPath":
        p1, p2 = (c.p1, c.p2)
        return cls(tree, float(eps), bool(ordered),
                   ((0.0, p1, p2), (1.0, p1, p2)))

    # -- endpoints ------------------------------------------------------ #

    @property
    def start(self):
        _, p1, p2 = self.breakpoints[0]
        return (p1, p2)

    @property
    def end(self):
        _, p1, p2 = self.breakpoints[-1]
        return (p1, p2)

    def reversed(self) -> "BiPath":
        rev = tuple((1.0 - t, p1, p2) for (t, p1, p2) in reversed(self.breakpoints))
        return BiPath(self.tree, self.eps, self.ordered, rev)

    # -- sampling ------------------------------------------------------- #

    def at(self, t: float):
        """Configuration at time t (linear within the refined segment)."""
        bps = self.breakpoints
        if t <= bps[0][0]:
            return (bps[0][1], bps[0][2])
        if t >= bps[-1][0]:
            return (bps[-1][1], bps[-1][2])
        lo, hi = 0, len(bps) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if bps[mid][0] <= t:
                lo = mid
            else:
                hi = mid
        (t0, a1, a2), (t1, b1, b2) = bps[lo], bps[hi]
        f = (t - t0) / (t1 - t0)
        return (_lerp(self.tree, a1, b1, f), _lerp(self.tree, a2, b2, f))

    def times(self):
        return [t for (t, _, _) in self.breakpoints]

    def to_json(self):
        return {
            "eps": self.eps,
            "ordered": self.ordered,
            "breakpoints": [
                {"t": t, "p1": p1.to_json(), "p2": p2.to_json()}
                for (t, p1, p2) in self.breakpoints
            ],
        }

    @classmethod
    def from_json(cls, tree: Tree, obj) -> "BiPath":
        bps = tuple(
            (float(rec["t"]), tree.point_from_json(rec["p1"]),
             tree.point_from_json(rec["p2"]))
            for rec in obj["breakpoints"]
        )
        return cls(tree, float(obj["eps"]), bool(obj["ordered"]), bps)


def _lerp(tree: Tree, a: PointOnTree, b: PointOnTree, f: float) -> PointOnTree:
    if a == b:
        return a
    return tree._interpolate_edge(a, b, f)


def path_length(path: BiPath, metric) -> float:
    """Trajectory length: per segment, l1 adds the two particle arc lengths
    and l2 takes their hypotenuse (speeds are constant per segment)."""
    metric = Metric.parse(metric)
    tree = path.tree
    total = 0.0
    for (_, a1, a2), (_, b1, b2) in zip(path.breakpoints, path.breakpoints[1:]):
        s1 = 0.0 if a1 == b1 else tree.distance(a1, b1)
        s2 = 0.0 if a2 == b2 else tree.distance(a2, b2)
        total += (s1 + s2) if metric is Metric.L1 else math.hypot(s1, s2)
    return total


def min_separation(path: BiPath) -> float:
    """Exact minimum over time of the inter-particle tree distance.

    Within each refined sub-segment the separation is affine unless both
    particles occupy one common edge, where a single interior kink (their
    crossing) can occur; the minimum is therefore attained at segment
    endpoints or at such a crossing, where it is zero.
    """
    tree = path.tree
    best = math.inf
    for (_, a1, a2), (_, b1, b2) in zip(path.breakpoints, path.breakpoints[1:]):
        best = min(best, tree.distance(a1, a2), tree.distance(b1, b2))
        e1 = None if a1 == b1 else tree.edge_between(a1, b1)
        e2 = None if a2 == b2 else tree.edge_between(a2, b2)
        edge = e1 if e1 is not None else e2
        if edge is None:
            continue
        # offsets of both particles on `edge`, when both are carried by it
        try:
            o1a, o1b = tree._offset_on(a1, edge), tree._offset_on(b1, edge)
            o2a, o2b = tree._offset_on(a2, edge), tree._offset_on(b2, edge)
        except ArgumentError:
            continue
        da, db = o1a - o2a, o1b - o2b
        if da == 0.0 or db == 0.0 or (da > 0.0) != (db > 0.0):
            best = 0.0
    return best


def feasible(path: BiPath, slack: float = TOL) -> bool:
    m = min_separation(path)
    if path.ordered:
        return m >= path.eps - slack
    return m > 0.0


def path_sup_distance(p: BiPath, q: BiPath, samples: int = 256) -> float:
    """Approximate sup over time of the l1 configuration distance.

    Samples the union of both paths' breakpoint times plus ``samples``
    uniform times; unordered paths take the best pairing at each sample.
    """
    if p.ordered != q.ordered:
        raise ArgumentError("paths must share ordered/unordered semantics")
    tree = p.tree
    ts = set(p.times()) | set(q.times())
    ts.update(i / samples for i in range(samples + 1))
    worst = 0.0
    for t in sorted(ts):
        a1, a2 = p.at(t)
        b1, b2 = q.at(t)
        d = tree.distance(a1, b1) + tree.distance(a2, b2)
        if not p.ordered:
            d = min(d, tree.distance(a1, b2) + tree.distance(a2, b1))
        worst = max(worst, d)
    return worst


# --------------------------------------------------------------------- #
# deformation retraction onto F_eps
# --------------------------------------------------------------------- #

def retract_to_feps(tree: Tree, a: OrderedConfig, eps: float) -> OrderedConfig:
    """Push a configuration of distinct points out to separation >= eps.

    Cases, in order: an endpoint at a vertex pushes the other to distance
    eps from that vertex; two points on one edge move apart uniformly (with
    a vertex stop); a vertex strictly between them pushes both outward with
    speeds proportional to their distances from it.  Inputs already >= eps
    apart are returned unchanged.  Requires eps <= shortest edge length.
    """
    if eps <= 0 or eps > tree.min_edge_length + TOL:
        raise ArgumentError("eps must be positive and at most the shortest edge")
    p1, p2 = tree.check_point(a.p1), tree.check_point(a.p2)
    d = tree.distance(p1, p2)
    if d >= eps - TOL:
        return OrderedConfig(p1, p2)
    if p1 == p2:
        raise ArgumentError("coincident points are outside the retractable set")

    if p1.at_vertex or p2.at_vertex:
        if p1.at_vertex and p2.at_vertex:
            return OrderedConfig(p1, p2)  # unreachable: d >= min edge >= eps
        anchor, mover, flip = (p1, p2, False) if p1.at_vertex else (p2, p1, True)
        moved = _push_from_vertex(tree, anchor.vertex, mover, eps)
        return OrderedConfig(moved, anchor) if flip else OrderedConfig(anchor, moved)

    if p1.edge == p2.edge:
        return _push_same_edge(tree, p1, p2, eps)

    # a vertex strictly between: d < eps <= min edge forces exactly one
    mid = tree.geodesic(p1, p2)
    inner = [pt for pt, _ in mid[1:-1]]
    v = inner[0].vertex
    d1 = tree.distance(p1, tree.vertex_point(v))
    d2 = tree.distance(p2, tree.vertex_point(v))
    scale = eps / (d1 + d2)
    q1 = _at_depth_from(tree, v, p1, d1 * scale)
    q2 = _at_depth_from(tree, v, p2, d2 * scale)
    return OrderedConfig(q1, q2)


def _push_from_vertex(tree: Tree, v: int, mover: PointOnTree, eps: float):
    return _at_depth_from(tree, v, mover, eps)


def _at_depth_from(tree: Tree, v: int, p: PointOnTree, depth: float) -> PointOnTree:
    """Point at ``depth`` from vertex v along the edge carrying p."""
    e = p.edge
    u, w, L = tree.edges[e]
    if v == u:
        return tree.edge_point(e, depth)
    if v == w:
        return tree.edge_point(e, L - depth)
    raise ArgumentError("point is not on an edge incident to the vertex")


def _push_same_edge(tree: Tree, p1, p2, eps):
    e = p1.edge
    u, v, L = tree.edges[e]
    (lo, hi, swapped) = (p1.offset, p2.offset, False) if p1.offset < p2.offset \
        else (p2.offset, p1.offset, True)
    need = 0.5 * (eps - (hi - lo))
    if need <= min(lo, L - hi):
        q_lo = tree.edge_point(e, lo - need)
        q_hi = tree.edge_point(e, hi + need)
    elif lo < L - hi:
        q_lo = tree.vertex_point(u)        # stopped at the vertex
        q_hi = tree.edge_point(e, eps)
    elif L - hi < lo:
        q_hi = tree.vertex_point(v)
        q_lo = tree.edge_point(e, L - eps)
    else:
        q_lo = tree.vertex_point(u)
        q_hi = tree.vertex_point(v)
    return OrderedConfig(q_hi, q_lo) if swapped else OrderedConfig(q_lo, q_hi)
