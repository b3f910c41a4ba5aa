"""Planar representation charts for two-robot configurations on a star.

A chart assigns each particle a signed axis: the negative x-axis measures
particle 1's depth on one arm, the positive x-axis its depth on another,
and similarly the y-axis for particle 2.  On the subspace where each
particle stays within its two chart arms, the map to the plane is an
isometry for the l2 product metric, so shortest feasible trajectories
become taut polylines around a forbidden region.

The forbidden region is determined quadrant by quadrant: where the two
axes' arms coincide the particles share an arm and the constraint is a
diagonal band ``|depth1 - depth2| < eps``; where they differ it is the
diamond edge ``depth1 + depth2 < eps``.  Band boundary lines extend the
adjacent diamond edges, so the region is always convex (a diamond, a
capped half-strip, or a full strip) and taut paths bend only at the four
diamond corners ``(+-eps, 0), (0, +-eps)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .tree import TOL
from .config import Metric

_SEP_SLACK = 1e-9


@dataclass(frozen=True)
class Chart:
    """Axis arm assignment; ``None`` marks a half-axis the particle never
    uses (its quadrants are then treated as diamond)."""

    x_neg: int | None
    x_pos: int | None
    y_neg: int | None
    y_pos: int | None
    eps: float

    def __post_init__(self):
        if self.x_neg is not None and self.x_neg == self.x_pos:
            raise ValueError("x axis arms must differ")
        if self.y_neg is not None and self.y_neg == self.y_pos:
            raise ValueError("y axis arms must differ")

    def arm_x(self, x: float):
        return self.x_pos if x > 0 else self.x_neg

    def arm_y(self, y: float):
        return self.y_pos if y > 0 else self.y_neg

    def quadrant_is_band(self, sx: int, sy: int) -> bool:
        ax = self.x_pos if sx > 0 else self.x_neg
        ay = self.y_pos if sy > 0 else self.y_neg
        return ax is not None and ax == ay

    def separation(self, x: float, y: float) -> float:
        """Tree distance between the two represented particles."""
        u, v = abs(x), abs(y)
        if u == 0.0 or v == 0.0:
            return u + v
        if self.quadrant_is_band(1 if x > 0 else -1, 1 if y > 0 else -1):
            return abs(u - v)
        return u + v

    def point_allowed(self, x: float, y: float) -> bool:
        if x > TOL and self.x_pos is None:
            return False
        if x < -TOL and self.x_neg is None:
            return False
        if y > TOL and self.y_pos is None:
            return False
        if y < -TOL and self.y_neg is None:
            return False
        return True

    def obstacle_json(self):
        shapes = {}
        for sx, sy, name in ((-1, -1, "q3"), (-1, 1, "q2"), (1, 1, "q1"), (1, -1, "q4")):
            shapes[name] = "band" if self.quadrant_is_band(sx, sy) else "diamond"
        return {"eps": self.eps, "quadrants": shapes,
                "corners": [(-self.eps, 0.0), (0.0, self.eps),
                            (self.eps, 0.0), (0.0, -self.eps)]}


def segment_min_separation(chart: Chart, p, q) -> float:
    """Exact minimum of the represented separation along segment p->q.

    Splits at axis crossings; within a closed quadrant the separation is
    affine except in band quadrants, where ``depth1 - depth2`` may change
    sign (separation 0 at the crossing).  Returns -inf if the segment
    enters a half-plane the chart does not represent.
    """
    (x0, y0), (x1, y1) = p, q
    for (xx, yy) in (p, q):
        if not chart.point_allowed(xx, yy):
            return -math.inf
    ts = [0.0, 1.0]
    for c0, c1 in ((x0, x1), (y0, y1)):
        if (c0 < 0 < c1) or (c1 < 0 < c0):
            ts.append(-c0 / (c1 - c0))
    ts.sort()
    best = math.inf
    for t0, t1 in zip(ts, ts[1:]):
        xa, ya = x0 + t0 * (x1 - x0), y0 + t0 * (y1 - y0)
        xb, yb = x0 + t1 * (x1 - x0), y0 + t1 * (y1 - y0)
        best = min(best, chart.separation(xa, ya), chart.separation(xb, yb))
        xm, ym = 0.5 * (xa + xb), 0.5 * (ya + yb)
        sx = 1 if xm > 0 else -1
        sy = 1 if ym > 0 else -1
        if chart.quadrant_is_band(sx, sy):
            fa = sx * xa - sy * ya
            fb = sx * xb - sy * yb
            if fa == 0.0 or fb == 0.0 or (fa > 0) != (fb > 0):
                best = 0.0
    return best


def _polyline_feasible(chart: Chart, pts) -> bool:
    return all(
        segment_min_separation(chart, a, b) >= chart.eps - _SEP_SLACK
        for a, b in zip(pts, pts[1:])
    )


def polyline_length(pts, metric) -> float:
    metric = Metric.parse(metric)
    total = 0.0
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        dx, dy = abs(x1 - x0), abs(y1 - y0)
        total += dx + dy if metric is Metric.L1 else math.hypot(dx, dy)
    return total


@lru_cache(maxsize=64)
def _corner_sequences(eps: float):
    """Contiguous runs of obstacle corners, both boundary directions."""
    cyc = ((-eps, 0.0), (0.0, eps), (eps, 0.0), (0.0, -eps))
    seqs = {()}
    for order in (cyc, tuple(reversed(cyc))):
        for start in range(4):
            for length in range(1, 5):
                seqs.add(tuple(order[(start + i) % 4] for i in range(length)))
    return tuple(sorted(seqs))


def crossing_order(pts) -> int:
    """Which particle first reaches/crosses the center along the polyline.

    Returns 1 if the x coordinate reaches 0 strictly first, 2 if y does,
    0 on a tie (including paths that start on an axis).
    """
    def first_hit(idx):
        acc = 0.0
        if pts[0][idx] >= -TOL:
            return 0.0
        for a, b in zip(pts, pts[1:]):
            seg = math.hypot(b[0] - a[0], b[1] - a[1])
            ca, cb = a[idx], b[idx]
            if cb >= -TOL:
                if abs(cb - ca) < 1e-300:
                    return acc + seg
                t = max(0.0, min(1.0, (0.0 - ca) / (cb - ca)))
                return acc + t * seg
            acc += seg
        return math.inf
    tx, ty = first_hit(0), first_hit(1)
    if tx + 1e-12 < ty:
        return 1
    if ty + 1e-12 < tx:
        return 2
    return 0


@dataclass(frozen=True)
class PlanarPath:
    points: tuple
    length: float
    l1_length: float
    l2_length: float
    order: int


def taut_candidates(chart: Chart, a, b, metric) -> list[PlanarPath]:
    """All feasible corner polylines from a to b, sorted by length.

    The obstacle is convex with vertices among the four diamond corners, so
    this family contains a shortest feasible path in both metrics.
    """
    metric = Metric.parse(metric)
    if chart.separation(*a) < chart.eps - 1e-7 or \
            chart.separation(*b) < chart.eps - 1e-7:
        raise ValueError("endpoint lies inside the forbidden region")
    out = []
    seen = set()
    for seq in _corner_sequences(chart.eps):
        pts = [a]
        for c in seq:
            if math.hypot(c[0] - pts[-1][0], c[1] - pts[-1][1]) > 1e-12:
                pts.append(c)
        if math.hypot(b[0] - pts[-1][0], b[1] - pts[-1][1]) > 1e-12 or len(pts) == 1:
            pts.append(b)
        key = tuple(pts)
        if key in seen:
            continue
        seen.add(key)
        if not _polyline_feasible(chart, pts):
            continue
        out.append(PlanarPath(
            points=tuple(pts),
            length=polyline_length(pts, metric),
            l1_length=polyline_length(pts, Metric.L1),
            l2_length=polyline_length(pts, Metric.L2),
            order=crossing_order(pts),
        ))
    out.sort(key=lambda c: (c.length, len(c.points), c.points))
    return out


def planar_geodesic(chart: Chart, a, b, metric, order: int | None = None):
    """Shortest feasible polyline from a to b, optionally restricted to the
    homotopy class where particle ``order`` crosses the center first.

    Returns None when the obstacle separates a from b (two opposite band
    quadrants), or when no candidate matches the requested class.
    """
    cands = taut_candidates(chart, a, b, metric)
    if order is not None:
        cands = [c for c in cands if c.order == order or c.order == 0]
    return cands[0] if cands else None


def taut_best(chart: Chart, a, b, order: int | None = None):
    """(l2-shortest PlanarPath, minimal l1 length) over one enumeration.

    The returned polyline is the locally l2-taut representative of the
    class; the l1 minimum ranges over the same corner family (an l1-minimal
    path deforms onto corner bends without growing).
    """
    cands = taut_candidates(chart, a, b, Metric.L2)
    if order is not None:
        cands = [c for c in cands if c.order == order or c.order == 0]
    if not cands:
        return None, math.inf
    return cands[0], min(c.l1_length for c in cands)


# --------------------------------------------------------------------- #
# chart <-> star configurations
# --------------------------------------------------------------------- #

class NotRepresentable(ValueError):
    """The configuration leaves the chart's arms."""


def chart_of(star, a, b, eps: float) -> Chart:
    """Chart for planning from a to b: per particle, the negative axis is
    the start arm and the positive axis the destination arm.

    A particle starting at the center is charted on its destination arm; a
    particle whose endpoints share one arm gets a filler positive arm, kept
    distinct from every used arm when the star allows it (so dead quadrants
    stay diamond-shaped and the forbidden region convex).
    """
    used = []
    for (p, q) in ((a.p1, b.p1), (a.p2, b.p2)):
        ap, _ = star.star_coord(p)
        bp, _ = star.star_coord(q)
        neg = ap if ap is not None else bp
        pos = bp if bp is not None and bp != neg else None
        used.append([neg, pos])
    arms = set(range(1, star.n_leaves + 1))
    for axis in used:
        if axis[0] is None:       # both endpoints at the center
            axis[0] = min(arms)
        if axis[1] is None:
            others = {used[0][0], used[0][1], used[1][0], used[1][1]} - {None}
            free = sorted(arms - others)
            axis[1] = free[0] if free else min(a for a in arms if a != axis[0])
    return Chart(x_neg=used[0][0], x_pos=used[0][1],
                 y_neg=used[1][0], y_pos=used[1][1], eps=eps)


def embed_point(star, chart: Chart, p, axis: str) -> float:
    arm, depth = star.star_coord(p)
    if depth <= TOL:
        return 0.0
    neg, pos = (chart.x_neg, chart.x_pos) if axis == "x" else (chart.y_neg, chart.y_pos)
    if arm == neg:
        return -depth
    if arm == pos:
        return depth
    raise NotRepresentable(f"point on arm {arm} not on chart axis {axis}")


def embed(star, chart: Chart, config):
    return (embed_point(star, chart, config.p1, "x"),
            embed_point(star, chart, config.p2, "y"))


def unembed_point(star, chart: Chart, coord: float, axis: str):
    neg, pos = (chart.x_neg, chart.x_pos) if axis == "x" else (chart.y_neg, chart.y_pos)
    if abs(coord) <= TOL:
        return star.arm_point(neg if neg is not None else pos, 0.0)
    arm = pos if coord > 0 else neg
    if arm is None:
        raise NotRepresentable(f"coordinate {coord} on an unused half-axis")
    return star.arm_point(arm, abs(coord))


def unembed(star, chart: Chart, xy):
    from .config import OrderedConfig
    return OrderedConfig(unembed_point(star, chart, xy[0], "x"),
                         unembed_point(star, chart, xy[1], "y"))


def polyline_to_legs(star, chart: Chart, pts):
    """Timed legs realizing a chart polyline, parametrized proportionally
    to l2 arc length (equal splits for a zero-length path)."""
    configs = [unembed(star, chart, p) for p in pts]
    seg_len = [math.hypot(q[0] - p[0], q[1] - p[1]) for p, q in zip(pts, pts[1:])]
    total = sum(seg_len)
    legs = []
    if total <= TOL:
        c = configs[0]
        return [(0.0, 1.0, (c.p1, c.p2), (c.p1, c.p2))]
    t = 0.0
    for (c0, c1, s) in zip(configs, configs[1:], seg_len):
        if s <= 1e-15:
            continue
        t1 = t + s / total
        legs.append((t, t1, (c0.p1, c0.p2), (c1.p1, c1.p2)))
        t = t1
    # close any float gap at the end
    t0, t1, ca, cb = legs[-1]
    legs[-1] = (t0, 1.0, ca, cb)
    return legs
