"""Deterministic SVG output: trees, hull dots, trajectories, charts.

Output is plain SVG text assembled from the inputs only (identical inputs
give byte-identical files, apart from the fixed banner comment).
"""

from __future__ import annotations

import math

from .tree import Tree, PointOnTree
from .chart import Chart

BANNER = "<!-- treeplan render v1 -->"


def _layout(tree: Tree):
    """Planar positions for all vertices: angular wedges by leaf count."""
    root = tree.star_center if tree.star_center is not None else tree.leaf_order[0]
    pos = {root: (0.0, 0.0)}
    leaf_wt = {}

    def count(v, parent):
        total = 0
        for e, w in tree._adj[v]:
            if w == parent:
                continue
            total += count(w, v)
        leaf_wt[(v, parent)] = max(total, 1)
        return max(total, 1)

    count(root, -1)

    def place(v, parent, lo, hi, px, py):
        span = hi - lo
        acc = lo
        for e, w in tree._adj[v]:
            if w == parent:
                continue
            frac = leaf_wt[(w, v)] / leaf_wt[(v, parent)]
            wedge = span * frac
            ang = acc + wedge / 2
            L = tree.edges[e][2]
            pos[w] = (px + L * math.cos(ang), py - L * math.sin(ang))
            place(w, v, acc, acc + wedge, *pos[w])
            acc += wedge
        return

    place(root, -1, math.pi / 2, math.pi / 2 + 2 * math.pi, 0.0, 0.0)
    return pos


def _xy(tree, pos, p: PointOnTree):
    if p.at_vertex:
        return pos[p.vertex]
    u, v, L = tree.edges[p.edge]
    f = p.offset / L
    (x0, y0), (x1, y1) = pos[u], pos[v]
    return (x0 + f * (x1 - x0), y0 + f * (y1 - y0))


def _viewbox(points, pad=1.5):
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    lo_x, hi_x = min(xs) - pad, max(xs) + pad
    lo_y, hi_y = min(ys) - pad, max(ys) + pad
    return f"{lo_x:.3f} {lo_y:.3f} {hi_x - lo_x:.3f} {hi_y - lo_y:.3f}"


def render_tree(tree: Tree, dots=None, path=None, scale=28) -> str:
    """SVG of the tree; ``dots`` are (point, color) markers and ``path`` a
    BiPath whose two particle traces are drawn in red and blue."""
    pos = _layout(tree)
    parts = [BANNER]
    body = []
    for (u, v, L) in tree.edges:
        (x0, y0), (x1, y1) = pos[u], pos[v]
        body.append(f'<line x1="{x0:.3f}" y1="{y0:.3f}" x2="{x1:.3f}" '
                    f'y2="{y1:.3f}" stroke="#555" stroke-width="0.08"/>')
    for v in range(tree.n_vertices):
        x, y = pos[v]
        body.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="0.12" fill="#555"/>')
        if v in tree.leaf_number:
            body.append(f'<text x="{x + 0.25:.3f}" y="{y:.3f}" font-size="0.5" '
                        f'fill="#333">{tree.leaf_number[v]}</text>')
    if path is not None:
        for idx, color in ((1, "#c33"), (2, "#36c")):
            pts = [_xy(tree, pos, bp[idx]) for bp in path.breakpoints]
            pl = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
            body.append(f'<polyline points="{pl}" fill="none" stroke="{color}" '
                        f'stroke-width="0.1" stroke-dasharray="0.25 0.12"/>')
    if dots:
        for point, color in dots:
            x, y = _xy(tree, pos, point)
            fill = "#000" if color == "B" else "#fff"
            body.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="0.22" '
                        f'fill="{fill}" stroke="#000" stroke-width="0.05"/>')
    vb = _viewbox(list(pos.values()))
    parts.append(f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}" '
                 f'width="640" height="640">')
    parts.extend(body)
    parts.append('</svg>')
    return "\n".join(parts)


def render_chart(chart: Chart, polylines=(), extent=None) -> str:
    """SVG of a representation plane: axes, forbidden region, polylines."""
    eps = chart.eps
    if extent is None:
        extent = 4 * eps
        for poly in polylines:
            for (x, y) in poly:
                extent = max(extent, abs(x) + eps, abs(y) + eps)
    e, R = eps, extent
    body = [BANNER]
    body.append(f'<svg xmlns="http://www.w3.org/2000/svg" '
                f'viewBox="{-R:.3f} {-R:.3f} {2 * R:.3f} {2 * R:.3f}" '
                f'width="600" height="600">')
    # forbidden region: diamond plus band strips per quadrant
    shapes = []
    shapes.append(f'<polygon points="{-e},0 0,{-e} {e},0 0,{e}" ')
    for sx, sy in ((-1, -1), (-1, 1), (1, 1), (1, -1)):
        if chart.quadrant_is_band(sx, sy):
            # strip between the two 45-degree lines through the corners,
            # clipped to the quadrant
            c1 = (sx * e, 0)
            c2 = (0, sy * e)
            far1 = (sx * R, sy * (R - e))
            far2 = (sx * (R - e), sy * R)
            shapes.append(
                f'<polygon points="{c1[0]},{c1[1]} {far1[0]},{far1[1]} '
                f'{sx * R},{sy * R} {far2[0]},{far2[1]} {c2[0]},{c2[1]} 0,0" ')
    for s in shapes:
        body.append(s + 'fill="#fbb" stroke="none" opacity="0.7"/>')
    body.append(f'<line x1="{-R}" y1="0" x2="{R}" y2="0" stroke="#999" '
                f'stroke-width="0.02"/>')
    body.append(f'<line x1="0" y1="{-R}" x2="0" y2="{R}" stroke="#999" '
                f'stroke-width="0.02"/>')
    for i, poly in enumerate(polylines):
        pl = " ".join(f"{x:.4f},{-y:.4f}" for x, y in poly)
        body.append(f'<polyline points="{pl}" fill="none" stroke="#36c" '
                    f'stroke-width="0.06"/>')
        for (x, y) in poly:
            body.append(f'<circle cx="{x:.4f}" cy="{-y:.4f}" r="0.09" '
                        f'fill="#36c"/>')
    body.append('</svg>')
    return "\n".join(body)
