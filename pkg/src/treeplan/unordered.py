"""Unordered two-robot geodesic planning on trees in the l1 metric.

The four endpoints (two source dots, "black"; two destination dots,
"white") span a convex hull subtree of one of five shapes: a path (I), a
tripod with the extra dot at the branch vertex (Y1) or inside a branch
(Y2), four branches at one vertex (X), or two branch vertices (H).  Arm
numbers (smallest leaf label through an edge, relative to a vertex) order
the branches; I paths through branch vertices order their endpoints the
same way.

Every rule moves each particle straight along its tree geodesic to its
matched destination, either one after the other or simultaneously, so each
emitted trajectory realizes the minimal matching cost and is an
l1-geodesic.  The partition into rule cells follows the hull shape and dot
colors; the interval and 3-arm star cases have their own dedicated
planners (one cell for an interval, two for the 3-arm star, three
otherwise).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .tree import Tree, PointOnTree, ArgumentError, TOL
from .config import Metric, UnorderedConfig, BiPath, path_length

BLACK = "B"
WHITE = "W"


@dataclass(frozen=True)
class Dot:
    point: PointOnTree
    color: str


@dataclass(frozen=True)
class Branch:
    """One hull branch at a branch vertex: its arm number and the dots on
    it, ordered by increasing distance from the vertex."""
    arm_number: int
    dots: tuple

    @property
    def colors(self):
        return tuple(d.color for d in self.dots)


@dataclass(frozen=True)
class HullDiagram:
    kind: str                      # Y1 | Y2 | X | H | I1 | I2 | I3
    dots: tuple
    path_dots: tuple = ()          # I kinds: dots ordered along the path
    end_arms: tuple | None = None  # I kinds: endpoint arm numbers (or None)
    branch_vertices: tuple = ()
    branches: tuple = ()           # per branch vertex: tuple of Branch
    vertex_dots: tuple = ()        # dots at branch_vertices[0] (Y1)

    def to_json(self):
        out = {"type": self.kind,
               "dots": [{"point": d.point.to_json(), "color": d.color}
                        for d in self.dots]}
        if self.kind.startswith("I"):
            out["path_order"] = [d.color for d in self.path_dots]
            out["end_arm_numbers"] = self.end_arms
        else:
            out["branch_vertices"] = list(self.branch_vertices)
            out["branches"] = [[{"arm_number": br.arm_number,
                                 "colors": list(br.colors)}
                                for br in bs] for bs in self.branches]
        return out


@dataclass(frozen=True)
class UnorderedPlan:
    path: BiPath
    diagram: HullDiagram
    eset: str
    rule_id: int
    l1_length: float
    t0: float | None = None
    near_boundary: bool = False

    def to_json(self):
        return {"diagram": self.diagram.to_json(), "eset": self.eset,
                "rule_id": self.rule_id, "l1_length": self.l1_length,
                "t0": self.t0, "near_boundary": self.near_boundary,
                "path": self.path.to_json()}


# --------------------------------------------------------------------- #
# hull construction
# --------------------------------------------------------------------- #

def _dots_of(a: UnorderedConfig, b: UnorderedConfig):
    return (Dot(a.p1, BLACK), Dot(a.p2, BLACK), Dot(b.p1, WHITE), Dot(b.p2, WHITE))


def _hull_nodes(tree: Tree, positions):
    """Distinct hull nodes: the positions plus all triple medians (medians
    within 1e-9 of an existing node are snapped onto it)."""
    nodes = list(dict.fromkeys(positions))
    extra = []
    n = len(nodes)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                m = tree.median(nodes[i], nodes[j], nodes[k])
                if all(tree.distance(m, x) > 1e-9 for x in nodes) and \
                        all(tree.distance(m, x) > 1e-9 for x in extra):
                    extra.append(m)
    return nodes + extra


def _hull_adjacency(tree: Tree, nodes):
    adj = {p: [] for p in nodes}
    for i, x in enumerate(nodes):
        for y in nodes[i + 1:]:
            dxy = tree.distance(x, y)
            between = any(
                z not in (x, y)
                and tree.distance(x, z) + tree.distance(z, y) <= dxy + 1e-9
                and tree.distance(x, z) > 1e-12 and tree.distance(z, y) > 1e-12
                for z in nodes)
            if not between:
                adj[x].append(y)
                adj[y].append(x)
    return adj


def hull_classify(tree: Tree, a: UnorderedConfig, b: UnorderedConfig) -> HullDiagram:
    """Hull diagram of the four endpoints (coincident black/white dots are
    kept as two dots at one position)."""
    dots = _dots_of(a, b)
    positions = [d.point for d in dots]
    nodes = _hull_nodes(tree, positions)
    adj = _hull_adjacency(tree, nodes)
    branch_pts = [p for p in nodes if len(adj[p]) >= 3]

    if not branch_pts:
        return _classify_path(tree, dots, nodes, adj)

    if len(branch_pts) == 1:
        v = branch_pts[0]
        if not v.at_vertex:
            raise ArgumentError("hull branch point must be a tree vertex")
        deg = len(adj[v])
        at_v = tuple(d for d in dots if d.point == v)
        branches = _branches_at(tree, dots, v, adj[v])
        if deg == 4:
            return HullDiagram(kind="X", dots=dots, branch_vertices=(v.vertex,),
                               branches=(branches,))
        if at_v:
            return HullDiagram(kind="Y1", dots=dots, branch_vertices=(v.vertex,),
                               branches=(branches,), vertex_dots=at_v)
        return HullDiagram(kind="Y2", dots=dots, branch_vertices=(v.vertex,),
                           branches=(branches,))

    v0, v1 = branch_pts
    if not (v0.at_vertex and v1.at_vertex):
        raise ArgumentError("hull branch points must be tree vertices")
    b0 = _branches_at(tree, dots, v0, adj[v0], exclude_toward=v1)
    b1 = _branches_at(tree, dots, v1, adj[v1], exclude_toward=v0)
    return HullDiagram(kind="H", dots=dots,
                       branch_vertices=(v0.vertex, v1.vertex),
                       branches=(b0, b1))


def _branches_at(tree, dots, v, neighbors, exclude_toward=None):
    """Hull branches at v holding dots, sorted by arm number."""
    branches = []
    seen_dirs = []
    for n in neighbors:
        if exclude_toward is not None and _same_side(tree, v, n, exclude_toward):
            continue
        if any(_same_side(tree, v, n, d) for d in seen_dirs):
            continue
        seen_dirs.append(n)
        on_branch = [d for d in dots
                     if d.point != v and _same_side(tree, v, n, d.point)]
        on_branch.sort(key=lambda d: tree.distance(v, d.point))
        arm = tree.arm_number_toward(v.vertex, n)
        branches.append(Branch(arm_number=arm, dots=tuple(on_branch)))
    branches.sort(key=lambda br: br.arm_number)
    return tuple(branches)


def _same_side(tree, v, n, p):
    """True iff p leaves v in the same direction as n does."""
    if p == v:
        return False
    return tree.median(v, n, p) != v


def _classify_path(tree, dots, nodes, adj):
    ends = [p for p in nodes if len(adj[p]) == 1]
    if len(ends) != 2:
        # all four dots coincide pairwise into a single point pair path
        ends = [nodes[0], nodes[-1]]
    e0, e1 = ends
    # interior branch vertices of the tree strictly inside the path
    interior = []
    for pt, cum in tree.geodesic(e0, e1)[1:-1]:
        if pt.at_vertex and tree.degree(pt.vertex) >= 3:
            interior.append(pt)
    end_arms = None
    if interior:
        a0 = tree.arm_number_toward(interior[0].vertex, e0) \
            if e0 != interior[0] else None
        a1 = tree.arm_number_toward(interior[-1].vertex, e1) \
            if e1 != interior[-1] else None
        if a0 is not None and a1 is not None:
            end_arms = (a0, a1)
    path_dots = _order_dots_along(tree, dots, e0)
    ends_colors = (_colors_at(path_dots, e0), _colors_at(path_dots, e1))
    kind = "I3"
    if end_arms is not None:
        small_first = end_arms[0] < end_arms[1]
        small, large = (ends_colors if small_first else ends_colors[::-1])
        if WHITE in small and BLACK in large:
            kind = "I1"
        elif BLACK in small and WHITE in large:
            kind = "I2"
    return HullDiagram(kind=kind, dots=dots, path_dots=path_dots,
                       end_arms=end_arms)


def _order_dots_along(tree, dots, origin):
    """Dots sorted by distance from the path end ``origin``; a coincident
    black/white pair is ordered black first."""
    return tuple(sorted(
        dots, key=lambda d: (tree.distance(origin, d.point),
                             0 if d.color == BLACK else 1)))


def _colors_at(path_dots, p):
    return {d.color for d in path_dots if d.point == p}


# --------------------------------------------------------------------- #
# E-set assignment (general trees)
# --------------------------------------------------------------------- #

def assign_eset(diagram: HullDiagram) -> str:
    """E1 / E2 / E3 membership of a general-tree diagram."""
    kind = diagram.kind
    if kind == "I1":
        return "E1"
    if kind == "I2":
        return "E2"
    if kind in ("I3", "X", "H"):
        return "E3"
    branches = diagram.branches[0]
    if kind == "Y2":
        doubled = next(br for br in branches if len(br.dots) == 2)
        if doubled.colors[0] != doubled.colors[1]:
            return "E3"
    lowest = branches[0]
    colors = set(lowest.colors)
    if colors == {BLACK, WHITE}:
        # doubly-occupied lowest arm with mixed colors is already E3 above;
        # here only a black-preceded tie at a shared position remains
        return "E1"
    return "E1" if BLACK in colors else "E2"


# --------------------------------------------------------------------- #
# motion assembly
# --------------------------------------------------------------------- #

def _particles_for(a: UnorderedConfig, matching):
    """Order the two (black, white) motion pairs by the particle starting
    at a.p1 first, for a stable BiPath layout."""
    (b1, w1), (b2, w2) = matching
    if b1.point == a.p1:
        return (b1.point, w1.point), (b2.point, w2.point)
    return (b2.point, w2.point), (b1.point, w1.point)


def _sequential_path(tree, a, first, second) -> BiPath:
    """Move ``first=(black, white)`` fully, then ``second``; time is split
    proportionally to arc length and zero-length motions are skipped."""
    (fb, fw), (sb, sw) = first, second
    arc1 = tree.distance(fb.point, fw.point)
    arc2 = tree.distance(sb.point, sw.point)
    p1_first = fb.point == a.p1
    legs = []
    if arc1 + arc2 <= TOL:
        c = (a.p1, a.p2)
        return BiPath.from_legs(tree, 0.0, False, [(0.0, 1.0, c, c)])
    t_split = arc1 / (arc1 + arc2)
    if p1_first:
        start = (fb.point, sb.point)
        mid = (fw.point, sb.point)
        end = (fw.point, sw.point)
    else:
        start = (sb.point, fb.point)
        mid = (sb.point, fw.point)
        end = (sw.point, fw.point)
    if arc1 > TOL:
        legs.append((0.0, t_split if arc2 > TOL else 1.0, start, mid))
    if arc2 > TOL:
        legs.append((t_split if arc1 > TOL else 0.0, 1.0, mid, end))
    return BiPath.from_legs(tree, 0.0, False, legs)


def _simultaneous_path(tree, a, matching) -> BiPath:
    (m1, m2) = _particles_for(a, matching)
    start = (m1[0], m2[0])
    end = (m1[1], m2[1])
    return BiPath.from_legs(tree, 0.0, False, [(0.0, 1.0, start, end)])


def _single(br: Branch) -> Dot:
    return br.dots[0]


def _find_branch(branches, rank) -> Branch:
    return branches[rank]


# --------------------------------------------------------------------- #
# general-tree planner
# --------------------------------------------------------------------- #

def plan_unordered(tree: Tree, a: UnorderedConfig,
                   b: UnorderedConfig) -> UnorderedPlan:
    """The three-rule planner for trees which are neither intervals nor
    3-arm stars; rule ids 0, 1, 2 are the E1, E2, E3 cells."""
    if tree.is_interval():
        raise ArgumentError("interval tree: use plan_interval")
    if _is_y_graph(tree):
        raise ArgumentError("3-arm star: use plan_y")
    diagram = hull_classify(tree, a, b)
    eset = assign_eset(diagram)
    path, near = _general_motion(tree, a, diagram, eset)
    return UnorderedPlan(path=path, diagram=diagram, eset=eset,
                         rule_id={"E1": 0, "E2": 1, "E3": 2}[eset],
                         l1_length=path_length(path, Metric.L1),
                         near_boundary=near)


def _is_y_graph(tree: Tree) -> bool:
    return tree.star_center is not None and tree.n_leaves == 3


def _general_motion(tree, a, diagram: HullDiagram, eset):
    kind = diagram.kind
    near = len({d.point for d in diagram.dots}) < 4   # coincident dots
    if kind in ("I1", "I2"):
        first, second = _i_sequential_matching(diagram.path_dots)
        return _sequential_path(tree, a, first, second), near
    if kind == "I3":
        return _i3_motion(tree, a, diagram), near
    if kind == "X":
        branches = diagram.branches[0]
        blacks = sorted((br for br in branches if _single(br).color == BLACK),
                        key=lambda br: br.arm_number)
        whites = sorted((br for br in branches if _single(br).color == WHITE),
                        key=lambda br: br.arm_number)
        first = (_single(blacks[0]), _single(whites[0]))
        second = (_single(blacks[1]), _single(whites[1]))
        return _sequential_path(tree, a, first, second), near
    if kind == "H":
        return _h_motion(tree, a, diagram), near
    if kind == "Y1":
        first, second = _y1_matching(diagram)
        return _sequential_path(tree, a, first, second), near
    # Y2
    branches = diagram.branches[0]
    doubled = next(br for br in branches if len(br.dots) == 2)
    if eset == "E3":
        inner, outer = doubled.dots
        db = inner if inner.color == BLACK else outer
        dw = outer if db is inner else inner
        singles = [br for br in branches if len(br.dots) == 1]
        sb = next(_single(br) for br in singles if _single(br).color == BLACK)
        sw = next(_single(br) for br in singles if _single(br).color == WHITE)
        return _simultaneous_path(tree, a, ((db, dw), (sb, sw))), near
    first, second = _y2_sequential_matching(branches, doubled, eset)
    return _sequential_path(tree, a, first, second), near


def _i_sequential_matching(path_dots):
    """Orient the path with the black end first; move the inner black to
    the white end, then the black end to the inner white."""
    dots = list(path_dots)
    if not _pure_color(dots, dots[0].point, BLACK):
        dots = dots[::-1]
    blacks = [d for d in dots if d.color == BLACK]
    whites = [d for d in dots if d.color == WHITE]
    first = (blacks[-1], whites[-1])   # rightmost black to rightmost white
    second = (blacks[0], whites[0])
    return first, second


def _pure_color(dots, point, color):
    cs = [d.color for d in dots if d.point == point]
    return all(c == color for c in cs)


def _i3_motion(tree, a, diagram: HullDiagram):
    dots = list(diagram.path_dots)
    colors = "".join(d.color for d in dots)
    if colors in ("BWWB", "WBBW"):
        blacks = [d for d in dots if d.color == BLACK]
        whites = [d for d in dots if d.color == WHITE]
        # adjacent pairing preserves the order along the path
        matching = ((blacks[0], whites[0]), (blacks[1], whites[1]))
        return _simultaneous_path(tree, a, matching)
    first, second = _i_sequential_matching(dots)
    return _sequential_path(tree, a, first, second)


def _h_motion(tree, a, diagram: HullDiagram):
    b0, b1 = diagram.branches
    c0 = {_single(br).color for br in b0}
    if len(c0) == 2:
        # mixed colors at each vertex: simultaneous local motions
        pairs = []
        for bs in (b0, b1):
            blk = next(_single(br) for br in bs if _single(br).color == BLACK)
            wht = next(_single(br) for br in bs if _single(br).color == WHITE)
            pairs.append((blk, wht))
        return _simultaneous_path(tree, a, tuple(pairs))
    allb = sorted((br for br in b0 + b1 if _single(br).color == BLACK),
                  key=lambda br: br.arm_number)
    allw = sorted((br for br in b0 + b1 if _single(br).color == WHITE),
                  key=lambda br: br.arm_number)
    first = (_single(allb[0]), _single(allw[0]))
    second = (_single(allb[1]), _single(allw[1]))
    return _sequential_path(tree, a, first, second)


def _y2_sequential_matching(branches, doubled: Branch, eset):
    """The six same-colored-doubled-arm cases; ranks are positions in the
    arm-number order (0 = smallest)."""
    rank = branches.index(doubled)
    inner, outer = doubled.dots
    singles = [br for br in branches if br is not doubled]
    s0, s1 = singles        # by arm-number order
    if eset == "E1":
        if rank == 1:       # doubled whites on the middle arm
            return (_single(s0), outer), (_single(s1), inner)
        if rank == 2:       # doubled whites on the largest arm
            return (_single(s1), outer), (_single(s0), inner)
        # doubled blacks on the smallest arm
        return (inner, _single(s1)), (outer, _single(s0))
    if rank == 1:           # doubled blacks on the middle arm
        return (inner, _single(s1)), (outer, _single(s0))
    if rank == 2:           # doubled blacks on the largest arm
        return (inner, _single(s0)), (outer, _single(s1))
    # doubled whites on the smallest arm
    return (_single(s0), outer), (_single(s1), inner)


def _y1_matching(diagram: HullDiagram):
    """Y1 motions as the inner-dot-at-the-vertex limits of the Y2 rules."""
    branches = diagram.branches[0]
    vdot = diagram.vertex_dots[0]
    if len(diagram.vertex_dots) > 1:
        vdot = next(d for d in diagram.vertex_dots if d.color == BLACK)
    arm_colors = tuple(_single(br).color for br in branches)
    s = [_single(br) for br in branches]
    if vdot.color == WHITE:
        if arm_colors == (BLACK, WHITE, BLACK):
            return (s[0], s[1]), (s[2], vdot)
        if arm_colors == (BLACK, BLACK, WHITE):
            return (s[1], s[2]), (s[0], vdot)
        # (W, B, B)
        return (s[1], s[0]), (s[2], vdot)
    if arm_colors == (BLACK, WHITE, WHITE):
        return (vdot, s[2]), (s[0], s[1])
    if arm_colors == (WHITE, BLACK, WHITE):
        return (vdot, s[2]), (s[1], s[0])
    # (W, W, B)
    return (vdot, s[0]), (s[2], s[1])


# --------------------------------------------------------------------- #
# interval planner
# --------------------------------------------------------------------- #

def plan_interval(tree: Tree, a: UnorderedConfig,
                  b: UnorderedConfig) -> UnorderedPlan:
    """Single-rule planner on an interval: simultaneous uniform motion with
    the order-preserving matching (which never collides)."""
    if not tree.is_interval():
        raise ArgumentError("tree is not an interval")
    origin = tree.vertex_point(tree.leaf_order[0])
    key = lambda p: tree.distance(origin, p)
    blacks = sorted((a.p1, a.p2), key=key)
    whites = sorted((b.p1, b.p2), key=key)
    matching = ((Dot(blacks[0], BLACK), Dot(whites[0], WHITE)),
                (Dot(blacks[1], BLACK), Dot(whites[1], WHITE)))
    path = _simultaneous_path(tree, a, matching)
    diagram = hull_classify(tree, a, b)
    return UnorderedPlan(path=path, diagram=diagram, eset="interval",
                         rule_id=0, l1_length=path_length(path, Metric.L1))


# --------------------------------------------------------------------- #
# 3-arm star planner
# --------------------------------------------------------------------- #

def _next_cw(arm: int) -> int:
    return arm % 3 + 1


def plan_y(tree: Tree, a: UnorderedConfig, b: UnorderedConfig) -> UnorderedPlan:
    """Two-rule planner on the 3-arm star (rule 0 = E1', rule 1 = E2')."""
    if not _is_y_graph(tree):
        raise ArgumentError("tree is not a 3-arm star")
    diagram = hull_classify(tree, a, b)
    kind = diagram.kind
    if kind.startswith("I"):
        return _plan_y_i(tree, a, b, diagram)
    if kind == "Y1":
        return _plan_y_y1(tree, a, diagram)
    return _plan_y_y2(tree, a, diagram)


def _arm_of(tree, p: PointOnTree):
    arm, dep = tree.star_coord(p)
    return arm if dep > TOL else None


def _plan_y_i(tree, a, b, diagram):
    dots = list(diagram.path_dots)
    e0, e1 = dots[0].point, dots[-1].point
    arm0, arm1 = _arm_of(tree, e0), _arm_of(tree, e1)
    center_inside = (arm0 is not None and arm1 is not None and arm0 != arm1)
    eset = "E1'"
    if center_inside:
        # canonical reading: from the arm whose clockwise successor holds
        # the other endpoint
        if _next_cw(arm0) != arm1:
            dots = dots[::-1]
        colors = [d.color for d in dots]
        if colors[0] == WHITE and colors[-1] == BLACK:
            eset = "E2'"
    blacks = [d for d in dots if d.color == BLACK]
    whites = [d for d in dots if d.color == WHITE]
    matching = ((blacks[0], whites[0]), (blacks[1], whites[1]))
    path = _simultaneous_path(tree, a, matching)
    return UnorderedPlan(path=path, diagram=diagram, eset=eset,
                         rule_id=0 if eset == "E1'" else 1,
                         l1_length=path_length(path, Metric.L1))


def _y_branch_arms(tree, diagram):
    """Map star arm index -> Branch for the diagram's branches."""
    v = tree.vertex_point(diagram.branch_vertices[0])
    out = {}
    for br in diagram.branches[0]:
        arm, _ = tree.star_coord(br.dots[0].point)
        out[arm] = br
    return out


def _plan_y_y1(tree, a, diagram):
    by_arm = _y_branch_arms(tree, diagram)
    vdot = diagram.vertex_dots[0]
    if len(diagram.vertex_dots) > 1:
        vdot = next(d for d in diagram.vertex_dots if d.color == BLACK)
    if vdot.color == WHITE:
        w_arm = next(arm for arm, br in by_arm.items()
                     if _single(br).color == WHITE)
        p1_black = _single(by_arm[_prev_cw(w_arm)])
        p2_black = _single(by_arm[_next_cw(w_arm)])
        matching = ((p1_black, _single(by_arm[w_arm])), (p2_black, vdot))
        t0 = 1.0
    else:
        b_arm = next(arm for arm, br in by_arm.items()
                     if _single(br).color == BLACK)
        matching = ((_single(by_arm[b_arm]), _single(by_arm[_next_cw(b_arm)])),
                    (vdot, _single(by_arm[_prev_cw(b_arm)])))
        t0 = 0.0
    path = _simultaneous_path(tree, a, matching)
    return UnorderedPlan(path=path, diagram=diagram, eset="E2'", rule_id=1,
                         l1_length=path_length(path, Metric.L1), t0=t0)


def _prev_cw(arm: int) -> int:
    return (arm - 2) % 3 + 1


def diagram_a_t0(d1, d2, d3, d4) -> float:
    """Center-crossing time of the waiting particle when the doubled arm
    holds the whites: late enough to let the sweep through, but the plain
    uniform crossing time when that is already late enough (so d4 = 0 or
    d2 = 0 degenerate to uniform motion)."""
    return max(2 * d1 / (2 * d1 + d3), d2 / (d2 + d4)) if d2 + d4 > 0 else 1.0


def diagram_b_t0(d1, d2, d3, d4) -> float:
    """Center-crossing time of the inner particle when the doubled arm
    holds the blacks: early enough to clear the way for the deep black."""
    return min(d1 / (d1 + 2 * d3), d2 / (d2 + d4)) if d2 + d4 > 0 else 0.0


def _plan_y_y2(tree, a, diagram):
    by_arm = _y_branch_arms(tree, diagram)
    doubled_arm = next(arm for arm, br in by_arm.items() if len(br.dots) == 2)
    doubled = by_arm[doubled_arm]
    inner, outer = doubled.dots
    if inner.color != outer.color:
        # mixed pair: simultaneous within-arm and across-the-center motions
        db = inner if inner.color == BLACK else outer
        dw = outer if db is inner else inner
        singles = {arm: _single(br) for arm, br in by_arm.items()
                   if arm != doubled_arm}
        sb = next(d for d in singles.values() if d.color == BLACK)
        sw = next(d for d in singles.values() if d.color == WHITE)
        w_arm = next(arm for arm, d in singles.items() if d is sw)
        eset = "E1'" if _next_cw(doubled_arm) == w_arm else "E2'"
        path = _simultaneous_path(tree, a, ((db, dw), (sb, sw)))
        return UnorderedPlan(path=path, diagram=diagram, eset=eset,
                             rule_id=0 if eset == "E1'" else 1,
                             l1_length=path_length(path, Metric.L1))
    v = tree.vertex_point(diagram.branch_vertices[0])
    if inner.color == WHITE:
        # diagram A: point 1 sweeps from the clockwise-previous arm to the
        # deep white; point 2 waits until t0 before crossing the center
        d3 = tree.distance(v, outer.point)
        d4 = tree.distance(v, inner.point)
        black1 = _single(by_arm[_prev_cw(doubled_arm)])
        black2 = _single(by_arm[_next_cw(doubled_arm)])
        d1 = tree.distance(v, black1.point)
        d2 = tree.distance(v, black2.point)
        t0 = diagram_a_t0(d1, d2, d3, d4)
        path = _y_timed_path(tree, a, (black1, outer), (black2, inner), v, t0)
    else:
        # diagram B: the deep black crosses toward the clockwise-next arm;
        # the inner black clears the center by t0
        d1 = tree.distance(v, outer.point)
        d2 = tree.distance(v, inner.point)
        white1 = _single(by_arm[_next_cw(doubled_arm)])
        white2 = _single(by_arm[_prev_cw(doubled_arm)])
        d3 = tree.distance(v, white1.point)
        d4 = tree.distance(v, white2.point)
        t0 = diagram_b_t0(d1, d2, d3, d4)
        path = _y_timed_path(tree, a, (outer, white1), (inner, white2), v, t0)
    return UnorderedPlan(path=path, diagram=diagram, eset="E2'", rule_id=1,
                         l1_length=path_length(path, Metric.L1), t0=t0)


def _y_timed_path(tree, a, motion1, motion2, v, t0) -> BiPath:
    """Point 1 moves uniformly over [0, 1]; point 2 moves uniformly to the
    center on [0, t0] and on to its destination on [t0, 1]."""
    (b1, w1), (b2, w2) = motion1, motion2
    arc1 = tree.distance(b1.point, w1.point)
    p1_is_first = b1.point == a.p1
    mid1 = tree.point_along(b1.point, w1.point, t0 * arc1)
    legs = []
    if p1_is_first:
        legs.append((0.0, t0, (b1.point, b2.point), (mid1, v)))
        legs.append((t0, 1.0, (mid1, v), (w1.point, w2.point)))
    else:
        legs.append((0.0, t0, (b2.point, b1.point), (v, mid1)))
        legs.append((t0, 1.0, (v, mid1), (w2.point, w1.point)))
    return BiPath.from_legs(tree, 0.0, False, legs)


# --------------------------------------------------------------------- #
# dispatcher
# --------------------------------------------------------------------- #

def plan_any(tree: Tree, a: UnorderedConfig, b: UnorderedConfig) -> UnorderedPlan:
    if tree.is_interval():
        return plan_interval(tree, a, b)
    if _is_y_graph(tree):
        return plan_y(tree, a, b)
    return plan_unordered(tree, a, b)
