"""Ordered two-robot geodesic planning on star graphs (l1 and l2).

Configuration pairs (a, b) are classified by how many arms the four points
occupy and by relative orientation:

* ``X1+`` / ``X1-``: all four on one closed arm, orientations agree/disagree;
* ``X2+`` / ``X2-``: exactly two open arms occupied, agree/disagree.  The
  disagreeing case splits further: ``opp`` (each particle's start shares an
  open arm with the other's destination, so both cross in opposite
  directions), ``three-on-arm`` (one particle confined to an arm it must
  vacate), and ``split`` (both cross in the same direction);
* ``X3``: three open arms occupied;
* ``X4``: four open arms occupied (stars with k >= 4 only).

Direct classes (X1+, X2+, X3) have a unique geodesic found in a single
planar chart.  Disagreeing classes need an orientation switch: one particle
parks at depth exactly eps on an empty arm while the other crosses the
center.  When the switching particle starts and ends on the same arm the
whole maneuver fits one wrap-around chart; when it must cross (opp and
split cases) the path is a two-leg concatenation through the waypoint
(switcher at eps on the empty arm, other particle at the center), each leg
a taut chart geodesic.  X4 pairs need no switch but split into two
homotopy classes by which particle crosses the center first.

Selection follows fixed tie-breaking rules so each rule id is a continuous
planner on its cell: arm indices are cyclic in leaf-number order, ties
between type-1/type-2 lengths are detected at relative tolerance 1e-9, and
the l1 planner selects by l1 length but always realizes the locally
l2-taut path of the selected class.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .tree import Tree, ArgumentError, TOL
from .config import Metric, OrderedConfig, BiPath
from .chart import Chart, chart_of, embed, taut_best, polyline_to_legs

EQ_RTOL = 1e-9
NEAR_TIE_FACTOR = 10.0


class InfeasibleConfigError(ArgumentError):
    """A configuration violates the separation requirement."""


class StarClassKind(enum.Enum):
    X1_PLUS = "X1_plus"
    X1_MINUS = "X1_minus"
    X2_PLUS = "X2_plus"
    X2_MINUS_OPP = "X2_minus_opp"
    X2_MINUS_THREE_ON_ARM = "X2_minus_three_on_arm"
    X2_MINUS_SPLIT = "X2_minus_split"
    X3 = "X3"
    X4 = "X4"


DIRECT_KINDS = {StarClassKind.X1_PLUS, StarClassKind.X2_PLUS, StarClassKind.X3}
FORCED_KINDS = {StarClassKind.X2_MINUS_THREE_ON_ARM, StarClassKind.X2_MINUS_SPLIT}


@dataclass(frozen=True)
class StarClass:
    kind: StarClassKind
    arms_occupied: tuple
    orientation: str            # "agree" | "disagree" | "n/a"
    forced_particle: int | None # switching particle when the class forces it

    @property
    def name(self) -> str:
        return self.kind.value


@dataclass
class Candidate:
    """A candidate geodesic: lengths are exact for both metrics; the
    trajectory itself (always the locally l2-taut realization) is built
    lazily on first access."""

    kind: str                   # "direct" | "switch" | "type"
    particle: int | None        # crossing-first / switching particle
    switch_arm: int | None
    l1_length: float
    l2_length: float
    partner_arm: int | None = None   # X1-: the other particle's switch arm
    polylines: tuple = field(repr=False, default=())
    _realize: object = field(repr=False, default=None, compare=False)
    _path: object = field(repr=False, default=None, compare=False)

    @property
    def path(self) -> BiPath:
        if self._path is None:
            self._path = self._realize()
        return self._path

    def length(self, metric) -> float:
        return self.l1_length if Metric.parse(metric) is Metric.L1 else self.l2_length


@dataclass(frozen=True)
class PlanResult:
    chosen: Candidate
    star_class: StarClass
    metric: Metric
    eq: bool | None             # type-1/type-2 tie (X2_minus_opp and X4 only)
    rule_id: int
    in_cut_locus: bool
    near_tie: bool
    all_candidates: tuple

    @property
    def class_name(self) -> str:
        base = self.star_class.name
        if self.eq is None:
            return base
        suffix = "eq" if self.eq else "n"
        return f"{base}_{suffix}_{self.metric.value}"

    def to_json(self):
        return {
            "class": self.class_name,
            "metric": self.metric.value,
            "rule_id": self.rule_id,
            "in_cut_locus": self.in_cut_locus,
            "near_tie": self.near_tie,
            "chosen": {
                "kind": self.chosen.kind,
                "particle": self.chosen.particle,
                "switch_arm": self.chosen.switch_arm,
                "l1_length": self.chosen.l1_length,
                "l2_length": self.chosen.l2_length,
                "path": self.chosen.path.to_json(),
            },
            "candidates": [
                {"kind": c.kind, "particle": c.particle, "switch_arm": c.switch_arm,
                 "l1_length": c.l1_length, "l2_length": c.l2_length}
                for c in self.all_candidates
            ],
        }


# --------------------------------------------------------------------- #
# classification
# --------------------------------------------------------------------- #

def _coords(star: Tree, a: OrderedConfig, b: OrderedConfig):
    return [star.star_coord(p) for p in (a.p1, a.p2, b.p1, b.p2)]


def _check_feasible(star, eps, a, b):
    for c in (a, b):
        if star.distance(c.p1, c.p2) < eps - 1e-12:
            raise InfeasibleConfigError(
                f"configuration separation {star.distance(c.p1, c.p2)} < eps")


def classify(star: Tree, eps: float, a: OrderedConfig, b: OrderedConfig) -> StarClass:
    """Classify an ordered planning instance on a star with k >= 3 arms."""
    if star.star_center is None:
        raise ArgumentError("ordered planning requires a star graph")
    _check_feasible(star, eps, a, b)
    coords = _coords(star, a, b)
    occupied = tuple(sorted({arm for arm, dep in coords if arm is not None and dep > TOL}))
    m = len(occupied)

    if m <= 1:
        arm = occupied[0] if occupied else 1
        sgn = _axis_orientation(coords, plus_arm=arm, minus_arm=None)
        kind = StarClassKind.X1_PLUS if sgn else StarClassKind.X1_MINUS
        return StarClass(kind, occupied, "agree" if sgn else "disagree", None)

    if m == 2:
        i, j = occupied
        agree = _axis_orientation(coords, plus_arm=i, minus_arm=j)
        if agree:
            return StarClass(StarClassKind.X2_PLUS, occupied, "agree", None)
        (a1, _), (a2, _), (b1, _), (b2, _) = coords
        d1a, d2a, d1b, d2b = (c[1] for c in coords)
        if a1 is not None and a1 == b2 and a2 is not None and a2 == b1:
            return StarClass(StarClassKind.X2_MINUS_OPP, occupied, "disagree", None)
        conf1 = _confined_arm(coords[0], coords[2])
        conf2 = _confined_arm(coords[1], coords[3])
        if conf1 is not None and conf2 is None:
            return StarClass(StarClassKind.X2_MINUS_THREE_ON_ARM, occupied,
                             "disagree", 1)
        if conf2 is not None and conf1 is None:
            return StarClass(StarClassKind.X2_MINUS_THREE_ON_ARM, occupied,
                             "disagree", 2)
        # both particles cross in the same direction: the inner one switches
        forced = 1 if d1a < d2a else 2
        return StarClass(StarClassKind.X2_MINUS_SPLIT, occupied, "disagree", forced)

    if m == 3:
        return StarClass(StarClassKind.X3, occupied, "n/a", None)
    return StarClass(StarClassKind.X4, occupied, "n/a", None)


def _axis_orientation(coords, plus_arm, minus_arm) -> bool:
    """True iff a's relative order along the (closed) one- or two-arm axis
    matches b's.  Center points sit at coordinate 0."""
    def coord(arm, dep):
        if arm is None or dep <= TOL:
            return 0.0
        return dep if arm == plus_arm else -dep
    x = [coord(arm, dep) for arm, dep in coords]
    return ((x[0] - x[1]) > 0) == ((x[2] - x[3]) > 0)


def _confined_arm(start, end):
    """The single closed arm holding both endpoints of a particle, if any."""
    arms = {arm for arm, dep in (start, end) if arm is not None and dep > TOL}
    if len(arms) == 0:
        return 0        # pinned at the center: confined everywhere
    if len(arms) == 1:
        return arms.pop()
    return None


# --------------------------------------------------------------------- #
# candidate construction
# --------------------------------------------------------------------- #

def _fill_chart(star: Tree, xneg, xpos, yneg, ypos, eps) -> Chart:
    """Complete a chart, filling missing half-axes with arms kept distinct
    from every used arm when possible (dead quadrants stay diamonds)."""
    arms = list(range(1, star.n_leaves + 1))
    axes = [xneg, xpos, yneg, ypos]
    for idx in range(4):
        if axes[idx] is not None:
            continue
        partner = axes[idx ^ 1]
        used = {x for x in axes if x is not None}
        free = [x for x in arms if x not in used]
        if free:
            axes[idx] = free[0]
        else:
            axes[idx] = next(x for x in arms if x != partner)
    return Chart(*axes, eps=eps)


def _axis_arms(start_coord, end_coord):
    """(neg, pos) arms for one particle: start arm to destination arm; a
    center endpoint defers to the other endpoint's arm."""
    (sa, sd), (ea, ed) = start_coord, end_coord
    s_arm = sa if sd > TOL else None
    e_arm = ea if ed > TOL else None
    neg = s_arm if s_arm is not None else e_arm
    pos = e_arm if (e_arm is not None and e_arm != neg) else None
    return neg, pos


def _path_builder(star, eps, charts_polys, ordered=True):
    """Deferred BiPath assembly from per-leg (chart, PlanarPath) pairs, with
    time allocated proportionally to l2 arc length across all legs."""
    def build():
        l2 = sum(p.l2_length for _, p in charts_polys)
        total = l2 if l2 > TOL else float(len(charts_polys))
        legs = []
        t = 0.0
        for chart, ppath in charts_polys:
            share = (ppath.l2_length if l2 > TOL else 1.0) / total
            for (u0, u1, ca, cb) in polyline_to_legs(star, chart, ppath.points):
                legs.append((t + u0 * share, t + u1 * share, ca, cb))
            t += share
        t0, _, ca, cb = legs[-1]
        legs[-1] = (t0, 1.0, ca, cb)
        return BiPath.from_legs(star, eps, ordered, legs)
    return build


def _mk_candidate(star, eps, kind, particle, switch_arm, legs, partner_arm=None):
    """legs: (chart, l2-taut PlanarPath, l1 minimum) per leg."""
    charts_polys = [(ch, pp) for (ch, pp, _) in legs]
    return Candidate(
        kind=kind, particle=particle, switch_arm=switch_arm,
        partner_arm=partner_arm,
        l1_length=sum(l1 for (_, _, l1) in legs),
        l2_length=sum(pp.l2_length for (_, pp, _) in legs),
        polylines=tuple(tuple(pp.points) for (_, pp, _) in legs),
        _realize=_path_builder(star, eps, charts_polys),
    )


def _direct_candidate(star, eps, a, b) -> Candidate:
    chart = chart_of(star, a, b, eps)
    A, B = embed(star, chart, a), embed(star, chart, b)
    g2, l1 = taut_best(chart, A, B)
    return _mk_candidate(star, eps, "direct", None, None, [(chart, g2, l1)])


def _type_candidate_x4(star, eps, a, b, particle) -> Candidate:
    chart = chart_of(star, a, b, eps)
    A, B = embed(star, chart, a), embed(star, chart, b)
    g2, l1 = taut_best(chart, A, B, order=particle)
    return _mk_candidate(star, eps, "type", particle, None, [(chart, g2, l1)])


def _switch_crossing_candidate(star, eps, a, b, particle, arm_k) -> Candidate:
    """Two-leg candidate: ``particle`` parks at depth eps on empty ``arm_k``
    while the other crosses the center (opp and split classes)."""
    center = star.arm_point(1, 0.0)
    park = star.arm_point(arm_k, eps)
    if particle == 1:
        w = OrderedConfig(park, center)
    else:
        w = OrderedConfig(center, park)
    sw, ot = (0, 1) if particle == 1 else (1, 0)
    a_coords = [star.star_coord(p) for p in (a.p1, a.p2)]
    b_coords = [star.star_coord(p) for p in (b.p1, b.p2)]

    # leg 1: switcher start arm -> arm_k; other: start arm -> center
    ax1 = [None, None]
    ax1[sw] = (a_coords[sw][0], arm_k)
    neg_o, _ = _axis_arms(a_coords[ot], (None, 0.0))
    ax1[ot] = (neg_o, None)
    ch1 = _fill_chart(star, ax1[0][0], ax1[0][1], ax1[1][0], ax1[1][1], eps)
    g1, l1_a = taut_best(ch1, embed(star, ch1, a), embed(star, ch1, w))

    # leg 2: switcher arm_k -> destination arm; other: center -> destination
    ax2 = [None, None]
    ax2[sw] = (arm_k, b_coords[sw][0] if b_coords[sw][1] > TOL else None)
    neg_o2, _ = _axis_arms((None, 0.0), b_coords[ot])
    ax2[ot] = (None, neg_o2)
    ch2 = _fill_chart(star, ax2[0][0], ax2[0][1], ax2[1][0], ax2[1][1], eps)
    g2, l1_b = taut_best(ch2, embed(star, ch2, w), embed(star, ch2, b))

    return _mk_candidate(star, eps, "switch", particle, arm_k,
                         [(ch1, g1, l1_a), (ch2, g2, l1_b)])


def _switch_confined_candidate(star, eps, a, b, particle, arm_k,
                               confined_arm) -> Candidate:
    """Single-chart candidate: the confined ``particle`` dodges onto empty
    ``arm_k`` inside one wrap chart while the other crosses."""
    a_coords = [star.star_coord(p) for p in (a.p1, a.p2)]
    b_coords = [star.star_coord(p) for p in (b.p1, b.p2)]
    sw, ot = (0, 1) if particle == 1 else (1, 0)
    ax = [None, None]
    home = confined_arm if confined_arm != 0 else None
    ax[sw] = (home, arm_k)
    ax[ot] = _axis_arms(a_coords[ot], b_coords[ot])
    ch = _fill_chart(star, ax[0][0], ax[0][1], ax[1][0], ax[1][1], eps)
    g2, l1 = taut_best(ch, embed(star, ch, a), embed(star, ch, b))
    return _mk_candidate(star, eps, "switch", particle, arm_k, [(ch, g2, l1)])


def _x1_minus_candidate(star, eps, a, b, home_arm, arm_p2, arm_p1) -> Candidate:
    """Wrap candidate for X1-: particle 2 switches via ``arm_p2``, particle 1
    via ``arm_p1`` (distinct empty arms)."""
    ch = _fill_chart(star, home_arm, arm_p1, home_arm, arm_p2, eps)
    g2, l1 = taut_best(ch, embed(star, ch, a), embed(star, ch, b))
    return _mk_candidate(star, eps, "switch", 2, arm_p2, [(ch, g2, l1)],
                         partner_arm=arm_p1)


def candidates(star: Tree, eps: float, a: OrderedConfig, b: OrderedConfig,
               metric=Metric.L2, cls: StarClass | None = None) -> list[Candidate]:
    """Candidate geodesics for the instance's class (both metric lengths are
    recorded on every candidate; ``metric`` only orders the result)."""
    metric = Metric.parse(metric)
    if cls is None:
        cls = classify(star, eps, a, b)
    k = star.n_leaves
    arms = set(range(1, k + 1))
    empty = sorted(arms - set(cls.arms_occupied))
    out: list[Candidate] = []

    if cls.kind in DIRECT_KINDS:
        out.append(_direct_candidate(star, eps, a, b))
    elif cls.kind is StarClassKind.X4:
        out.append(_type_candidate_x4(star, eps, a, b, 1))
        out.append(_type_candidate_x4(star, eps, a, b, 2))
    elif cls.kind is StarClassKind.X2_MINUS_OPP:
        for particle in (1, 2):
            for arm_k in empty:
                out.append(_switch_crossing_candidate(star, eps, a, b,
                                                      particle, arm_k))
    elif cls.kind is StarClassKind.X2_MINUS_SPLIT:
        for arm_k in empty:
            out.append(_switch_crossing_candidate(star, eps, a, b,
                                                  cls.forced_particle, arm_k))
    elif cls.kind is StarClassKind.X2_MINUS_THREE_ON_ARM:
        p = cls.forced_particle
        conf = _confined_arm(*( [star.star_coord(a.p1), star.star_coord(b.p1)]
                                if p == 1 else
                                [star.star_coord(a.p2), star.star_coord(b.p2)] ))
        for arm_k in empty:
            out.append(_switch_confined_candidate(star, eps, a, b, p, arm_k, conf))
    elif cls.kind is StarClassKind.X1_MINUS:
        home = cls.arms_occupied[0] if cls.arms_occupied else 1
        others = sorted(arms - {home})
        for arm_p2 in others:
            for arm_p1 in others:
                if arm_p1 != arm_p2:
                    out.append(_x1_minus_candidate(star, eps, a, b, home,
                                                   arm_p2, arm_p1))
    out.sort(key=lambda c: (c.length(metric), c.particle or 0, c.switch_arm or 0))
    return out


# --------------------------------------------------------------------- #
# selection rules
# --------------------------------------------------------------------- #

def _next_arm(arm: int, k: int) -> int:
    return arm % k + 1


def _tie(d1: float, d2: float) -> bool:
    return abs(d1 - d2) <= EQ_RTOL * max(1.0, d1, d2)


def _near_tie(d1: float, d2: float) -> bool:
    return abs(d1 - d2) <= NEAR_TIE_FACTOR * EQ_RTOL * max(1.0, d1, d2)


def plan(star: Tree, eps: float, a: OrderedConfig, b: OrderedConfig,
         metric=Metric.L2) -> PlanResult:
    """Plan a geodesic from a to b and report rule cell and cut-locus data.

    Rule ids: on the 3-arm star, 0 covers the unique-geodesic cell and 1 the
    cut locus (X1- and the tied opp class).  With k >= 4 arms, 0 covers
    direct classes plus untied X4 plus the tied opp class, 1 covers X1- and
    tied X4, and 2 covers the remaining orientation switches.
    """
    metric = Metric.parse(metric)
    k = star.n_leaves
    cls = classify(star, eps, a, b)
    cands = candidates(star, eps, a, b, metric, cls)
    by_len = lambda c: c.length(metric)

    eq = None
    near = False
    if cls.kind in DIRECT_KINDS:
        chosen, rule, cut = cands[0], 0, False
    elif cls.kind is StarClassKind.X4:
        d1 = min(by_len(c) for c in cands if c.particle == 1)
        d2 = min(by_len(c) for c in cands if c.particle == 2)
        eq = _tie(d1, d2)
        near = not eq and _near_tie(d1, d2)
        if eq:
            chosen = next(c for c in cands if c.particle == 1)
            rule, cut = 1, True
        else:
            chosen, rule, cut = cands[0], 0, False
    elif cls.kind is StarClassKind.X2_MINUS_OPP:
        d1 = min(by_len(c) for c in cands if c.particle == 1)
        d2 = min(by_len(c) for c in cands if c.particle == 2)
        eq = _tie(d1, d2)
        near = not eq and _near_tie(d1, d2)
        occupied = set(cls.arms_occupied)
        if eq:
            arm_k = next(i for i in range(1, k + 1)
                         if i not in occupied and _next_arm(i, k) in occupied)
            nxt = _next_arm(arm_k, k)
            particle = 1 if star.star_coord(a.p1)[0] == nxt else 2
            chosen = next(c for c in cands
                          if c.particle == particle and c.switch_arm == arm_k)
            rule = 1 if k == 3 else 0
            cut = True
        else:
            particle = 1 if d1 < d2 else 2
            arm_k = min(i for i in range(1, k + 1) if i not in occupied)
            chosen = next(c for c in cands
                          if c.particle == particle and c.switch_arm == arm_k)
            rule = 0 if k == 3 else 2
            cut = k > 3
    elif cls.kind in FORCED_KINDS:
        occupied = set(cls.arms_occupied)
        arm_k = min(i for i in range(1, k + 1) if i not in occupied)
        chosen = next(c for c in cands if c.switch_arm == arm_k)
        rule = 0 if k == 3 else 2
        cut = k > 3
    else:  # X1_MINUS
        home = cls.arms_occupied[0] if cls.arms_occupied else 1
        arm_p2 = _next_arm(home, k)
        arm_p1 = _next_arm(arm_p2, k)
        chosen = next(c for c in cands
                      if c.switch_arm == arm_p2 and c.partner_arm == arm_p1)
        rule, cut = 1, True

    return PlanResult(chosen=chosen, star_class=cls, metric=metric, eq=eq,
                      rule_id=rule, in_cut_locus=cut, near_tie=near,
                      all_candidates=tuple(cands))


def is_in_cut_locus(star: Tree, eps: float, a: OrderedConfig, b: OrderedConfig,
                    metric=Metric.L2) -> bool:
    """True iff multiple geodesics join a to b (per the class rules)."""
    return plan(star, eps, a, b, metric).in_cut_locus
