"""Partition and continuity audits over random or boundary instances.

The partition audit samples instance pairs and tallies rule ids (every
instance receives exactly one).  The continuity audits drive the
boundary scenarios the rule construction must survive: a tied two-arm
switch degenerating into the one-arm disagreeing class, the 3-arm star
doubled-white diagram losing its sweeping dot into the center, and a
doubled-arm inner dot reaching the branch vertex on a bigger star.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .tree import Tree
from .config import Metric, OrderedConfig, UnorderedConfig, path_sup_distance
from .star import plan as plan_star
from .unordered import plan_any
from .sampling import random_star_config, random_unordered_config


@dataclass
class PartitionReport:
    counts: dict
    total: int

    @property
    def rule_ids(self):
        return sorted(self.counts)

    def to_json(self):
        return {"counts": {str(k): v for k, v in sorted(self.counts.items())},
                "total": self.total, "rule_ids": self.rule_ids}


def audit_partition_ordered(star: Tree, eps: float, metric, n: int,
                            seed: int) -> PartitionReport:
    rng = random.Random(seed)
    counts = {}
    for _ in range(n):
        a = random_star_config(rng, star, eps)
        b = random_star_config(rng, star, eps)
        rid = plan_star(star, eps, a, b, metric).rule_id
        counts[rid] = counts.get(rid, 0) + 1
    return PartitionReport(counts=counts, total=n)


def audit_partition_unordered(tree: Tree, n: int, seed: int) -> PartitionReport:
    rng = random.Random(seed)
    counts = {}
    for _ in range(n):
        a = random_unordered_config(rng, tree)
        b = random_unordered_config(rng, tree)
        rid = plan_any(tree, a, b).rule_id
        counts[rid] = counts.get(rid, 0) + 1
    return PartitionReport(counts=counts, total=n)


# --------------------------------------------------------------------- #
# continuity scenarios
# --------------------------------------------------------------------- #

@dataclass
class ContinuityReport:
    scenario: str
    rows: list   # (delta, config_distance, sup_path_distance, same_rule)

    def to_json(self):
        return {"scenario": self.scenario,
                "rows": [{"delta": d, "config_distance": cd,
                          "sup_path_distance": s, "same_rule": r}
                         for (d, cd, s, r) in self.rows]}


def audit_tied_switch_to_one_arm(star: Tree, eps: float, deltas,
                                 metric=Metric.L2) -> ContinuityReport:
    """Tied two-arm exchanges approaching the one-arm disagreeing class.

    The limit has both middle points at the center; the approaching family
    places them at depth delta on a second arm (both stay in the tied cell,
    by symmetry), so the rule on that cell must converge to the one-arm
    rule's path.
    """
    u = 2.0 * eps
    v = star.vertex_point(star.star_center)
    a_lim = OrderedConfig(star.arm_point(1, u), v)
    b_lim = OrderedConfig(v, star.arm_point(1, u))
    limit = plan_star(star, eps, a_lim, b_lim, metric)
    rows = []
    for d in deltas:
        p = star.arm_point(3, d)
        a_d = OrderedConfig(star.arm_point(1, u), p)
        b_d = OrderedConfig(p, star.arm_point(1, u))
        res = plan_star(star, eps, a_d, b_d, metric)
        sup = path_sup_distance(res.chosen.path, limit.chosen.path)
        rows.append((d, d, sup, res.rule_id == limit.rule_id))
    return ContinuityReport("tied_switch_to_one_arm", rows)


def audit_y_sweep_to_path(star3: Tree, deltas) -> ContinuityReport:
    """3-arm star doubled-white diagram: the sweeping black dot approaches
    the center, where the diagram becomes a path handled by simultaneous
    uniform motion in the same cell."""
    d2, d3, d4 = 1.5, 2.0, 1.0
    v = star3.vertex_point(star3.star_center)
    doubled_arm = 1
    prev_arm, next_arm = 3, 2
    b = UnorderedConfig.of(star3.arm_point(doubled_arm, d3),
                           star3.arm_point(doubled_arm, d4))
    a_lim = UnorderedConfig.of(v, star3.arm_point(next_arm, d2))
    limit = plan_any(star3, a_lim, b)
    rows = []
    for d in deltas:
        a_d = UnorderedConfig.of(star3.arm_point(prev_arm, d),
                                 star3.arm_point(next_arm, d2))
        res = plan_any(star3, a_d, b)
        sup = path_sup_distance(res.path, limit.path)
        rows.append((d, d, sup, res.rule_id == limit.rule_id))
    return ContinuityReport("y_sweep_to_path", rows)


def audit_inner_dot_to_vertex(star4: Tree, deltas) -> ContinuityReport:
    """Doubled-arm inner dot reaching the branch vertex on a 4-arm star
    (the two-dot diagram degenerates onto its vertex-dot counterpart within
    the same cell)."""
    a = UnorderedConfig.of(star4.arm_point(1, 2.0), star4.arm_point(3, 2.0))
    v = star4.vertex_point(star4.star_center)
    b_lim = UnorderedConfig.of(v, star4.arm_point(2, 3.0))
    limit = plan_any(star4, a, b_lim)
    rows = []
    for d in deltas:
        b_d = UnorderedConfig.of(star4.arm_point(2, d), star4.arm_point(2, 3.0))
        res = plan_any(star4, a, b_d)
        sup = path_sup_distance(res.path, limit.path)
        rows.append((d, d, sup, res.rule_id == limit.rule_id))
    return ContinuityReport("inner_dot_to_vertex", rows)


def run_all_continuity(eps: float = 1.0, deltas=None):
    if deltas is None:
        deltas = [eps / 10, eps / 100, eps / 1000]
    star3 = Tree.star([10.0, 10.0, 10.0])
    star4 = Tree.star([10.0, 10.0, 10.0, 10.0])
    return [
        audit_tied_switch_to_one_arm(star3, eps, deltas, Metric.L2),
        audit_tied_switch_to_one_arm(star4, eps, deltas, Metric.L2),
        audit_tied_switch_to_one_arm(star3, eps, deltas, Metric.L1),
        audit_y_sweep_to_path(star3, deltas),
        audit_inner_dot_to_vertex(star4, deltas),
    ]
