"""treeplan: exact geodesic motion planning for two robots on metric trees.

Ordered planning (two distinguishable robots kept at least eps apart) is
supported on star graphs in both the l1 and l2 product metrics; unordered
planning (indistinguishable robots, merely non-colliding) is supported on
arbitrary finite trees in the l1 metric.  A brute-force discretized
shortest-path oracle provides independent ground truth.
"""

from .tree import Tree, PointOnTree, TreeStructureError, ShapeError, ArgumentError
from .config import (
    Metric,
    OrderedConfig,
    UnorderedConfig,
    BiPath,
    config_distance,
    path_length,
    min_separation,
    retract_to_feps,
    path_sup_distance,
)
from .star import plan as plan_star, classify, candidates, is_in_cut_locus
from .unordered import (
    plan_unordered, plan_interval, plan_y, plan_any, hull_classify, assign_eset,
)
from .oracle import oracle_shortest, discretize

__all__ = [
    "Tree",
    "PointOnTree",
    "TreeStructureError",
    "ShapeError",
    "ArgumentError",
    "Metric",
    "OrderedConfig",
    "UnorderedConfig",
    "BiPath",
    "config_distance",
    "path_length",
    "min_separation",
    "retract_to_feps",
    "path_sup_distance",
    "plan_star",
    "classify",
    "candidates",
    "is_in_cut_locus",
    "plan_unordered",
    "plan_interval",
    "plan_y",
    "plan_any",
    "hull_classify",
    "assign_eset",
    "oracle_shortest",
    "discretize",
]
