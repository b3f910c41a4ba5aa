#!/usr/bin/env python3
"""Partition and continuity audits over random instances.

Usage: run_audits.py [n]   (default n = 2000 instances per configuration)
"""

import sys

from treeplan import Tree, Metric
from treeplan.audits import (
    audit_partition_ordered, audit_partition_unordered, run_all_continuity,
)
from treeplan.sampling import random_tree
import random


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    print(f"== rule-cell counts over {n} random instance pairs ==")
    for k in (3, 4, 5):
        star = Tree.star([10.0] * k)
        for metric in (Metric.L1, Metric.L2):
            rep = audit_partition_ordered(star, 1.0, metric, n, seed=1)
            print(f"ordered  k={k} {metric.value}: {rep.to_json()['counts']}")
    y = Tree.star([10.0] * 3)
    print(f"unordered 3-star    : {audit_partition_unordered(y, n, 2).to_json()['counts']}")
    tree = random_tree(random.Random(3), max_leaves=8)
    print(f"unordered random    : {audit_partition_unordered(tree, n, 4).to_json()['counts']}")
    interval = Tree.path([5.0, 5.0])
    print(f"unordered interval  : {audit_partition_unordered(interval, n, 5).to_json()['counts']}")

    print("\n== continuity at rule-cell boundaries ==")
    for rep in run_all_continuity():
        print(rep.scenario)
        for (d, cd, sup, same) in rep.rows:
            print(f"  delta={d:<7g} sup_path_distance={sup:.6f} "
                  f"(ratio {sup / cd:.2f}) same_rule={same}")


if __name__ == "__main__":
    main()
